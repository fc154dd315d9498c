// Order relations, Ky Fan norms, and report serialisation.

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "matineq/inequality_lab.hpp"
#include "matineq/json_io.hpp"
#include "matineq/majorization.hpp"
#include "matineq/rng.hpp"
#include "matineq/spectral_core.hpp"

using namespace matineq;

TEST_SUITE("majorization") {

TEST_CASE("weak majorisation basics") {
    CHECK(weak_majorize({1.0, 1.0}, {2.0, 0.0}, 0.0).holds);

    const MajReport r = weak_majorize({3.0, 0.0}, {2.0, 2.0}, 0.0);
    CHECK_FALSE(r.holds);
    CHECK(r.worst_k == 1);
    CHECK(r.worst_margin == -1.0);

    CHECK_THROWS_AS(weak_majorize({1.0}, {1.0, 2.0}, 0.0), std::invalid_argument);
}

TEST_CASE("weak majorisation on the question-1 spectra") {
    // lambda(g(A)-g(B)) vs lambda(g(|A-B|)): the claimed direction fails
    // at k=1 because 0.65010 < 0.65249
    const PiecewiseFn g = fixtures::q1_fn();
    const SymMatrix a = fixtures::q1_a();
    const SymMatrix b = fixtures::q1_b();
    const std::vector<double> lhs = singular_values(apply_fn(abs_matrix(a - b), g));
    const std::vector<double> rhs = singular_values(apply_fn(a, g) - apply_fn(b, g));
    const MajReport r = weak_majorize(lhs, rhs, 1e-9);
    CHECK_FALSE(r.holds);
    CHECK(r.worst_k == 1);
    CHECK(std::abs(r.rhs_partial_sums[0] - 0.65010) <= 5e-5);
    CHECK(std::abs(r.lhs_partial_sums[0] - 0.65249) <= 5e-5);
}

TEST_CASE("dominated weak majorisation ignores sorting") {
    const MajReport violated =
        dominated_weak_majorize({0.0, 0.0, 0.0}, {-0.00018194, 0.2573, 0.04}, 1e-12);
    CHECK_FALSE(violated.holds);
    CHECK(violated.worst_k == 1);

    const std::vector<double> x = {0.4, -0.2, 0.1};
    const MajReport same = dominated_weak_majorize(x, x, 0.0);
    CHECK(same.holds);
    CHECK(same.worst_margin == 0.0);

    std::vector<double> bumped = x;
    bumped[0] += 1.0;
    CHECK(dominated_weak_majorize(x, bumped, 0.0).holds);
}

TEST_CASE("dominated weak and weak are different relations") {
    // x = (1,0), y = (0,1): unsorted prefix comparison fails, sorted holds
    CHECK_FALSE(dominated_weak_majorize({1.0, 0.0}, {0.0, 1.0}, 0.0).holds);
    CHECK(weak_majorize({1.0, 0.0}, {0.0, 1.0}, 0.0).holds);
}

TEST_CASE("strong majorisation") {
    CHECK_FALSE(strong_majorize({1.0, 1.0}, {2.0, 1.0}, 1e-12).holds);  // sums differ
    CHECK(strong_majorize({2.0, 1.0, 0.5}, {0.5, 2.0, 1.0}, 0.0).holds);  // permutation

    // diagonal of a symmetric matrix vs its spectrum, brute-forced over
    // random draws
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const SymMatrix c = random_sym(4, seed, 1.0);
        std::vector<double> diag(4);
        for (int i = 0; i < 4; ++i) diag[i] = c(i, i);
        CHECK(strong_majorize(diag, eigenvalues_desc(c), 1e-9).holds);
    }
}

TEST_CASE("appending a common smallest entry preserves the weak verdict") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> x(4), y(4);
        for (int i = 0; i < 4; ++i) {
            x[i] = rng.uniform(-1.0, 1.0);
            y[i] = rng.uniform(-1.0, 1.0);
        }
        const bool before = weak_majorize(x, y, 1e-12).holds;
        const double tail = std::min(*std::min_element(x.begin(), x.end()),
                                     *std::min_element(y.begin(), y.end())) -
                            1.0;
        x.push_back(tail);
        y.push_back(tail);
        CHECK(weak_majorize(x, y, 1e-12).holds == before);
    }
}

TEST_CASE("ky fan norms") {
    const SymMatrix d = SymMatrix::diagonal({3.0, 1.0, 2.0});
    CHECK(ky_fan_norm(d, 2) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(ky_fan_norm(d, 3) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(operator_norm(d) == doctest::Approx(ky_fan_norm(d, 1)).epsilon(1e-14));
    CHECK_THROWS_AS(ky_fan_norm(d, 0), std::invalid_argument);
    CHECK_THROWS_AS(ky_fan_norm(d, 4), std::invalid_argument);

    // trace norm is the sum of absolute eigenvalues
    const SymMatrix s = SymMatrix::diagonal({-2.0, 1.0, 0.5});
    CHECK(ky_fan_norm(s, 3) == doctest::Approx(3.5).epsilon(1e-14));
}

TEST_CASE("operator norm of the question-1 difference image") {
    const SymMatrix ga = apply_fn(fixtures::q1_a(), fixtures::q1_fn());
    const SymMatrix gb = apply_fn(fixtures::q1_b(), fixtures::q1_fn());
    CHECK(std::abs(operator_norm(ga - gb) - 0.65010) <= 5e-5);
}

TEST_CASE("ky fan dominance agrees with weak majorisation of singular values") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int dim = 2 + static_cast<int>(seed % 5);
        const SymMatrix a = random_sym(dim, seed, 1.0);
        const SymMatrix b = random_sym(dim, seed + 500, 1.0);
        bool all_ky_fan = true;
        for (int k = 1; k <= dim; ++k)
            if (ky_fan_norm(a, k) > ky_fan_norm(b, k)) all_ky_fan = false;
        CHECK(all_ky_fan == weak_majorize(singular_values(a), singular_values(b), 0.0).holds);
    }
}

TEST_CASE("default tolerance scales with the data") {
    CHECK(default_margin_tol({0.0}, {0.0}) == doctest::Approx(1e-9));
    CHECK(default_margin_tol({1e6}, {0.0}) == doctest::Approx(1e-9 * (1.0 + 1e6)));
    const MajReport r = weak_majorize({1.0 + 1e-12, 1.0}, {1.0, 1.0});
    CHECK(r.holds);  // rounding-level excess is absorbed
}

TEST_CASE("report JSON carries the typed fields") {
    const MajReport r = weak_majorize({1.0, 1.0}, {2.0, 0.0}, 1e-12);
    const nlohmann::json j = maj_report_to_json(r);
    CHECK(j.at("relation") == "weak_majorize");
    CHECK(j.at("holds") == true);
    CHECK(j.at("lhs_partial_sums").size() == 2);
    CHECK(j.at("rhs_partial_sums")[1] == doctest::Approx(2.0));
    CHECK(j.at("worst_k").is_number_integer());
    CHECK(j.at("worst_margin").is_number());
}

}  // TEST_SUITE
