// PiecewiseFn evaluation, classification, and the CLI spec syntax.

#include <doctest.h>

#include <cmath>

#include "matineq/rng.hpp"
#include "matineq/scalar_fn.hpp"

using namespace matineq;

TEST_SUITE("scalar_fn") {

TEST_CASE("evaluation of named forms and angle sums") {
    CHECK(PiecewiseFn::angle_sum(1.0, {{1.0, 1.0}}).evaluate(2.0) == 3.0);
    CHECK(PiecewiseFn::min1().evaluate(0.5) == 0.5);
    CHECK(PiecewiseFn::min1().evaluate(3.0) == 1.0);
    CHECK(PiecewiseFn::ga(0.0).evaluate(1.0) == 0.5);
    CHECK(PiecewiseFn::sqrt().evaluate(4.0) == 2.0);
    CHECK(PiecewiseFn::square().evaluate(3.0) == 9.0);
    CHECK(PiecewiseFn::frac().evaluate(1.0) == 0.5);
    CHECK(PiecewiseFn::identity().evaluate(-2.5) == -2.5);
}

TEST_CASE("domain violations") {
    CHECK_THROWS_AS(PiecewiseFn::sqrt().evaluate(-0.1), std::domain_error);
    CHECK_THROWS_AS(PiecewiseFn::frac().evaluate(-1.0), std::domain_error);
    CHECK_THROWS_AS(PiecewiseFn::ga(1.0).evaluate(-1.0), std::domain_error);
}

TEST_CASE("angle sum construction rules") {
    CHECK_THROWS_AS(PiecewiseFn::angle_sum(1.0, {{-0.5, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseFn::angle_sum(1.0, {{1.0, 1.0}, {1.0, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseFn::ga(-0.5), std::invalid_argument);
}

TEST_CASE("angle sums are continuous at their kinks") {
    const PiecewiseFn f = PiecewiseFn::angle_sum(0.7, {{0.5, -1.2}, {1.5, 2.0}});
    for (double x0 : {0.5, 1.5}) {
        const double eps = 1e-9;
        const double lo = f.evaluate(x0 - eps);
        const double at = f.evaluate(x0);
        const double hi = f.evaluate(x0 + eps);
        CHECK(std::abs(at - lo) <= 5e-9);
        CHECK(std::abs(hi - at) <= 5e-9);
    }
}

TEST_CASE("classification of the stock examples") {
    const FnClass convex_angle = PiecewiseFn::angle_sum(1.0, {{1.0, 1.0}}).classify();
    CHECK(convex_angle.convex);
    CHECK_FALSE(convex_angle.concave);
    CHECK(convex_angle.monotone_increasing);
    CHECK(convex_angle.zero_at_zero);
    CHECK(convex_angle.nonnegative_on_plus);

    const FnClass min1_angle = PiecewiseFn::angle_sum(1.0, {{1.0, -1.0}}).classify();
    CHECK(min1_angle.concave);
    CHECK_FALSE(min1_angle.convex);
    CHECK(min1_angle.monotone_increasing);

    const FnClass zero = PiecewiseFn::angle_sum(0.0, {}).classify();
    CHECK(zero.convex);
    CHECK(zero.concave);
    CHECK(zero.monotone_increasing);

    const FnClass decreasing = PiecewiseFn::angle_sum(1.0, {{1.0, -2.0}}).classify();
    CHECK_FALSE(decreasing.monotone_increasing);
    CHECK_FALSE(decreasing.nonnegative_on_plus);  // goes negative past x=2

    CHECK(PiecewiseFn::sqrt().classify().concave);
    CHECK(PiecewiseFn::square().classify().convex);
    CHECK(PiecewiseFn::frac().classify().concave);
    CHECK(PiecewiseFn::ga(0.5).classify().convex);
    CHECK(PiecewiseFn::min1().classify().concave);
}

TEST_CASE("strict monotonicity") {
    CHECK(PiecewiseFn::identity().strictly_increasing());
    CHECK(PiecewiseFn::ga(0.0).strictly_increasing());
    CHECK_FALSE(PiecewiseFn::min1().strictly_increasing());
    CHECK(PiecewiseFn::angle_sum(1.0, {{1.0, 1.0}}).strictly_increasing());
    CHECK_FALSE(PiecewiseFn::angle_sum(1.0, {{1.0, -1.0}}).strictly_increasing());
    CHECK_FALSE(PiecewiseFn::angle_sum(0.0, {{1.0, 1.0}}).strictly_increasing());
}

TEST_CASE("classified convexity matches the chord test") {
    Rng rng(202);
    for (int trial = 0; trial < 40; ++trial) {
        const int nk = rng.uniform_int(1, 3);
        std::vector<Kink> kinks;
        for (int i = 0; i < nk; ++i) kinks.push_back({rng.uniform(0.0, 2.0), rng.uniform(-2.0, 2.0)});
        PiecewiseFn f = PiecewiseFn::identity();
        try {
            f = PiecewiseFn::angle_sum(rng.uniform(-1.0, 2.0), kinks);
        } catch (const std::invalid_argument&) {
            continue;  // coincident kink positions
        }
        const FnClass cls = f.classify();
        for (int i = 0; i < 1000; ++i) {
            const double x = rng.uniform(0.0, 3.0);
            const double y = rng.uniform(0.0, 3.0);
            const double th = rng.uniform(0.0, 1.0);
            const double mid = f.evaluate(th * x + (1.0 - th) * y);
            const double chord = th * f.evaluate(x) + (1.0 - th) * f.evaluate(y);
            if (cls.convex) CHECK(mid <= chord + 1e-12);
            if (cls.concave) CHECK(mid >= chord - 1e-12);
        }
    }
}

TEST_CASE("ga relates to frac by ga(x) = (a+1)x - frac(x)") {
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        const double a = rng.uniform(0.0, 3.0);
        const double x = rng.uniform(0.0, 5.0);
        const double lhs = PiecewiseFn::ga(a).evaluate(x);
        const double rhs = a * x + x - PiecewiseFn::frac().evaluate(x);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("parse round-trips the CLI syntax") {
    for (const char* spec : {"identity", "sqrt", "square", "min1", "frac"}) {
        const PiecewiseFn f = PiecewiseFn::parse(spec);
        CHECK(f.to_string() == spec);
    }
    const PiecewiseFn ga = PiecewiseFn::parse("ga:a=0.5");
    CHECK(ga.is_named());
    CHECK(ga.param() == 0.5);
    CHECK(PiecewiseFn::parse(ga.to_string()).evaluate(2.0) == ga.evaluate(2.0));

    const PiecewiseFn angle = PiecewiseFn::parse("angle:a=1,b=1,x0=1,b=-0.5,x0=2");
    CHECK(angle.is_angle_sum());
    CHECK(angle.slope() == 1.0);
    REQUIRE(angle.kinks().size() == 2);
    CHECK(angle.kinks()[0].x0 == 1.0);
    CHECK(angle.kinks()[1].b == -0.5);
    CHECK(PiecewiseFn::parse(angle.to_string()).evaluate(3.0) == angle.evaluate(3.0));
}

TEST_CASE("parse rejects malformed specs") {
    CHECK_THROWS_AS(PiecewiseFn::parse("cube"), std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseFn::parse("angle:b=1"), std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseFn::parse("angle:a=1,b=1"), std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseFn::parse("angle:a=1,b=x,x0=1"), std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseFn::parse("ga:a=0.5,b=1"), std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseFn::parse("ga:x=0.5"), std::invalid_argument);
}

TEST_CASE("adding angle sums merges kinks") {
    const PiecewiseFn f = PiecewiseFn::angle_sum(1.0, {{1.0, 1.0}});
    const PiecewiseFn g = PiecewiseFn::angle_sum(0.5, {{1.0, 2.0}, {2.0, 1.0}});
    const PiecewiseFn s = add_angle_sums(f, g);
    CHECK(s.slope() == 1.5);
    REQUIRE(s.kinks().size() == 2);
    CHECK(s.kinks()[0].b == 3.0);
    for (double x : {0.0, 0.5, 1.0, 1.7, 2.5})
        CHECK(s.evaluate(x) == doctest::Approx(f.evaluate(x) + g.evaluate(x)).epsilon(1e-14));
    CHECK_THROWS_AS(add_angle_sums(f, PiecewiseFn::min1()), std::invalid_argument);
}

}  // TEST_SUITE
