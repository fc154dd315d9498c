#include "matineq/majorization.hpp"

#include <algorithm>
#include <cmath>

#include "matineq/spectral_core.hpp"

namespace matineq {

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::weak_majorize: return "weak_majorize";
        case Relation::dominated_weak: return "dominated_weak";
        case Relation::strong_majorize: return "strong_majorize";
        case Relation::entrywise_ge: return "entrywise_ge";
    }
    return "?";
}

namespace {

std::vector<double> sorted_desc(std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

std::vector<double> psums(const std::vector<double>& v) {
    std::vector<double> s(v.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        acc += v[i];
        s[i] = acc;
    }
    return s;
}

void check_lengths(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("majorization: length mismatch");
    if (x.empty()) throw std::invalid_argument("majorization: empty vectors");
}

// worst margin of "lhs_k <= rhs_k for all k" over the given sequences
MajReport compare(Relation rel, std::vector<double> lhs, std::vector<double> rhs, double tol) {
    MajReport r;
    r.relation = rel;
    r.lhs_partial_sums = std::move(lhs);
    r.rhs_partial_sums = std::move(rhs);
    r.tol = tol;
    r.worst_margin = r.rhs_partial_sums[0] - r.lhs_partial_sums[0];
    r.worst_k = 1;
    for (std::size_t k = 1; k < r.lhs_partial_sums.size(); ++k) {
        const double m = r.rhs_partial_sums[k] - r.lhs_partial_sums[k];
        if (m < r.worst_margin) {
            r.worst_margin = m;
            r.worst_k = static_cast<int>(k) + 1;
        }
    }
    r.holds = r.worst_margin >= -tol;
    return r;
}

}  // namespace

double default_margin_tol(const std::vector<double>& lhs_sums, const std::vector<double>& rhs_sums) {
    double m = 0.0;
    for (double v : lhs_sums) m = std::max(m, std::abs(v));
    for (double v : rhs_sums) m = std::max(m, std::abs(v));
    return 1e-9 * (1.0 + m);
}

MajReport weak_majorize(const std::vector<double>& x, const std::vector<double>& y, double tol) {
    check_lengths(x, y);
    return compare(Relation::weak_majorize, psums(sorted_desc(x)), psums(sorted_desc(y)), tol);
}

MajReport weak_majorize(const std::vector<double>& x, const std::vector<double>& y) {
    check_lengths(x, y);
    auto ls = psums(sorted_desc(x));
    auto rs = psums(sorted_desc(y));
    const double tol = default_margin_tol(ls, rs);
    return compare(Relation::weak_majorize, std::move(ls), std::move(rs), tol);
}

MajReport dominated_weak_majorize(const std::vector<double>& x, const std::vector<double>& y, double tol) {
    check_lengths(x, y);
    return compare(Relation::dominated_weak, psums(x), psums(y), tol);
}

MajReport dominated_weak_majorize(const std::vector<double>& x, const std::vector<double>& y) {
    check_lengths(x, y);
    auto ls = psums(x);
    auto rs = psums(y);
    const double tol = default_margin_tol(ls, rs);
    return compare(Relation::dominated_weak, std::move(ls), std::move(rs), tol);
}

MajReport strong_majorize(const std::vector<double>& x, const std::vector<double>& y, double tol) {
    check_lengths(x, y);
    MajReport r = compare(Relation::strong_majorize, psums(sorted_desc(x)), psums(sorted_desc(y)), tol);
    // total sums must agree in both directions
    const double reverse = r.lhs_partial_sums.back() - r.rhs_partial_sums.back();
    if (reverse < r.worst_margin) {
        r.worst_margin = reverse;
        r.worst_k = static_cast<int>(r.lhs_partial_sums.size());
        r.holds = r.worst_margin >= -tol;
    }
    return r;
}

MajReport strong_majorize(const std::vector<double>& x, const std::vector<double>& y) {
    auto ls = psums(sorted_desc(x));
    auto rs = psums(sorted_desc(y));
    return strong_majorize(x, y, default_margin_tol(ls, rs));
}

MajReport entrywise_dominated(const std::vector<double>& lhs, const std::vector<double>& rhs, double tol) {
    check_lengths(lhs, rhs);
    return compare(Relation::entrywise_ge, lhs, rhs, tol);
}

MajReport entrywise_dominated(const std::vector<double>& lhs, const std::vector<double>& rhs) {
    check_lengths(lhs, rhs);
    return compare(Relation::entrywise_ge, lhs, rhs, default_margin_tol(lhs, rhs));
}

std::vector<double> singular_values(const SymMatrix& a) {
    std::vector<double> sv = eigenvalues_desc(a);
    for (double& v : sv) v = std::abs(v);
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

double ky_fan_norm(const SymMatrix& a, int k) {
    if (k < 1 || k > a.dim()) throw std::invalid_argument("ky_fan_norm: k out of range");
    const std::vector<double> sv = singular_values(a);
    double s = 0.0;
    for (int i = 0; i < k; ++i) s += sv[i];
    return s;
}

}  // namespace matineq
