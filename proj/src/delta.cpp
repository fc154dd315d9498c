#include "matineq/delta.hpp"

#include <algorithm>
#include <cmath>

namespace matineq {

double default_cluster_tol(const SymMatrix& a) { return 1e-8 * (1.0 + operator_norm(a)); }

std::vector<double> prefix_sums(const std::vector<double>& v) {
    std::vector<double> s(v.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        acc += v[i];
        s[i] = acc;
    }
    return s;
}

DeltaVector delta(const SymMatrix& c, const SymMatrix& a, double cluster_tol) {
    check_same_dim(c, a, "delta");
    if (cluster_tol < 0.0) throw std::invalid_argument("delta: cluster_tol must be >= 0");

    const int n = a.dim();
    EigenSystem es = eigh(a);

    DeltaVector d;
    d.values.reserve(n);
    d.basis_used = es.basis;

    int start = 0;
    while (start < n) {
        int end = start + 1;  // exclusive
        while (end < n && es.eigenvalues[end - 1] - es.eigenvalues[end] <= cluster_tol) ++end;
        const int m = end - start;

        double mean = 0.0;
        for (int i = start; i < end; ++i) mean += es.eigenvalues[i];
        mean /= m;
        d.clusters.push_back({mean, m});

        if (m == 1) {
            // diagonal entry of C in A's eigenbasis
            double v = 0.0;
            for (int i = 0; i < n; ++i) {
                double ci = 0.0;
                for (int j = 0; j < n; ++j) ci += c(i, j) * es.basis(j, start);
                v += es.basis(i, start) * ci;
            }
            d.values.push_back(v);
            ++start;
            continue;
        }

        // compression of C onto the cluster's eigenspace
        Matrix q(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) q(i, j) = es.basis(i, start + j);
        Matrix cq(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                double s = 0.0;
                for (int k = 0; k < n; ++k) s += c(i, k) * q(k, j);
                cq(i, j) = s;
            }
        Matrix comp(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                double s = 0.0;
                for (int k = 0; k < n; ++k) s += q(k, i) * cq(k, j);
                comp(i, j) = s;
            }
        EigenSystem block = eigh(SymMatrix::from_dense(comp));
        for (int j = 0; j < m; ++j) d.values.push_back(block.eigenvalues[j]);

        // rotate the cluster's basis columns so C is diagonal there too
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                double s = 0.0;
                for (int k = 0; k < m; ++k) s += q(i, k) * block.basis(k, j);
                d.basis_used(i, start + j) = s;
            }
        start = end;
    }
    return d;
}

DeltaVector delta(const SymMatrix& c, const SymMatrix& a) {
    return delta(c, a, default_cluster_tol(a));
}

double default_fd_step(const SymMatrix& c, const SymMatrix& a) {
    return 1e-6 * (1.0 + operator_norm(a)) / (1.0 + operator_norm(c));
}

std::vector<double> delta_fd_oracle(const SymMatrix& c, const SymMatrix& a, double t) {
    check_same_dim(c, a, "delta_fd_oracle");
    if (t <= 0.0) throw std::invalid_argument("delta_fd_oracle: t must be > 0");
    const std::vector<double> base = prefix_sums(eigenvalues_desc(a));
    const std::vector<double> bumped = prefix_sums(eigenvalues_desc(a + t * c));
    std::vector<double> out(base.size());
    double prev = 0.0;
    for (std::size_t k = 0; k < base.size(); ++k) {
        const double dk = (bumped[k] - base[k]) / t;
        out[k] = dk - prev;
        prev = dk;
    }
    return out;
}

namespace {

double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

}  // namespace

CorollaryReport corollary_checks(const SymMatrix& g, const SymMatrix& c, const PiecewiseFn& f,
                                 double a, double tol) {
    check_same_dim(g, c, "corollary_checks");
    if (!f.classify().monotone_increasing)
        throw std::invalid_argument("corollary_checks: f must be monotone increasing");
    if (a < 0.0) throw std::invalid_argument("corollary_checks: a must be >= 0");

    CorollaryReport r;
    const SymMatrix fg = apply_fn(g, f);

    // delta(f(G);G) = f(lambda-down(G))
    const std::vector<double> lam_g = eigenvalues_desc(g);
    std::vector<double> f_lam(lam_g.size());
    for (std::size_t i = 0; i < lam_g.size(); ++i) f_lam[i] = f.evaluate(lam_g[i]);
    r.identity_map_gap = max_abs_diff(delta(fg, g).values, f_lam);
    r.identity_map_ok = r.identity_map_gap <= tol;

    // sorted delta(C;G) strongly majorised by lambda-down(C)
    const DeltaVector dc = delta(c, g);
    const MajReport schur = strong_majorize(dc.values, eigenvalues_desc(c), tol);
    r.schur_margin = schur.worst_margin;
    r.schur_ok = schur.holds;

    // psums delta(C;G) + a*psums f(lambda(G)) = psums delta(C + a f(G); G)
    std::vector<double> shifted = prefix_sums(dc.values);
    const std::vector<double> f_sums = prefix_sums(f_lam);
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += a * f_sums[i];
    r.shift_linearity_gap =
        max_abs_diff(shifted, prefix_sums(delta(c + a * fg, g).values));
    r.shift_linearity_ok = r.shift_linearity_gap <= tol;

    // psums delta(C; f(G)) = psums delta(C;G), f strictly increasing
    r.reparam_applicable = f.strictly_increasing();
    if (r.reparam_applicable) {
        r.reparam_gap = max_abs_diff(prefix_sums(delta(c, fg).values), prefix_sums(dc.values));
        r.reparam_invariance_ok = r.reparam_gap <= tol;
    }
    return r;
}

Prop4bReport check_prop4b(const SymMatrix& g, const SymMatrix& c, const PiecewiseFn& f1,
                          const PiecewiseFn& f2, const std::vector<double>& a_grid, double tol) {
    check_same_dim(g, c, "check_prop4b");
    if (!f1.classify().monotone_increasing || !f2.classify().monotone_increasing)
        throw std::invalid_argument("check_prop4b: f1 and f2 must be monotone increasing");
    for (double a : a_grid)
        if (a < 0.0) throw std::invalid_argument("check_prop4b: grid values must be >= 0");

    const SymMatrix a_mat = apply_fn(g, f1);
    const SymMatrix b_mat = apply_fn(g, f2);

    Prop4bReport r;
    r.a_grid = a_grid;
    r.norm_route = true;
    r.delta_route = true;
    for (double a : a_grid) {
        const SymMatrix left = a * a_mat + b_mat;
        const SymMatrix right = a * a_mat + c;
        const bool norm_ok = weak_majorize(eigenvalues_desc(left), eigenvalues_desc(right), tol).holds;
        const bool delta_ok =
            dominated_weak_majorize(delta(left, g).values, delta(right, g).values, tol).holds;
        r.norm_route_per_a.push_back(norm_ok);
        r.delta_route_per_a.push_back(delta_ok);
        r.norm_route = r.norm_route && norm_ok;
        r.delta_route = r.delta_route && delta_ok;
    }
    r.delta_base_report = dominated_weak_majorize(delta(b_mat, g).values, delta(c, g).values, tol);
    r.delta_base = r.delta_base_report.holds;
    r.consistent = (r.norm_route == r.delta_base) && (r.delta_base == r.delta_route);
    return r;
}

}  // namespace matineq
