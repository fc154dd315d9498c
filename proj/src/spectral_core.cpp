#include "matineq/spectral_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "matineq/rng.hpp"

namespace matineq {

namespace {

double off_diagonal_frobenius(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace

EigenSystem eigh(const SymMatrix& sym) {
    const int n = sym.dim();
    Matrix a = sym.dense();
    Matrix v = Matrix::identity(n);

    const double norm_f = sym.frobenius_norm();
    const double target = 1e-14 * norm_f;

    // cyclic-by-row Jacobi sweeps
    for (int sweep = 0; sweep < 100 && n > 1; ++sweep) {
        if (off_diagonal_frobenius(a) <= target) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double app = a(p, p);
                const double aqq = a(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                double t;  // tan of the rotation angle
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // A <- J^T A J on rows/columns p, q
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    // stable descending sort; ties keep Jacobi output order
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) > a(j, j); });

    EigenSystem es;
    es.eigenvalues.resize(n);
    es.basis = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        es.eigenvalues[j] = a(order[j], order[j]);
        for (int i = 0; i < n; ++i) es.basis(i, j) = v(i, order[j]);
    }
    return es;
}

std::vector<double> eigenvalues_desc(const SymMatrix& a) { return eigh(a).eigenvalues; }

namespace {

SymMatrix rebuild(const EigenSystem& es, const std::vector<double>& mapped) {
    const int n = static_cast<int>(es.eigenvalues.size());
    Matrix scaled(n, n);  // basis * diag(mapped)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scaled(i, j) = es.basis(i, j) * mapped[j];
    Matrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += scaled(i, k) * es.basis(j, k);
            r(i, j) = s;
        }
    return SymMatrix::from_dense(r);
}

}  // namespace

SymMatrix spectral_map(const SymMatrix& a, const std::function<double(double)>& f) {
    EigenSystem es = eigh(a);
    std::vector<double> mapped(es.eigenvalues.size());
    for (std::size_t i = 0; i < es.eigenvalues.size(); ++i) mapped[i] = f(es.eigenvalues[i]);
    return rebuild(es, mapped);
}

SymMatrix apply_fn(const SymMatrix& a, const PiecewiseFn& f) {
    EigenSystem es = eigh(a);
    const double snap = 1e-12 * (1.0 + (es.eigenvalues.empty()
                                            ? 0.0
                                            : std::max(std::abs(es.eigenvalues.front()),
                                                       std::abs(es.eigenvalues.back()))));
    std::vector<double> mapped(es.eigenvalues.size());
    for (std::size_t i = 0; i < es.eigenvalues.size(); ++i) {
        double x = es.eigenvalues[i];
        // eigensolver rounding must not push a boundary eigenvalue out
        // of the domain (sqrt on a PSD matrix)
        if (f.is_named() && f.tag() == NamedTag::sqrt_fn && x < 0.0 && x >= -snap) x = 0.0;
        mapped[i] = f.evaluate(x);
    }
    return rebuild(es, mapped);
}

SymMatrix abs_matrix(const SymMatrix& a) {
    return spectral_map(a, [](double x) { return std::abs(x); });
}

SymMatrix positive_part(const SymMatrix& a) {
    return spectral_map(a, [](double x) { return std::max(x, 0.0); });
}

bool is_psd(const SymMatrix& a, double tol) {
    const std::vector<double> ev = eigenvalues_desc(a);
    return ev.back() >= -tol;
}

bool ge(const SymMatrix& a, const SymMatrix& b, double tol) {
    check_same_dim(a, b, "ge");
    return is_psd(a - b, tol);
}

double operator_norm(const SymMatrix& a) {
    const std::vector<double> ev = eigenvalues_desc(a);
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

SymMatrix random_sym(int dim, std::uint64_t seed, double scale) {
    if (dim < 1) throw std::invalid_argument("random_sym: dim must be >= 1");
    Rng rng(seed);
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = scale * rng.normal();
    return SymMatrix::from_dense(m);
}

SymMatrix random_psd(int dim, std::uint64_t seed, double scale) {
    if (dim < 1) throw std::invalid_argument("random_psd: dim must be >= 1");
    Rng rng(seed);
    Matrix r(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) r(i, j) = rng.normal();
    Matrix p(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            double s = 0.0;
            for (int k = 0; k < dim; ++k) s += r(i, k) * r(j, k);
            p(i, j) = s;
        }
    SymMatrix out = SymMatrix::from_dense(p);
    const double nrm = operator_norm(out);
    if (nrm > 0.0) out = (scale / nrm) * out;
    return out;
}

}  // namespace matineq
