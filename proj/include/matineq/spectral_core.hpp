// spectral_core.hpp — eigendecomposition and spectral function calculus.
//
// eigh() runs cyclic Jacobi sweeps until the off-diagonal Frobenius norm
// drops below 1e-14 * ||A||_F (at most 100 sweeps), then sorts eigenpairs
// non-increasing with a stable sort.  Everything else in the module is a
// spectral map: rebuild U f(Lambda) U^T from the decomposition.

#pragma once

#include <functional>
#include <vector>

#include "matineq/matrix.hpp"
#include "matineq/scalar_fn.hpp"

namespace matineq {

// Eigenvalues sorted non-increasing; basis column j is the eigenvector of
// eigenvalues[j].  basis is orthogonal and A = basis * diag * basis^T.
struct EigenSystem {
    std::vector<double> eigenvalues;
    Matrix basis;
};

EigenSystem eigh(const SymMatrix& a);

// lambda-down(A): eigenvalues sorted non-increasing
std::vector<double> eigenvalues_desc(const SymMatrix& a);

// U f(Lambda) U^T for an arbitrary scalar map (total on the spectrum)
SymMatrix spectral_map(const SymMatrix& a, const std::function<double(double)>& f);

// Spectral calculus with a PiecewiseFn.  Eigenvalues within
// 1e-12 * (1 + ||A||) of the function's domain boundary are snapped onto
// it (eigensolver rounding must not turn a PSD matrix into a domain
// error for sqrt); genuinely out-of-domain eigenvalues throw.
SymMatrix apply_fn(const SymMatrix& a, const PiecewiseFn& f);

// |A| = (A^2)^{1/2}; PSD, commutes with A
SymMatrix abs_matrix(const SymMatrix& a);

// A^+ = (A + |A|)/2; eigenvalues max(lambda, 0)
SymMatrix positive_part(const SymMatrix& a);

// min eigenvalue of A (resp. A - B) >= -tol
bool is_psd(const SymMatrix& a, double tol);
bool ge(const SymMatrix& a, const SymMatrix& b, double tol);

// operator norm = max |eigenvalue|
double operator_norm(const SymMatrix& a);

// Deterministic generators.  random_sym symmetrises a matrix of
// N(0, scale^2) entries; random_psd forms R R^T from standard-normal R
// and rescales so the operator norm equals scale.
SymMatrix random_sym(int dim, std::uint64_t seed, double scale);
SymMatrix random_psd(int dim, std::uint64_t seed, double scale);

}  // namespace matineq
