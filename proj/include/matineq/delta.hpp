// delta.hpp — the dominated spectral derivative vector delta(C;A).
//
// Entry k of the prefix-sum of delta(C;A) is the one-sided derivative at
// t=0 of the sum of the k largest eigenvalues of A + tC.  Concretely:
// diagonalise A descending, group its eigenvalues into clusters (gap <=
// cluster_tol), compress C onto each cluster's eigenspace, diagonalise
// the compression, and concatenate the block spectra in cluster order.
// For simple spectra this is just Diag(U^T C U); the block construction
// resolves the basis ambiguity on degenerate eigenspaces.
//
// delta_fd_oracle is the independent finite-difference route to the same
// prefix sums; the two must agree and the tests hold them to it.

#pragma once

#include <vector>

#include "matineq/matrix.hpp"
#include "matineq/scalar_fn.hpp"
#include "matineq/spectral_core.hpp"
#include "matineq/majorization.hpp"

namespace matineq {

struct Cluster {
    double eigenvalue;  // mean eigenvalue of A over the cluster
    int multiplicity;
};

struct DeltaVector {
    std::vector<double> values;     // UNSORTED; order carries the relation
    std::vector<Cluster> clusters;  // clustering of A's spectrum that produced it
    Matrix basis_used;              // A diagonal descending here; Diag(B^T C B) == values
};

double default_cluster_tol(const SymMatrix& a);  // 1e-8 * (1 + ||A||)

DeltaVector delta(const SymMatrix& c, const SymMatrix& a, double cluster_tol);
DeltaVector delta(const SymMatrix& c, const SymMatrix& a);

std::vector<double> prefix_sums(const std::vector<double>& v);

// One-sided difference quotients of prefix eigenvalue sums of A + tC,
// returned as per-entry first differences (comparable to DeltaVector
// values prefix-sum-wise).  t must be > 0.
std::vector<double> delta_fd_oracle(const SymMatrix& c, const SymMatrix& a, double t);
double default_fd_step(const SymMatrix& c, const SymMatrix& a);  // 1e-6*(1+||A||)/(1+||C||)

// Consequences of the diagonal-entry characterisation, each checked
// within tol on a concrete instance:
//   identity_map        delta(f(G);G) equals f applied to lambda-down(G)
//   schur               sorted delta(C;G) strongly majorised by lambda-down(C)
//   shift_linearity     psums delta(C;G) + a*psums lambda-down(f(G))
//                       equal psums delta(C + a f(G); G)
//   reparam_invariance  psums delta(C; f(G)) equal psums delta(C;G)
//                       (needs strictly increasing f; else not applicable)
struct CorollaryReport {
    bool identity_map_ok = false;
    bool schur_ok = false;
    bool shift_linearity_ok = false;
    bool reparam_invariance_ok = false;
    bool reparam_applicable = false;
    double identity_map_gap = 0.0;  // worst absolute deviations
    double schur_margin = 0.0;      // worst strong-majorisation margin
    double shift_linearity_gap = 0.0;
    double reparam_gap = 0.0;
    bool all_ok() const {
        return identity_map_ok && schur_ok && shift_linearity_ok &&
               (!reparam_applicable || reparam_invariance_ok);
    }
};

CorollaryReport corollary_checks(const SymMatrix& g, const SymMatrix& c, const PiecewiseFn& f,
                                 double a, double tol);

// Equivalence of three statements for A = f1(G), B = f2(G):
//   norm_route   lambda(aA+B) ≺_w lambda(aA+C) for all a >= 0
//   delta_base   delta(B;G) ≺_dw delta(C;G)
//   delta_route  delta(aA+B;G) ≺_dw delta(aA+C;G) for all a >= 0
// The quantified statements are evaluated on the finite a_grid; the base
// statement is exact.
struct Prop4bReport {
    std::vector<double> a_grid;
    std::vector<bool> norm_route_per_a;
    std::vector<bool> delta_route_per_a;
    bool norm_route = false;
    bool delta_base = false;
    bool delta_route = false;
    MajReport delta_base_report;
    bool consistent = false;  // the three verdicts agree
};

Prop4bReport check_prop4b(const SymMatrix& g, const SymMatrix& c, const PiecewiseFn& f1,
                          const PiecewiseFn& f2, const std::vector<double>& a_grid, double tol);

}  // namespace matineq
