// majorization.hpp — vector order relations and Ky Fan norms.
//
// Every relation is framed as "lhs is dominated by rhs": the report holds
// iff min_k (rhs_k - lhs_k) >= -tol over the compared sequences.  For the
// prefix-sum relations the compared sequences are partial sums; for the
// entrywise relation they are the entries themselves.

#pragma once

#include <string>
#include <vector>

#include "matineq/matrix.hpp"

namespace matineq {

enum class Relation {
    weak_majorize,    // prefix sums after sorting both sides descending
    dominated_weak,   // prefix sums in the given order, no sorting
    strong_majorize,  // weak majorisation plus total-sum equality
    entrywise_ge,     // rhs >= lhs entry by entry (no sums)
};

std::string relation_name(Relation r);

struct MajReport {
    Relation relation = Relation::weak_majorize;
    std::vector<double> lhs_partial_sums;  // raw entries for entrywise_ge
    std::vector<double> rhs_partial_sums;
    bool holds = false;
    double worst_margin = 0.0;  // min over k of rhs - lhs; negative = violated
    int worst_k = 0;            // 1-based index attaining worst_margin
    double tol = 0.0;           // tolerance the verdict was taken at
};

// Default tolerance: 1e-9 * (1 + largest compared magnitude).
double default_margin_tol(const std::vector<double>& lhs_sums, const std::vector<double>& rhs_sums);

// x ≺_w y : prefix sums of x sorted descending vs. y sorted descending.
MajReport weak_majorize(const std::vector<double>& x, const std::vector<double>& y, double tol);
MajReport weak_majorize(const std::vector<double>& x, const std::vector<double>& y);

// x ≺_dw y : prefix sums in the stated order; strictly stronger than ≺_w
// of the sorted vectors.
MajReport dominated_weak_majorize(const std::vector<double>& x, const std::vector<double>& y, double tol);
MajReport dominated_weak_majorize(const std::vector<double>& x, const std::vector<double>& y);

// x ≺ y : weak majorisation and |sum(x) - sum(y)| <= tol.
MajReport strong_majorize(const std::vector<double>& x, const std::vector<double>& y, double tol);
MajReport strong_majorize(const std::vector<double>& x, const std::vector<double>& y);

// lhs_k <= rhs_k for every k (vectors compared as given).
MajReport entrywise_dominated(const std::vector<double>& lhs, const std::vector<double>& rhs, double tol);
MajReport entrywise_dominated(const std::vector<double>& lhs, const std::vector<double>& rhs);

// Singular values of a symmetric matrix: |eigenvalues| sorted descending.
std::vector<double> singular_values(const SymMatrix& a);

// Sum of the k largest singular values, 1 <= k <= dim.
double ky_fan_norm(const SymMatrix& a, int k);

}  // namespace matineq
