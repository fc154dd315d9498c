// inequality_lab.hpp — named checkers for the matrix-norm inequalities
// and the embedded counterexample fixtures.
//
// Each InequalityId pins down: the function class it requires, the input
// preconditions, and which two spectral vectors get compared under which
// relation.  Norm inequalities over all unitarily invariant norms are
// decided as weak majorisation of singular values (Ky Fan dominance makes
// that complete); the dominated variants compare delta vectors without
// sorting.

#pragma once

#include <string>
#include <vector>

#include "matineq/delta.hpp"
#include "matineq/majorization.hpp"
#include "matineq/matrix.hpp"
#include "matineq/scalar_fn.hpp"

namespace matineq {

enum class InequalityId {
    ando_diff_monotone,      // sv(f(A)-f(B)) ≺_w sv(f(|A-B|)), f op. monotone class
    ando_diff_inverse,       // sv(g(|A-B|)) ≺_w sv(g(A)-g(B)), g inverse class
    andozhan_sum_concave,    // sv(f(A+B)) ≺_w sv(f(A)+f(B)), f >= 0 concave
    andozhan_sum_convex,     // sv(g(A)+g(B)) ≺_w sv(g(A+B)), g >= 0 convex, g(0)=0
    q1_diff_convex,          // does sv(g(|A-B|)) ≺_w sv(g(A)-g(B)) hold for convex g?
    q2_diff_convex_ordered,  // sv(g(D)) ≺_w sv(g(B+D)-g(B)), inputs (B, D) PSD
    q3_diff_concave_ordered, // sv(f(B+D)-f(B)) ≺_w sv(f(D))
    q2_delta_criterion,      // delta(f(Y);Y) ≺_dw delta(f(X+Y)-f(X);Y), inputs (X, Y)
    prop_ggc_entrywise,      // lam(g(A)-g(B)) <= lam(g(A-B)) entrywise, A >= ||B||
    cor_gg_entrywise,        // lam(f(A-B)) <= lam(f(A)-f(B)) entrywise, A >= ||B||
    prop_g,                  // lam(ga(Y)) ≺_w lam(ga(X+Y)-ga(X)), inputs (X, Y)
    prop_4,                  // delta(ga(Y);Y) ≺_dw delta(ga(X+Y)-ga(X);Y)
    bourins_strengthened,    // delta(f(A+B);A+B) ≺_dw delta(f(A)+f(B);A+B) for concave f;
                             // reversed direction for convex g with g(0)=0
};

// Function-class and input requirements of a tag (dispatch table).
struct TagInfo {
    const char* name;
    int arity;  // number of matrix inputs
    bool need_nonneg, need_monotone, need_convex, need_concave, need_zero_at_zero;
    bool need_ga_family;   // function must be ga(a), a >= 0
    bool need_bounded;     // input[0] >= ||input[1]|| * I
    const char* lhs_label;
    const char* rhs_label;
};

const TagInfo& tag_info(InequalityId id);
std::string tag_name(InequalityId id);
InequalityId parse_tag(const std::string& name);
std::vector<InequalityId> all_tags();

enum class Verdict { holds, violated, precondition_failed };
std::string verdict_name(Verdict v);

struct Precondition {
    std::string name;
    bool ok;
};

struct CheckResult {
    InequalityId inequality;
    std::string fn_spec;
    MajReport report;
    std::vector<Precondition> preconditions;
    Verdict verdict = Verdict::precondition_failed;
    bool preconditions_met() const;
};

// Evaluates the tag's inequality on the given inputs.  A failed
// precondition yields verdict precondition_failed (the report is left
// empty), not an exception; wrong input counts and dimension mismatches
// throw.
CheckResult check(InequalityId id, const PiecewiseFn& f, const std::vector<SymMatrix>& inputs,
                  double tol);
CheckResult check(InequalityId id, const PiecewiseFn& f, const std::vector<SymMatrix>& inputs);

// The three counterexample fixtures, embedded to full printed precision.
namespace fixtures {
SymMatrix q1_a();
SymMatrix q1_b();
PiecewiseFn q1_fn();  // x + (x-1)^+

SymMatrix q3_b();
SymMatrix q3_delta();
PiecewiseFn q3_fn();  // min(x, 1)

SymMatrix q2_x();
SymMatrix q2_y();
PiecewiseFn q2_fn();  // (x-1)^+
}  // namespace fixtures

struct FixtureResult {
    std::string name;
    CheckResult check_result;
    bool reproduced = false;            // expected values matched and verdict violated
    std::vector<std::string> diffs;     // human-readable mismatches when not reproduced
};

// Runs the three fixtures and compares every quoted value at 5e-5
// absolute (the sources print 5 significant figures); the first delta
// vector of the third fixture must vanish to 1e-10.
std::vector<FixtureResult> verify_paper_fixtures();

}  // namespace matineq
