#include "matineq/inequality_lab.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace matineq {

namespace {

// tag table; labels describe the compared sides for human output
const TagInfo kTags[] = {
    //                          name                      ar  nn    mono  cvx   ccv   zero  ga     bnd
    {"ando_diff_monotone", 2, true, true, false, true, false, false, false,
     "sv(f(A)-f(B))", "sv(f(|A-B|))"},
    {"ando_diff_inverse", 2, true, false, true, false, true, false, false,
     "sv(g(|A-B|))", "sv(g(A)-g(B))"},
    {"andozhan_sum_concave", 2, true, false, false, true, false, false, false,
     "sv(f(A+B))", "sv(f(A)+f(B))"},
    {"andozhan_sum_convex", 2, true, false, true, false, true, false, false,
     "sv(g(A)+g(B))", "sv(g(A+B))"},
    {"q1_diff_convex", 2, true, false, true, false, true, false, false,
     "sv(g(|A-B|))", "sv(g(A)-g(B))"},
    {"q2_diff_convex_ordered", 2, true, false, true, false, true, false, false,
     "sv(g(D))", "sv(g(B+D)-g(B))"},
    {"q3_diff_concave_ordered", 2, true, false, false, true, false, false, false,
     "sv(f(B+D)-f(B))", "sv(f(D))"},
    {"q2_delta_criterion", 2, true, true, true, false, true, false, false,
     "delta(f(Y);Y)", "delta(f(X+Y)-f(X);Y)"},
    {"prop_ggc_entrywise", 2, true, true, false, true, false, false, true,
     "lam(g(A)-g(B))", "lam(g(A-B))"},
    {"cor_gg_entrywise", 2, true, false, true, false, true, false, true,
     "lam(f(A-B))", "lam(f(A)-f(B))"},
    {"prop_g", 2, false, false, false, false, false, true, false,
     "lam(ga(Y))", "lam(ga(X+Y)-ga(X))"},
    {"prop_4", 2, false, false, false, false, false, true, false,
     "delta(ga(Y);Y)", "delta(ga(X+Y)-ga(X);Y)"},
    {"bourins_strengthened", 2, true, false, false, false, false, false, false,
     "delta(f(A+B);A+B)", "delta(f(A)+f(B);A+B)"},
};

int tag_index(InequalityId id) { return static_cast<int>(id); }

}  // namespace

const TagInfo& tag_info(InequalityId id) { return kTags[tag_index(id)]; }

std::string tag_name(InequalityId id) { return tag_info(id).name; }

InequalityId parse_tag(const std::string& name) {
    for (InequalityId id : all_tags())
        if (name == tag_info(id).name) return id;
    throw std::invalid_argument("unknown inequality tag '" + name + "'");
}

std::vector<InequalityId> all_tags() {
    std::vector<InequalityId> ids;
    for (int i = 0; i <= static_cast<int>(InequalityId::bourins_strengthened); ++i)
        ids.push_back(static_cast<InequalityId>(i));
    return ids;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::precondition_failed: return "precondition_failed";
    }
    return "?";
}

bool CheckResult::preconditions_met() const {
    return std::all_of(preconditions.begin(), preconditions.end(),
                       [](const Precondition& p) { return p.ok; });
}

namespace {

double input_tol(const SymMatrix& m) { return 1e-9 * (1.0 + m.max_abs()); }

double check_default_tol(const std::vector<double>& ls, const std::vector<double>& rs) {
    double m = 0.0;
    for (double v : ls) m = std::max(m, std::abs(v));
    for (double v : rs) m = std::max(m, std::abs(v));
    return 1e-8 * (1.0 + m);
}

struct Sides {
    std::vector<double> lhs, rhs;
    Relation relation;
};

// the two spectral vectors a tag compares, assuming preconditions hold
Sides tag_sides(InequalityId id, const PiecewiseFn& f, const std::vector<SymMatrix>& in) {
    switch (id) {
        case InequalityId::ando_diff_monotone: {
            const SymMatrix fa = apply_fn(in[0], f), fb = apply_fn(in[1], f);
            return {singular_values(fa - fb), singular_values(apply_fn(abs_matrix(in[0] - in[1]), f)),
                    Relation::weak_majorize};
        }
        case InequalityId::ando_diff_inverse:
        case InequalityId::q1_diff_convex: {
            const SymMatrix ga = apply_fn(in[0], f), gb = apply_fn(in[1], f);
            return {singular_values(apply_fn(abs_matrix(in[0] - in[1]), f)), singular_values(ga - gb),
                    Relation::weak_majorize};
        }
        case InequalityId::andozhan_sum_concave:
            return {singular_values(apply_fn(in[0] + in[1], f)),
                    singular_values(apply_fn(in[0], f) + apply_fn(in[1], f)), Relation::weak_majorize};
        case InequalityId::andozhan_sum_convex:
            return {singular_values(apply_fn(in[0], f) + apply_fn(in[1], f)),
                    singular_values(apply_fn(in[0] + in[1], f)), Relation::weak_majorize};
        case InequalityId::q2_diff_convex_ordered:
            return {singular_values(apply_fn(in[1], f)),
                    singular_values(apply_fn(in[0] + in[1], f) - apply_fn(in[0], f)),
                    Relation::weak_majorize};
        case InequalityId::q3_diff_concave_ordered:
            return {singular_values(apply_fn(in[0] + in[1], f) - apply_fn(in[0], f)),
                    singular_values(apply_fn(in[1], f)), Relation::weak_majorize};
        case InequalityId::q2_delta_criterion: {
            const SymMatrix& x = in[0];
            const SymMatrix& y = in[1];
            const SymMatrix diff = apply_fn(x + y, f) - apply_fn(x, f);
            return {delta(apply_fn(y, f), y).values, delta(diff, y).values, Relation::dominated_weak};
        }
        case InequalityId::prop_ggc_entrywise:
            return {eigenvalues_desc(apply_fn(in[0], f) - apply_fn(in[1], f)),
                    eigenvalues_desc(apply_fn(in[0] - in[1], f)), Relation::entrywise_ge};
        case InequalityId::cor_gg_entrywise:
            return {eigenvalues_desc(apply_fn(in[0] - in[1], f)),
                    eigenvalues_desc(apply_fn(in[0], f) - apply_fn(in[1], f)), Relation::entrywise_ge};
        case InequalityId::prop_g:
            return {eigenvalues_desc(apply_fn(in[1], f)),
                    eigenvalues_desc(apply_fn(in[0] + in[1], f) - apply_fn(in[0], f)),
                    Relation::weak_majorize};
        case InequalityId::prop_4: {
            const SymMatrix& x = in[0];
            const SymMatrix& y = in[1];
            const SymMatrix diff = apply_fn(x + y, f) - apply_fn(x, f);
            return {delta(apply_fn(y, f), y).values, delta(diff, y).values, Relation::dominated_weak};
        }
        case InequalityId::bourins_strengthened: {
            const SymMatrix sum = in[0] + in[1];
            const std::vector<double> joint = delta(apply_fn(sum, f), sum).values;
            const std::vector<double> split =
                delta(apply_fn(in[0], f) + apply_fn(in[1], f), sum).values;
            if (f.classify().concave) return {joint, split, Relation::dominated_weak};
            return {split, joint, Relation::dominated_weak};  // convex: reversed
        }
    }
    throw std::logic_error("tag_sides: unknown tag");
}

}  // namespace

CheckResult check(InequalityId id, const PiecewiseFn& f, const std::vector<SymMatrix>& inputs,
                  double tol) {
    const TagInfo& info = tag_info(id);
    if (static_cast<int>(inputs.size()) != info.arity)
        throw std::invalid_argument(std::string("check: ") + info.name + " takes " +
                                    std::to_string(info.arity) + " matrix inputs");
    for (std::size_t i = 1; i < inputs.size(); ++i) check_same_dim(inputs[0], inputs[i], "check");

    CheckResult res;
    res.inequality = id;
    res.fn_spec = f.to_string();

    const FnClass cls = f.classify();
    auto need = [&res](const std::string& name, bool ok) { res.preconditions.push_back({name, ok}); };

    if (info.need_ga_family) {
        const bool is_ga = f.is_named() && f.tag() == NamedTag::g_a && f.param() >= 0.0;
        need("fn in ga family (a >= 0)", is_ga);
    } else {
        if (info.need_nonneg) need("fn nonnegative on [0,inf)", cls.nonnegative_on_plus);
        if (info.need_monotone) need("fn monotone increasing", cls.monotone_increasing);
        if (info.need_convex) need("fn convex", cls.convex);
        if (info.need_concave) need("fn concave", cls.concave);
        if (info.need_zero_at_zero) need("fn value 0 at 0", cls.zero_at_zero);
    }
    if (id == InequalityId::bourins_strengthened) {
        // direction comes from the function class
        need("fn concave, or convex with value 0 at 0",
             cls.concave || (cls.convex && cls.zero_at_zero));
    }

    for (std::size_t i = 0; i < inputs.size(); ++i)
        need("input[" + std::to_string(i) + "] psd", is_psd(inputs[i], input_tol(inputs[i])));
    if (info.need_bounded) {
        const double nb = operator_norm(inputs[1]);
        need("input[0] >= ||input[1]|| * I",
             ge(inputs[0], nb * SymMatrix::identity(inputs[0].dim()), input_tol(inputs[0])));
    }

    if (!res.preconditions_met()) {
        res.verdict = Verdict::precondition_failed;
        return res;
    }

    Sides s = tag_sides(id, f, inputs);
    MajReport rep;
    switch (s.relation) {
        case Relation::weak_majorize: rep = weak_majorize(s.lhs, s.rhs, 0.0); break;
        case Relation::dominated_weak: rep = dominated_weak_majorize(s.lhs, s.rhs, 0.0); break;
        case Relation::entrywise_ge: rep = entrywise_dominated(s.lhs, s.rhs, 0.0); break;
        case Relation::strong_majorize: rep = strong_majorize(s.lhs, s.rhs, 0.0); break;
    }
    // default verdict tolerance for checks: 1e-8 scaled
    rep.tol = tol >= 0.0 ? tol : check_default_tol(rep.lhs_partial_sums, rep.rhs_partial_sums);
    rep.holds = rep.worst_margin >= -rep.tol;
    res.report = rep;
    res.verdict = rep.holds ? Verdict::holds : Verdict::violated;
    return res;
}

CheckResult check(InequalityId id, const PiecewiseFn& f, const std::vector<SymMatrix>& inputs) {
    return check(id, f, inputs, -1.0);
}

namespace fixtures {

SymMatrix q1_a() { return SymMatrix::from_rows({{0.9, 0.0}, {0.0, 0.6}}); }
SymMatrix q1_b() { return SymMatrix::from_rows({{0.8, 0.5}, {0.5, 0.4}}); }
PiecewiseFn q1_fn() { return PiecewiseFn::angle_sum(1.0, {{1.0, 1.0}}); }

SymMatrix q3_b() {
    return SymMatrix::from_rows({{0.701816, 0.317887, 0.198910},
                                 {0.317887, 1.014950, -0.093826},
                                 {0.198910, -0.093826, 0.274236}});
}
SymMatrix q3_delta() {
    return SymMatrix::diagonal({0.192713, 0.446505, 0.455416});
}
PiecewiseFn q3_fn() { return PiecewiseFn::min1(); }

SymMatrix q2_x() {
    return SymMatrix::from_rows({{0.35614, -0.053243, 0.10116},
                                 {-0.053243, 0.87456, 0.40559},
                                 {0.10116, 0.40559, 0.82474}});
}
SymMatrix q2_y() { return SymMatrix::diagonal({0.53642, 0.42018, 0.094866}); }
PiecewiseFn q2_fn() { return PiecewiseFn::angle_sum(0.0, {{1.0, 1.0}}); }

}  // namespace fixtures

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(9);
    os << v;
    return os.str();
}

void expect_near(FixtureResult& fr, const std::string& what, double computed, double expected,
                 double tol) {
    if (std::abs(computed - expected) > tol)
        fr.diffs.push_back(what + ": expected " + fmt(expected) + ", computed " + fmt(computed) +
                           " (tol " + fmt(tol) + ")");
}

void expect_verdict_violated(FixtureResult& fr) {
    if (fr.check_result.verdict != Verdict::violated) {
        std::string msg = "verdict: expected violated, computed ";
        msg += verdict_name(fr.check_result.verdict);
        fr.diffs.push_back(std::move(msg));
    }
}

constexpr double kPrintTol = 5e-5;  // sources print 5 significant figures

}  // namespace

std::vector<FixtureResult> verify_paper_fixtures() {
    std::vector<FixtureResult> out;

    {
        FixtureResult fr;
        fr.name = "question1";
        const SymMatrix a = fixtures::q1_a();
        const SymMatrix b = fixtures::q1_b();
        const PiecewiseFn g = fixtures::q1_fn();
        fr.check_result = check(InequalityId::q1_diff_convex, g, {a, b});

        const std::vector<double> lam_rhs = eigenvalues_desc(apply_fn(abs_matrix(a - b), g));
        const std::vector<double> lam_lhs = eigenvalues_desc(apply_fn(a, g) - apply_fn(b, g));
        expect_near(fr, "eig1 of g(|A-B|)", lam_rhs[0], 0.65249, kPrintTol);
        expect_near(fr, "eig2 of g(|A-B|)", lam_rhs[1], 0.35249, kPrintTol);
        expect_near(fr, "eig1 of g(A)-g(B)", lam_lhs[0], 0.65010, kPrintTol);
        expect_near(fr, "eig2 of g(A)-g(B)", lam_lhs[1], -0.48862, kPrintTol);
        expect_verdict_violated(fr);
        fr.reproduced = fr.diffs.empty();
        out.push_back(std::move(fr));
    }

    {
        FixtureResult fr;
        fr.name = "question3";
        const SymMatrix b = fixtures::q3_b();
        const SymMatrix d = fixtures::q3_delta();
        const PiecewiseFn f = fixtures::q3_fn();
        fr.check_result = check(InequalityId::q3_diff_concave_ordered, f, {b, d});

        const double norm_fd = operator_norm(apply_fn(d, f));
        const double norm_diff = operator_norm(apply_fn(b + d, f) - apply_fn(b, f));
        expect_near(fr, "||f(D)||", norm_fd, 0.455416, kPrintTol);
        expect_near(fr, "||f(B+D)-f(B)||", norm_diff, 0.455776, kPrintTol);
        expect_verdict_violated(fr);
        fr.reproduced = fr.diffs.empty();
        out.push_back(std::move(fr));
    }

    {
        FixtureResult fr;
        fr.name = "question2_delta";
        const SymMatrix x = fixtures::q2_x();
        const SymMatrix y = fixtures::q2_y();
        const PiecewiseFn f = fixtures::q2_fn();
        fr.check_result = check(InequalityId::q2_delta_criterion, f, {x, y});

        const std::vector<double> lhs = delta(apply_fn(y, f), y).values;
        for (int k = 0; k < 3; ++k)
            expect_near(fr, "delta(f(Y);Y)[" + std::to_string(k) + "]", lhs[k], 0.0, 1e-10);
        const std::vector<double> rhs = delta(apply_fn(x + y, f) - apply_fn(x, f), y).values;
        expect_near(fr, "delta(f(X+Y)-f(X);Y)[0]", rhs[0], -0.00018194, kPrintTol);
        expect_near(fr, "delta(f(X+Y)-f(X);Y)[1]", rhs[1], 0.2573, kPrintTol);
        expect_near(fr, "delta(f(X+Y)-f(X);Y)[2]", rhs[2], 0.04, kPrintTol);
        if (fr.check_result.report.worst_k != 1)
            fr.diffs.push_back("violation index: expected k=1, computed k=" +
                               std::to_string(fr.check_result.report.worst_k));
        expect_verdict_violated(fr);
        fr.reproduced = fr.diffs.empty();
        out.push_back(std::move(fr));
    }

    return out;
}

}  // namespace matineq
