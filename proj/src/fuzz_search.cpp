#include "matineq/fuzz_search.hpp"

#include <algorithm>
#include <cmath>

#include "matineq/rng.hpp"

namespace matineq {

std::string constraint_name(Constraint c) {
    switch (c) {
        case Constraint::none: return "none";
        case Constraint::ordered: return "ordered";
        case Constraint::bounded: return "bounded";
    }
    return "?";
}

Constraint parse_constraint(const std::string& name) {
    if (name == "none") return Constraint::none;
    if (name == "ordered") return Constraint::ordered;
    if (name == "bounded") return Constraint::bounded;
    throw std::invalid_argument("unknown constraint '" + name + "'");
}

namespace {

bool fn_matches_tag(InequalityId id, const PiecewiseFn& f) {
    const TagInfo& info = tag_info(id);
    if (info.need_ga_family) return f.is_named() && f.tag() == NamedTag::g_a && f.param() >= 0.0;
    const FnClass c = f.classify();
    if (info.need_nonneg && !c.nonnegative_on_plus) return false;
    if (info.need_monotone && !c.monotone_increasing) return false;
    if (info.need_convex && !c.convex) return false;
    if (info.need_concave && !c.concave) return false;
    if (info.need_zero_at_zero && !c.zero_at_zero) return false;
    if (id == InequalityId::bourins_strengthened && !(c.concave || (c.convex && c.zero_at_zero)))
        return false;
    return true;
}

// random angle functions a in [0,2], b in [-2,2], x0 in [0,2], rejected
// until the tag's class filter accepts
PiecewiseFn sample_fn(InequalityId id, Rng& rng) {
    if (tag_info(id).need_ga_family) return PiecewiseFn::ga(rng.uniform(0.0, 2.0));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const int nk = rng.uniform_int(1, 3);
        std::vector<Kink> kinks;
        for (int i = 0; i < nk; ++i) kinks.push_back({rng.uniform(0.0, 2.0), rng.uniform(-2.0, 2.0)});
        std::sort(kinks.begin(), kinks.end(), [](const Kink& a, const Kink& b) { return a.x0 < b.x0; });
        bool distinct = true;
        for (std::size_t i = 1; i < kinks.size(); ++i)
            if (kinks[i].x0 == kinks[i - 1].x0) distinct = false;
        if (!distinct) continue;
        PiecewiseFn f = PiecewiseFn::angle_sum(rng.uniform(0.0, 2.0), std::move(kinks));
        if (fn_matches_tag(id, f)) return f;
    }
    throw std::runtime_error("fuzz: function sampler failed to satisfy the tag's class");
}

SymMatrix sample_psd(int dim, double scale, Rng& rng) {
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

SymMatrix sample_psd_diag(int dim, double scale, Rng& rng) {
    std::vector<double> d(dim);
    for (int i = 0; i < dim; ++i) d[i] = scale * rng.uniform();
    return SymMatrix::diagonal(d);
}

// inputs for one trial, respecting the constraint
std::vector<SymMatrix> sample_inputs(const FuzzConfig& cfg, InequalityId id, Rng& rng) {
    const int n = cfg.dim;
    switch (cfg.constraint) {
        case Constraint::none:
            return {sample_psd(n, cfg.scale, rng), sample_psd(n, cfg.scale, rng)};
        case Constraint::ordered: {
            const SymMatrix b = sample_psd(n, cfg.scale, rng);
            // half the draws use a diagonal difference, matching the shape
            // of the known small counterexamples
            const SymMatrix d = rng.uniform() < 0.5 ? sample_psd_diag(n, cfg.scale, rng)
                                                    : sample_psd(n, cfg.scale, rng);
            // pair-style tags consume (B, D) directly; difference-style
            // tags consume (A, B) with A = B + D
            if (id == InequalityId::q2_diff_convex_ordered ||
                id == InequalityId::q3_diff_concave_ordered)
                return {b, d};
            return {b + d, b};
        }
        case Constraint::bounded: {
            const SymMatrix b = sample_psd(n, cfg.scale, rng);
            const SymMatrix a =
                operator_norm(b) * SymMatrix::identity(n) + sample_psd(n, cfg.scale, rng);
            return {a, b};
        }
    }
    throw std::logic_error("sample_inputs: unknown constraint");
}

}  // namespace

FuzzSummary fuzz(const FuzzConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("fuzz: trials must be >= 1");
    if (cfg.dim < 2) throw std::invalid_argument("fuzz: dim must be >= 2");
    if (cfg.fn && !fn_matches_tag(cfg.inequality, *cfg.fn))
        throw std::invalid_argument("fuzz: fixed function does not satisfy the tag's class");
    if (cfg.inject) {
        if (static_cast<int>(cfg.inject->inputs.size()) != tag_info(cfg.inequality).arity)
            throw std::invalid_argument("fuzz: injected input count mismatch");
        if (!fn_matches_tag(cfg.inequality, cfg.inject->fn))
            throw std::invalid_argument("fuzz: injected function does not satisfy the tag's class");
    }

    FuzzSummary summary;
    for (long long trial = 0; trial < cfg.trials; ++trial) {
        Rng rng(cfg.seed, static_cast<std::uint64_t>(trial));
        PiecewiseFn fn = PiecewiseFn::identity();
        std::vector<SymMatrix> inputs;
        if (trial == 0 && cfg.inject) {
            fn = cfg.inject->fn;
            inputs = cfg.inject->inputs;
        } else {
            fn = cfg.fn ? *cfg.fn : sample_fn(cfg.inequality, rng);
            inputs = sample_inputs(cfg, cfg.inequality, rng);
        }
        CheckResult res = check(cfg.inequality, fn, inputs, cfg.tol);
        if (res.verdict == Verdict::violated) {
            Violation v;
            v.seed_index = trial;
            v.inputs = std::move(inputs);
            v.fn = fn;
            v.margin = res.report.worst_margin;
            v.report = std::move(res);
            v.constraint = cfg.constraint;
            v.tol = cfg.tol;
            summary.violations.push_back(std::move(v));
        }
        ++summary.trials_run;
    }
    return summary;
}

namespace {

// free parameters of the violation under its constraint; rebuilding
// projects each parameter matrix onto the PSD cone
struct Parameterisation {
    std::vector<SymMatrix> params;

    static Parameterisation from_inputs(const Violation& v) {
        Parameterisation p;
        const InequalityId id = v.report.inequality;
        const bool pair_style = id == InequalityId::q2_diff_convex_ordered ||
                                id == InequalityId::q3_diff_concave_ordered;
        switch (v.constraint) {
            case Constraint::none:
                p.params = v.inputs;
                break;
            case Constraint::ordered:
                if (pair_style)
                    p.params = v.inputs;  // (B, D), both PSD already
                else
                    p.params = {v.inputs[1], v.inputs[0] - v.inputs[1]};  // (B, D) with A = B+D
                break;
            case Constraint::bounded: {
                const SymMatrix& a = v.inputs[0];
                const SymMatrix& b = v.inputs[1];
                p.params = {b, a - operator_norm(b) * SymMatrix::identity(a.dim())};  // (B, P)
                break;
            }
        }
        return p;
    }

    std::vector<SymMatrix> to_inputs(const Violation& v) const {
        const InequalityId id = v.report.inequality;
        const bool pair_style = id == InequalityId::q2_diff_convex_ordered ||
                                id == InequalityId::q3_diff_concave_ordered;
        std::vector<SymMatrix> proj;
        proj.reserve(params.size());
        for (const SymMatrix& m : params) proj.push_back(positive_part(m));
        switch (v.constraint) {
            case Constraint::none:
                return proj;
            case Constraint::ordered:
                if (pair_style) return proj;
                return {proj[0] + proj[1], proj[0]};
            case Constraint::bounded:
                return {operator_norm(proj[0]) * SymMatrix::identity(proj[0].dim()) + proj[1],
                        proj[0]};
        }
        throw std::logic_error("Parameterisation: unknown constraint");
    }
};

bool constraint_satisfied(const Violation& v, const std::vector<SymMatrix>& inputs) {
    const auto tol = [](const SymMatrix& m) { return 1e-9 * (1.0 + m.max_abs()); };
    for (const SymMatrix& m : inputs)
        if (!is_psd(m, tol(m))) return false;
    if (v.constraint == Constraint::bounded) {
        const double nb = operator_norm(inputs[1]);
        if (!ge(inputs[0], nb * SymMatrix::identity(inputs[0].dim()), tol(inputs[0]))) return false;
    }
    if (v.constraint == Constraint::ordered &&
        v.report.inequality != InequalityId::q2_diff_convex_ordered &&
        v.report.inequality != InequalityId::q3_diff_concave_ordered) {
        if (!ge(inputs[0], inputs[1], tol(inputs[0]))) return false;
    }
    return true;
}

}  // namespace

Violation shrink(const Violation& v, int steps) {
    if (steps < 0) throw std::invalid_argument("shrink: steps must be >= 0");

    Violation best = v;
    Parameterisation cur = Parameterisation::from_inputs(v);

    double max_entry = 0.0;
    for (const SymMatrix& m : cur.params) max_entry = std::max(max_entry, m.max_abs());
    double eta = 0.1 * (1.0 + max_entry);

    const int n_params = static_cast<int>(cur.params.size());
    const int dim = cur.params[0].dim();
    const int coords_per_matrix = dim * (dim + 1) / 2;
    const int total_coords = 2 * n_params * coords_per_matrix;  // +/- directions

    int since_improvement = 0;
    for (int step = 0; step < steps; ++step) {
        const int c = step % total_coords;
        const int direction = (c % 2 == 0) ? 1 : -1;
        const int flat = c / 2;
        const int mat = flat / coords_per_matrix;
        int idx = flat % coords_per_matrix;
        int i = 0;
        while (idx > i) {
            idx -= i + 1;
            ++i;
        }
        const int j = idx;

        Parameterisation cand = cur;
        cand.params[mat].set(i, j, cand.params[mat](i, j) + direction * eta);
        const std::vector<SymMatrix> inputs = cand.to_inputs(v);
        if (!constraint_satisfied(v, inputs)) {
            ++since_improvement;
        } else {
            CheckResult res = check(v.report.inequality, v.fn, inputs, v.tol);
            if (res.verdict == Verdict::violated && res.report.worst_margin < best.margin) {
                cur = cand;
                best.inputs = inputs;
                best.margin = res.report.worst_margin;
                best.report = std::move(res);
                since_improvement = 0;
            } else {
                ++since_improvement;
            }
        }
        if (since_improvement >= total_coords) {
            eta *= 0.5;
            since_improvement = 0;
        }
    }
    return best;
}

}  // namespace matineq
