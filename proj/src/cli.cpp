#include "matineq/cli.hpp"

#include <iomanip>
#include <iostream>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "matineq/json_io.hpp"

namespace matineq::cli {

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitViolated = 1;
constexpr int kExitError = 2;

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(9) << v;
    return os.str();
}

void print_report_table(std::ostream& out, const MajReport& r, const std::string& lhs_label,
                        const std::string& rhs_label) {
    const bool entrywise = r.relation == Relation::entrywise_ge;
    out << "relation: " << relation_name(r.relation)
        << (entrywise ? " (per-entry values)" : " (partial sums)") << "\n";
    const int w = 16;
    out << std::left << std::setw(6) << "k" << std::setw(w + 4) << lhs_label << std::setw(w + 4)
        << rhs_label << "margin (rhs-lhs)"
        << "\n";
    for (std::size_t k = 0; k < r.lhs_partial_sums.size(); ++k) {
        out << std::left << std::setw(6) << (k + 1) << std::setw(w + 4) << fmt(r.lhs_partial_sums[k])
            << std::setw(w + 4) << fmt(r.rhs_partial_sums[k])
            << fmt(r.rhs_partial_sums[k] - r.lhs_partial_sums[k]) << "\n";
    }
    out << "worst margin " << fmt(r.worst_margin) << " at k=" << r.worst_k << " (tol " << fmt(r.tol)
        << ")\n";
}

int run_verify_paper(bool as_json, std::ostream& out) {
    const std::vector<FixtureResult> results = verify_paper_fixtures();
    bool all = true;
    for (const FixtureResult& fr : results) all = all && fr.reproduced;
    if (as_json) {
        out << fixture_results_to_json(results).dump(2) << "\n";
    } else {
        for (const FixtureResult& fr : results) {
            out << (fr.reproduced ? "REPRODUCED " : "MISMATCH   ") << fr.name << ": "
                << tag_name(fr.check_result.inequality) << " with fn " << fr.check_result.fn_spec
                << ", verdict " << verdict_name(fr.check_result.verdict);
            if (fr.check_result.verdict != Verdict::precondition_failed)
                out << ", worst margin " << fmt(fr.check_result.report.worst_margin) << " at k="
                    << fr.check_result.report.worst_k;
            out << "\n";
            for (const std::string& d : fr.diffs) out << "    " << d << "\n";
        }
        out << (all ? "all fixtures reproduced\n" : "fixture mismatch\n");
    }
    return all ? kExitHolds : kExitViolated;
}

int run_check(const std::string& tag, const std::string& fn_spec,
              const std::vector<std::string>& input_paths, double tol, bool as_json,
              std::ostream& out, std::ostream& err) {
    const InequalityId id = parse_tag(tag);
    const PiecewiseFn fn = PiecewiseFn::parse(fn_spec);
    std::vector<SymMatrix> inputs;
    for (const std::string& p : input_paths) inputs.push_back(load_matrix_file(p));

    const CheckResult res = check(id, fn, inputs, tol);
    if (as_json) {
        out << check_result_to_json(res).dump(2) << "\n";
    } else {
        out << tag_name(id) << " with fn " << res.fn_spec << "\n";
        for (const Precondition& p : res.preconditions)
            out << "  precondition " << (p.ok ? "[ok]   " : "[FAIL] ") << p.name << "\n";
        if (res.verdict != Verdict::precondition_failed) {
            const TagInfo& info = tag_info(id);
            std::string lhs = info.lhs_label, rhs = info.rhs_label;
            if (id == InequalityId::bourins_strengthened && !fn.classify().concave)
                std::swap(lhs, rhs);  // convex direction is reversed
            print_report_table(out, res.report, lhs, rhs);
        }
        out << "verdict: " << verdict_name(res.verdict) << "\n";
    }
    switch (res.verdict) {
        case Verdict::holds: return kExitHolds;
        case Verdict::violated: return kExitViolated;
        case Verdict::precondition_failed: break;
    }
    err << "error: preconditions not met\n";
    return kExitError;
}

int run_delta(const std::string& a_path, const std::string& c_path, double cluster_tol, bool as_json,
              std::ostream& out) {
    const SymMatrix a = load_matrix_file(a_path);
    const SymMatrix c = load_matrix_file(c_path);
    const DeltaVector d =
        cluster_tol >= 0.0 ? delta(c, a, cluster_tol) : delta(c, a);
    if (as_json) {
        out << delta_to_json(d, c).dump(2) << "\n";
        return kExitHolds;
    }
    out << std::left << std::setw(6) << "k" << std::setw(20) << "value" << std::setw(20)
        << "eigenvalue of A" << "cluster size\n";
    int k = 0;
    for (const Cluster& cl : d.clusters)
        for (int i = 0; i < cl.multiplicity; ++i, ++k)
            out << std::left << std::setw(6) << (k + 1) << std::setw(20) << fmt(d.values[k])
                << std::setw(20) << fmt(cl.eigenvalue) << cl.multiplicity << "\n";
    double sum = 0.0;
    for (double v : d.values) sum += v;
    out << "sum of values " << fmt(sum) << ", trace of C " << fmt(c.trace()) << " (residual "
        << fmt(std::abs(sum - c.trace())) << ")\n";
    return kExitHolds;
}

int run_fuzz(const std::string& tag, const std::string& fn_spec, int dim, long long trials,
             std::uint64_t seed, double scale, const std::string& constraint, int shrink_steps,
             double tol, const std::string& out_path, bool as_json, std::ostream& out) {
    FuzzConfig cfg;
    cfg.inequality = parse_tag(tag);
    if (fn_spec != "random") cfg.fn = PiecewiseFn::parse(fn_spec);
    cfg.dim = dim;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.scale = scale;
    cfg.constraint = parse_constraint(constraint);
    cfg.tol = tol;

    FuzzSummary summary = fuzz(cfg);
    if (shrink_steps > 0)
        for (Violation& v : summary.violations) v = shrink(v, shrink_steps);

    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot write report to '" + out_path + "'");
        f << fuzz_summary_to_json(cfg, summary).dump(2) << "\n";
    }
    if (as_json) {
        out << fuzz_summary_to_json(cfg, summary).dump(2) << "\n";
    } else {
        out << summary.trials_run << " trials, " << summary.violations.size() << " violations\n";
        for (const Violation& v : summary.violations)
            out << "  trial " << v.seed_index << ": margin " << fmt(v.margin) << " with fn "
                << v.fn.to_string() << "\n";
    }
    return summary.violations.empty() ? kExitHolds : kExitViolated;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"matrix inequality laboratory"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    auto* verify = app.add_subcommand("verify-paper", "reproduce the three counterexample fixtures");

    auto* chk = app.add_subcommand("check", "evaluate one inequality on matrix files");
    std::string chk_tag, chk_fn;
    std::vector<std::string> chk_inputs;
    double chk_tol = -1.0;
    chk->add_option("tag", chk_tag, "inequality tag")->required();
    chk->add_option("--fn", chk_fn, "function spec, e.g. angle:a=1,b=1,x0=1 or min1")->required();
    chk->add_option("--inputs", chk_inputs, "matrix JSON files")->required()->expected(1, 8);
    chk->add_option("--tol", chk_tol, "verdict tolerance (default: 1e-8 scaled)");

    auto* del = app.add_subcommand("delta", "spectral derivative vector of C along A");
    std::string del_a, del_c;
    double del_tol = -1.0;
    del->add_option("--A", del_a, "conditioning matrix JSON file")->required();
    del->add_option("--C", del_c, "direction matrix JSON file")->required();
    del->add_option("--cluster-tol", del_tol, "eigenvalue clustering tolerance (default: 1e-8 scaled)");

    auto* fz = app.add_subcommand("fuzz", "randomized search for violations");
    std::string fz_tag, fz_fn = "random", fz_constraint = "none", fz_out;
    int fz_dim = 3, fz_shrink = 0;
    long long fz_trials = 1000;
    std::uint64_t fz_seed = 0;
    double fz_scale = 1.0, fz_tol = -1.0;
    fz->add_option("tag", fz_tag, "inequality tag")->required();
    fz->add_option("--fn", fz_fn, "function spec or 'random'");
    fz->add_option("--dim", fz_dim, "matrix dimension");
    fz->add_option("--trials", fz_trials, "trial count");
    fz->add_option("--seed", fz_seed, "stream seed");
    fz->add_option("--scale", fz_scale, "operator-norm scale of sampled matrices");
    fz->add_option("--constraint", fz_constraint, "none|ordered|bounded");
    fz->add_option("--shrink", fz_shrink, "margin-descent steps per violation");
    fz->add_option("--tol", fz_tol, "verdict tolerance");
    fz->add_option("--out", fz_out, "write full JSON report here");

    try {
        std::vector<std::string> argv(args);
        std::reverse(argv.begin(), argv.end());  // CLI11 parses reversed
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitHolds;
        }
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (verify->parsed()) return run_verify_paper(as_json, out);
        if (chk->parsed()) return run_check(chk_tag, chk_fn, chk_inputs, chk_tol, as_json, out, err);
        if (del->parsed()) return run_delta(del_a, del_c, del_tol, as_json, out);
        if (fz->parsed())
            return run_fuzz(fz_tag, fz_fn, fz_dim, fz_trials, fz_seed, fz_scale, fz_constraint,
                            fz_shrink, fz_tol, fz_out, as_json, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    err << "error: no subcommand\n";
    return kExitError;
}

}  // namespace matineq::cli
