#include "matineq/json_io.hpp"

#include <cmath>
#include <fstream>

namespace matineq {

using nlohmann::json;

json matrix_to_json(const SymMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"dim", m.dim()}, {"rows", std::move(rows)}};
}

SymMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("rows"))
        throw std::invalid_argument("matrix JSON must be an object with 'dim' and 'rows'");
    const int dim = j.at("dim").get<int>();
    const auto& rows = j.at("rows");
    if (dim < 1 || !rows.is_array() || static_cast<int>(rows.size()) != dim)
        throw std::invalid_argument("matrix JSON: 'rows' must hold dim rows");
    std::vector<std::vector<double>> data(dim);
    for (int i = 0; i < dim; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != dim)
            throw std::invalid_argument("matrix JSON: row " + std::to_string(i) + " has wrong length");
        for (int k = 0; k < dim; ++k) {
            if (!rows[i][k].is_number())
                throw std::invalid_argument("matrix JSON: entries must be numbers");
            data[i].push_back(rows[i][k].get<double>());
        }
    }
    // symmetrise via (M + M^T)/2 after bounding the asymmetry
    double max_abs = 0.0, max_asym = 0.0;
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k) {
            if (!std::isfinite(data[i][k]))
                throw std::invalid_argument("matrix JSON: entries must be finite");
            max_abs = std::max(max_abs, std::abs(data[i][k]));
            max_asym = std::max(max_asym, std::abs(data[i][k] - data[k][i]));
        }
    if (max_asym > 1e-8 * (1.0 + max_abs))
        throw std::invalid_argument("matrix JSON: input is not symmetric (max asymmetry " +
                                    std::to_string(max_asym) + ")");
    return SymMatrix::from_rows(data);
}

SymMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
    }
    return matrix_from_json(j);
}

json maj_report_to_json(const MajReport& r) {
    return json{{"relation", relation_name(r.relation)},
                {"lhs_partial_sums", r.lhs_partial_sums},
                {"rhs_partial_sums", r.rhs_partial_sums},
                {"holds", r.holds},
                {"worst_margin", r.worst_margin},
                {"worst_k", r.worst_k}};
}

json delta_to_json(const DeltaVector& d, const SymMatrix& c) {
    json clusters = json::array();
    for (const Cluster& cl : d.clusters)
        clusters.push_back(json{{"eigenvalue", cl.eigenvalue}, {"multiplicity", cl.multiplicity}});
    double sum = 0.0;
    for (double v : d.values) sum += v;
    return json{{"values", d.values},
                {"clusters", std::move(clusters)},
                {"sum_of_values", sum},
                {"trace", c.trace()},
                {"trace_residual", std::abs(sum - c.trace())}};
}

json check_result_to_json(const CheckResult& r) {
    json pre = json::array();
    for (const Precondition& p : r.preconditions) pre.push_back(json{{"name", p.name}, {"ok", p.ok}});
    json out{{"inequality", tag_name(r.inequality)},
             {"fn", r.fn_spec},
             {"preconditions", std::move(pre)},
             {"verdict", verdict_name(r.verdict)}};
    if (r.verdict != Verdict::precondition_failed) out["report"] = maj_report_to_json(r.report);
    return out;
}

json fixture_results_to_json(const std::vector<FixtureResult>& rs) {
    json arr = json::array();
    for (const FixtureResult& fr : rs)
        arr.push_back(json{{"name", fr.name},
                           {"reproduced", fr.reproduced},
                           {"diffs", fr.diffs},
                           {"check", check_result_to_json(fr.check_result)}});
    return arr;
}

json violation_to_json(const Violation& v) {
    json inputs = json::array();
    for (const SymMatrix& m : v.inputs) inputs.push_back(matrix_to_json(m));
    return json{{"seed_index", v.seed_index},
                {"fn", v.fn.to_string()},
                {"margin", v.margin},
                {"inputs", std::move(inputs)},
                {"check", check_result_to_json(v.report)}};
}

json fuzz_summary_to_json(const FuzzConfig& cfg, const FuzzSummary& s) {
    json violations = json::array();
    for (const Violation& v : s.violations) violations.push_back(violation_to_json(v));
    json config{{"inequality", tag_name(cfg.inequality)},
                {"fn", cfg.fn ? cfg.fn->to_string() : "random"},
                {"dim", cfg.dim},
                {"trials", cfg.trials},
                {"seed", cfg.seed},
                {"scale", cfg.scale},
                {"constraint", constraint_name(cfg.constraint)}};
    return json{{"config", std::move(config)},
                {"trials_run", s.trials_run},
                {"violation_count", s.violations.size()},
                {"violations", std::move(violations)}};
}

}  // namespace matineq
