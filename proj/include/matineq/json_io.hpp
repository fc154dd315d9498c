// json_io.hpp — JSON wire formats for matrices and reports.
//
// Matrix files: {"dim": n, "rows": [[r11,...],[...]]}.  The loader
// symmetrises via (M + M^T)/2 and rejects inputs whose asymmetry exceeds
// 1e-8 * (1 + max|M|).

#pragma once

#include <string>

#include <json.hpp>

#include "matineq/delta.hpp"
#include "matineq/fuzz_search.hpp"
#include "matineq/inequality_lab.hpp"
#include "matineq/majorization.hpp"
#include "matineq/matrix.hpp"

namespace matineq {

nlohmann::json matrix_to_json(const SymMatrix& m);
SymMatrix matrix_from_json(const nlohmann::json& j);
SymMatrix load_matrix_file(const std::string& path);

nlohmann::json maj_report_to_json(const MajReport& r);
nlohmann::json delta_to_json(const DeltaVector& d, const SymMatrix& c);
nlohmann::json check_result_to_json(const CheckResult& r);
nlohmann::json fixture_results_to_json(const std::vector<FixtureResult>& rs);
nlohmann::json violation_to_json(const Violation& v);
nlohmann::json fuzz_summary_to_json(const FuzzConfig& cfg, const FuzzSummary& s);

}  // namespace matineq
