// fuzz_search.hpp — randomized search for inequality violations.
//
// Trials are keyed by (seed, trial index) through counter-based streams,
// so a run is deterministic, order-independent and replayable: every
// emitted Violation re-checks to the same margin from its stored inputs.

#pragma once

#include <optional>
#include <vector>

#include "matineq/inequality_lab.hpp"

namespace matineq {

enum class Constraint {
    none,     // independent PSD inputs
    ordered,  // inputs related by a PSD difference (A = B + D)
    bounded,  // input[0] = ||input[1]|| * I + PSD
};

std::string constraint_name(Constraint c);
Constraint parse_constraint(const std::string& name);

struct Injected {
    std::vector<SymMatrix> inputs;
    PiecewiseFn fn;
};

struct FuzzConfig {
    InequalityId inequality = InequalityId::q1_diff_convex;
    std::optional<PiecewiseFn> fn;  // fixed function; nullopt samples random
                                    // angle functions (a in [0,2], b in [-2,2],
                                    // x0 in [0,2]) filtered by the tag's class
    int dim = 3;
    long long trials = 1000;
    std::uint64_t seed = 0;
    double scale = 1.0;
    Constraint constraint = Constraint::none;
    double tol = -1.0;  // < 0 selects the scale-aware default
    std::optional<Injected> inject;  // overrides trial 0
};

struct Violation {
    long long seed_index = 0;
    std::vector<SymMatrix> inputs;
    PiecewiseFn fn = PiecewiseFn::identity();
    double margin = 0.0;  // < 0
    CheckResult report;
    Constraint constraint = Constraint::none;  // carried for shrinking
    double tol = -1.0;
};

struct FuzzSummary {
    long long trials_run = 0;
    std::vector<Violation> violations;
};

FuzzSummary fuzz(const FuzzConfig& cfg);

// Deterministic coordinate descent on the violation's free parameters
// (entry +/- eta with eta halving, projected back onto the constraint
// set).  The margin never increases and the result still violates.
Violation shrink(const Violation& v, int steps);

}  // namespace matineq
