// cli.hpp — command-line entry point.
//
// Subcommands: verify-paper, check, delta, fuzz.  Exit codes: 0 property
// held / fixtures reproduced, 1 violation found or fixture mismatch,
// 2 input or usage error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matineq::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matineq::cli
