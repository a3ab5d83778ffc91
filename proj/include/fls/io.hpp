// System-file parsing and the command-line surface.
//
// Input format (JSON, UTF-8):
//   {
//     "A": [[1, -2], [1, 3]],
//     "b": [{"tri": [-2, 1, 4]},
//           {"pl": {"r": [0, 0.5, 1], "lower": [...], "upper": [...]}}]
//   }

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fls/system.hpp"

namespace fls {

/// Parses and validates a system file. Throws ParseError (malformed text) or
/// ValidationError (well-formed but invalid content, naming the rhs index).
FuzzySystem parse_system(const std::string& text);

/// Runs one CLI invocation. args excludes the program name. Data goes to
/// `out`, diagnostics to `err`. Exit codes: 0 success, 1 input error,
/// 2 inconsistent system, 3 oracle disagreement.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace fls
