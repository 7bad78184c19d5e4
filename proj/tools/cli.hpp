#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcurves::cli {

/// Exit codes.
enum Exit : int {
  ok = 0,
  failed = 1,      ///< a checked condition failed, or a computation error
  bad_input = 2,   ///< argument, JSON or polynomial parse error
  undecided = 3,   ///< undecided at the precision cap
  degenerate = 4,  ///< degenerate curve
};

inline constexpr const char* kVersion = "0.1.0";

/// Runs `pcurves <args...>`; the report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "r1,r2,..." or "logspace:a:b:n" (10^a .. 10^b, n points).
std::vector<double> parse_radii(const std::string& spec);

std::string sha256_hex(const std::string& bytes);

}  // namespace pcurves::cli
