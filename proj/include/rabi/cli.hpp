#ifndef RABI_CLI_HPP
#define RABI_CLI_HPP

#include <iosfwd>
#include <string>

#include "rabi/constraint_poly.hpp"
#include "rabi/gfunction.hpp"

namespace rabi::cli {

enum class OutputFormat { Default, Csv, Json };

/// Settings shared by every subcommand. Defaults can be overridden by a
/// key=value config file (--config), which flags override in turn.
struct RunConfig {
  double bisect_tol = 1e-13;
  double residual_tol = 1e-9;
  double pole_guard = kDefaultPoleGuard;
  unsigned exact_cap = kDefaultExactCap;
  std::size_t scan_grid = 256;
  std::size_t branch_steps = 101;
  OutputFormat format = OutputFormat::Default;
  std::string output_path;
  unsigned threads = 1;

  /// Throws std::invalid_argument when a tolerance is not positive or the
  /// exact cap is zero.
  void validate() const;
};

/// Failing-suite bits of the `verify` exit code.
inline constexpr int kOracleFailed = 1;
inline constexpr int kWeylFailed = 2;
inline constexpr int kInterlaceFailed = 4;
/// Exit code for runtime errors outside `verify`.
inline constexpr int kRuntimeError = 16;

/// Entry point of the `rabi` tool. Output goes to `out` unless --output is
/// given; diagnostics go to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rabi::cli

#endif
