#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "shadowham/oscillator.hpp"
#include "shadowham/rational.hpp"

namespace shadowham::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Inclusive sample grid start, start + step, ... <= stop, in exact arithmetic.
struct XRange {
  Rational start{0};
  Rational stop{3};
  Rational step{1, 10};

  /// "a:b:h"; throws UsageError when malformed, empty, or h <= 0.
  static XRange parse(std::string_view text);
  std::vector<Rational> samples() const;
};

struct RunConfig {
  std::string subcommand;
  std::optional<Rational> x;  // --x
  XRange x_range;             // --x-range, defaults to 0:3:0.1
  bool x_range_given = false;
  SchemeId scheme = SchemeId::FirstOrder;
  std::size_t n_steps = 100;
  int letters = 2;
  std::optional<int> max_degree;  // defaults: 12 for two letters, 8 for three
  Rational p0{1};
  Rational q0{0};
  bool exact = false;
  double tol = 1e-12;
  std::string out_path;  // empty: stdout
  std::size_t max_bits = kDefaultMaxBits;

  /// x samples for verify/sweep: --x if given, else the range.
  std::vector<Rational> sweep_samples() const;
  /// Single step size for simulate/shadow: --x, a one-sample range, or 1.
  /// Throws UsageError for a multi-sample range.
  Rational single_x() const;
  /// Throws UsageError on invalid combinations.
  void validate() const;
};

int cmd_coeffs(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_simulate(const RunConfig& cfg, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, std::ostream& out);
int cmd_shadow(const RunConfig& cfg, std::ostream& out);

/// Parses args (without the program name), runs the subcommand, and returns
/// the exit code. CSV goes to `out` unless --out names a file; diagnostics go
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shadowham::cli
