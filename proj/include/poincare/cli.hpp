#pragma once

// Command-line front end: configuration, verification suites and report
// assembly. tools/poincare_cli.cpp is a thin wrapper around run_cli.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "poincare/verify.hpp"

namespace poincare {

/// Exit codes of every command.
enum ExitCode : int { kAllPass = 0, kFailure = 1, kUsage = 2 };

struct RunConfig {
  std::string format = "table";  // json | csv | table
  int order = 15;                // series order for the identity checks
  Rational width = Rational(1, 100000000);
  int jobs = 1;
  std::string cache_path;
  int max_n = 25;          // P_n, Ptilde_n families
  int max_interlace = 20;  // interlacing and sign alternation
  int max_m = 12;          // F_m / Fhat_n location, weights, G, K
  int max_shadow = 10;     // crossing shadow P_n with 5 <= n <= max_shadow
  int max_scaled = 8;      // scaled limit 3 <= m <= max_scaled
};

/// One unit of verification work; `run` may throw, which counts as a failure.
struct Check {
  std::string claim;
  int index;
  std::function<Verdict()> run;
};

/// Suite names: all, realroot, interlace, ulc, identities, location,
/// crossings, fm. Throws std::invalid_argument for anything else.
std::vector<Check> suite_checks(std::string_view suite, const RunConfig& config);
const std::vector<std::string>& suite_names();

struct SuiteReport {
  std::vector<Verdict> verdicts;  // in check order
  int passed = 0;
  int failed = 0;
  int informational = 0;
  double millis = 0;

  bool all_pass() const { return failed == 0; }
};

/// Runs the checks on up to `jobs` threads; the verdict order is the check
/// order regardless of scheduling.
SuiteReport run_checks(const std::vector<Check>& checks, int jobs);

/// Summary object: counts, wall time and the configuration.
Json summary_json(const SuiteReport& report, std::string_view suite, const RunConfig& config);

/// Parses "a..b" or a single integer into an inclusive range; throws
/// std::invalid_argument.
std::pair<int, int> parse_range(std::string_view text);

/// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace poincare
