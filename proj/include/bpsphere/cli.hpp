#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "bpsphere/theorem.hpp"
#include "bpsphere/verification.hpp"

namespace bpsphere::cli {

inline constexpr const char* kReportVersion = "1.0";

/// Bad or inconsistent command line; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was requested; carries the rendered help text.
struct HelpRequested {
  std::string text;
};

struct RunConfig {
  std::string command;  // verify, oracle, roundtrip, constants, sample
  std::optional<TheoremId> theorem;
  int n = 3;
  int k = 1;
  int m = 1;
  int q = 0;
  double r0 = 0.0;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 42;
  std::string integrand = "gaussian";
  double radius = 1.0;
  double exponent = 1.0;
  double cutoff = 2.0;
  double threshold = 3.5;
  std::string out;
  unsigned threads = 0;
  /// Parameter points (oracle, sample) or tuples (roundtrip).
  int count = 100;
  double step = 1e-5;
  double tolerance = 0.0;  // 0 = command default

  /// The theorem configuration; requires `theorem`.
  TheoremConfig theorem_config() const;
  Integrand make_integrand() const;
};

/// Parses argv (argv[0] is the program name). `env_seed` is the value of
/// BP_SEED, used when --seed is absent. Throws UsageError or HelpRequested.
RunConfig parse_args(int argc, const char* const* argv, std::optional<std::string> env_seed = std::nullopt);

/// Report document for a list of verdicts.
nlohmann::json report_json(const std::vector<ComparisonVerdict>& verdicts, const RunConfig& config);

/// Writes the report to `path` (2-space indented). Throws std::runtime_error
/// when the file cannot be written.
void emit_report(const std::vector<ComparisonVerdict>& verdicts, const RunConfig& config, const std::string& path);

/// Copy of a report with every wall_time field removed.
nlohmann::json strip_timing(nlohmann::json report);

/// Executes a parsed command, printing a human summary to `out`. Returns
/// the process exit status (0 pass, 1 any failure).
int run(const RunConfig& config, std::ostream& out);

/// Full entry point: parse, run, map errors to exit statuses.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bpsphere::cli
