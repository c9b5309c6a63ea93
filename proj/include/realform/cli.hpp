#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "realform/oracle.hpp"

namespace realform::cli {

enum class Subcommand { Cohom, Decide, Count, Sweep, Verify };
enum class OutputFormat { Human, Json };

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitVerifyFailed = 4;

struct RunConfig {
  Subcommand subcommand = Subcommand::Decide;
  /// JSON input file; "-" reads stdin.
  std::optional<std::string> input_path;
  OutputFormat format = OutputFormat::Human;
  EnumerationBudget budget;

  // decide / count without --input
  std::optional<std::string> family;
  std::optional<std::int64_t> n, r, s;
  /// JSON array of generators, e.g. "[[1,1]]".
  std::optional<std::string> h_gens;
  /// decide: a previous JSON report to re-decide.
  std::optional<std::string> replay_path;

  // cohom / verify without --input
  std::vector<std::string> orders;
  /// "identity", "inversion", or a JSON matrix of generator images.
  std::optional<std::string> action;
  /// verify: every involution of the group (sampled when Aut is large).
  bool all_involutions = false;

  // sweep
  std::optional<std::int64_t> n_min, n_max;
};

/// Runs one subcommand. Reports go to out, diagnostics to err; in json mode
/// failures also emit {"error": {...}} on out.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and calls run().
int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace realform::cli
