#pragma once

// Command-line front end. Parsing and dispatch live in the library so the
// tests can drive them without spawning processes.
//
// Exit codes: 0 all checks pass, 1 mathematical mismatch, 2 budget or
// resource failure, 3 invalid arguments.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vrq/report.hpp"

namespace vrq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitInvalid = 3;

enum class Command { betti, predict, verify, survey };
enum class OutputFormat { tsv, json };

inline const std::vector<std::string> kSuites = {"table1",    "lemma-link", "theorem-gm2",
                                                 "splitting", "kneser",     "oracle"};

struct RunConfig {
  Command command = Command::betti;
  std::string suite;
  std::optional<unsigned> n;
  std::optional<std::uint64_t> m;
  std::optional<unsigned> r;
  std::uint32_t field_char = 2;
  std::optional<unsigned> maxdim;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  OutputFormat format = OutputFormat::tsv;
  std::optional<std::string> export_skeleton;
  std::optional<unsigned> nmax;
  std::optional<std::uint64_t> mmax;
  std::optional<unsigned> rmax;
  unsigned samples = 100;
  std::uint64_t seed = 1;
};

struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = kExitOk;  // meaningful when config is empty (help or error)
  std::string message;
};

/// Budget default: VRQ_BUDGET if set, else 2^28.
std::uint64_t default_budget();

ParseResult parse_args(int argc, const char* const* argv);

/// Outcome of one command: the report and the exit code it implies.
struct Outcome {
  Report report;
  int exit_code = kExitOk;
};

/// kExitMismatch if any check failed, else kExitOk.
int exit_code_for(const Report& report);

Outcome cmd_betti(const RunConfig& config);
Outcome cmd_predict(const RunConfig& config);
Outcome cmd_verify(const RunConfig& config);
Outcome cmd_survey(const RunConfig& config);

/// Runs the configured command, writes the report to `out`, diagnostics to
/// `err`, and returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vrq::cli
