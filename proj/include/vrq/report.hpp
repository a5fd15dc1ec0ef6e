#pragma once

// Machine-readable run reports shared by the CLI, the Python module and the
// acceptance suite. JSON layout:
//   {command, params, betti: [{dim, value, trusted}], counts: [int],
//    prediction: {status, values}, checks: [...], elapsed_ms}

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vrq/closed_forms.hpp"
#include "vrq/experiments.hpp"
#include "vrq/homology.hpp"

namespace vrq {

struct BettiEntry {
  unsigned dim = 0;
  std::uint64_t value = 0;
  bool trusted = false;
  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

struct PredictionSummary {
  std::string status;
  bool exhaustive = false;
  std::map<std::uint64_t, BigInt> values;
  std::string description;
  friend bool operator==(const PredictionSummary&, const PredictionSummary&) = default;
};

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus status);

struct CheckLine {
  std::string name;
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::pass;
  std::string provenance;  // theorem, conjecture, derived, oracle
  friend bool operator==(const CheckLine&, const CheckLine&) = default;
};

struct Report {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::vector<BettiEntry> betti;
  std::vector<std::uint64_t> counts;
  std::optional<PredictionSummary> prediction;
  std::vector<CheckLine> checks;
  /// Survey grid, rows r and columns n, one status word per cell.
  std::vector<std::vector<std::string>> grid;
  double elapsed_ms = 0;

  /// Equality ignoring elapsed_ms.
  bool same_body(const Report& other) const;
};

std::vector<BettiEntry> betti_entries(const BettiVector& betti);
PredictionSummary summarize(const PredictionRecord& record);

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

/// Tab-separated rendering. With `with_timing` false the output is a pure
/// function of the report body.
std::string to_tsv(const Report& report, bool with_timing = true);

}  // namespace vrq
