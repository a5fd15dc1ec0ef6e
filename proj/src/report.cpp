#include "vrq/report.hpp"

#include <sstream>

#include "vrq/errors.hpp"

namespace vrq {

using nlohmann::json;

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "fail";
}

namespace {

CheckStatus check_status_from_string(const std::string& s) {
  for (auto c : {CheckStatus::pass, CheckStatus::fail, CheckStatus::skipped})
    if (to_string(c) == s) return c;
  throw InvalidArgument("unknown check status '" + s + "'");
}

// Counts that fit a JSON integer stay numeric; wider ones become decimal strings.
json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max())
    return v.convert_to<std::uint64_t>();
  return v.str();
}

BigInt big_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::uint64_t>());
}

}  // namespace

bool Report::same_body(const Report& other) const {
  return command == other.command && params == other.params && betti == other.betti &&
         counts == other.counts && prediction == other.prediction && checks == other.checks &&
         grid == other.grid;
}

std::vector<BettiEntry> betti_entries(const BettiVector& betti) {
  std::vector<BettiEntry> out;
  for (unsigned i = 0; i < betti.reduced_betti.size(); ++i)
    out.push_back({i, betti.reduced_betti[i], betti.trusted(i)});
  return out;
}

PredictionSummary summarize(const PredictionRecord& record) {
  return {to_string(record.status), record.exhaustive, record.predicted_reduced_betti,
          record.homotopy_description};
}

json to_json(const Report& report) {
  json j;
  j["command"] = report.command;
  j["params"] = report.params;
  j["betti"] = json::array();
  for (const auto& b : report.betti)
    j["betti"].push_back({{"dim", b.dim}, {"value", b.value}, {"trusted", b.trusted}});
  j["counts"] = report.counts;
  if (report.prediction) {
    json values = json::object();
    for (const auto& [dim, v] : report.prediction->values) values[std::to_string(dim)] = big_to_json(v);
    j["prediction"] = {{"status", report.prediction->status},
                       {"exhaustive", report.prediction->exhaustive},
                       {"values", values},
                       {"description", report.prediction->description}};
  } else {
    j["prediction"] = nullptr;
  }
  j["checks"] = json::array();
  for (const auto& c : report.checks)
    j["checks"].push_back({{"name", c.name},
                           {"expected", c.expected},
                           {"computed", c.computed},
                           {"status", to_string(c.status)},
                           {"provenance", c.provenance}});
  if (!report.grid.empty()) j["grid"] = report.grid;
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params");
  for (const auto& b : j.at("betti"))
    r.betti.push_back({b.at("dim").get<unsigned>(), b.at("value").get<std::uint64_t>(),
                       b.at("trusted").get<bool>()});
  r.counts = j.at("counts").get<std::vector<std::uint64_t>>();
  if (const auto& p = j.at("prediction"); !p.is_null()) {
    PredictionSummary s;
    s.status = p.at("status").get<std::string>();
    s.exhaustive = p.value("exhaustive", false);
    s.description = p.value("description", std::string{});
    for (const auto& [dim, v] : p.at("values").items()) s.values[std::stoull(dim)] = big_from_json(v);
    r.prediction = std::move(s);
  }
  if (j.contains("checks"))
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                          c.at("computed").get<std::string>(),
                          check_status_from_string(c.at("status").get<std::string>()),
                          c.at("provenance").get<std::string>()});
  if (j.contains("grid")) r.grid = j.at("grid").get<std::vector<std::vector<std::string>>>();
  r.elapsed_ms = j.value("elapsed_ms", 0.0);
  return r;
}

std::string to_tsv(const Report& report, bool with_timing) {
  std::ostringstream out;
  out << "command\t" << report.command << '\n';
  for (const auto& [key, value] : report.params.items()) out << "param\t" << key << '\t' << value.dump() << '\n';
  if (!report.betti.empty()) {
    out << "dim\treduced_betti\ttrusted\n";
    for (const auto& b : report.betti)
      out << b.dim << '\t' << b.value << '\t' << (b.trusted ? "trusted" : "provisional") << '\n';
  }
  if (!report.counts.empty()) {
    out << "counts";
    for (auto c : report.counts) out << '\t' << c;
    out << '\n';
  }
  if (report.prediction) {
    out << "prediction\t" << report.prediction->status << '\t' << report.prediction->description
        << '\n';
    for (const auto& [dim, v] : report.prediction->values) out << "predicted\t" << dim << '\t' << v << '\n';
  }
  if (!report.grid.empty()) {
    // Rows r, columns n.
    out << "r\\n";
    for (std::size_t n = 1; n <= report.grid.front().size(); ++n) out << '\t' << n;
    out << '\n';
    for (std::size_t r = 0; r < report.grid.size(); ++r) {
      out << r;
      for (const auto& cell : report.grid[r]) out << '\t' << cell;
      out << '\n';
    }
  }
  for (const auto& c : report.checks)
    out << to_string(c.status) << '\t' << c.name << "\texpected=" << c.expected
        << "\tcomputed=" << c.computed << '\t' << c.provenance << '\n';
  if (with_timing) out << "elapsed_ms\t" << report.elapsed_ms << '\n';
  return out.str();
}

}  // namespace vrq
