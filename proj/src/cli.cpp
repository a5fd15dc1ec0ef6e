#include "vrq/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "vrq/errors.hpp"
#include "vrq/experiments.hpp"

namespace vrq::cli {

using nlohmann::json;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("VRQ_BUDGET"); env && *env) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size() && value > 0) return value;
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("VRQ_BUDGET is not a positive integer: ") + env);
  }
  return kDefaultBudget;
}

ParseResult parse_args(int argc, const char* const* argv) {
  RunConfig config;
  ParseResult result;
  try {
    config.budget = default_budget();
  } catch (const InvalidArgument& e) {
    result.exit_code = kExitInvalid;
    result.message = e.what();
    return result;
  }
  config.threads = std::max(1u, std::thread::hardware_concurrency());

  CLI::App app{"Vietoris-Rips complexes of Hamming cubes"};
  app.require_subcommand(1);
  std::string format = "tsv";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", config.field_char, "Prime field characteristic")->capture_default_str();
    sub->add_option("--budget", config.budget, "Cap on stored simplices")->capture_default_str();
    sub->add_option("--threads", config.threads, "Enumeration workers");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  };
  auto add_space = [&](CLI::App* sub) {
    auto* n = sub->add_option("--n", config.n, "Hypercube dimension (m = 2^n)");
    auto* m = sub->add_option("--m", config.m, "Number of vertices of V_m");
    n->excludes(m);
    m->excludes(n);
    sub->add_option("--r", config.r, "Scale parameter")->required();
  };

  auto* betti = app.add_subcommand("betti", "Reduced Betti numbers of VR(V_m, r)");
  add_space(betti);
  add_common(betti);
  betti->add_option("--maxdim", config.maxdim, "Highest homological dimension (default 3)");
  betti->add_option("--export-skeleton", config.export_skeleton, "Write the skeleton as text");

  auto* predict = app.add_subcommand("predict", "Closed-form or conjectured homotopy type");
  add_space(predict);
  add_common(predict);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", config.suite, "Suite name")->required()->check(CLI::IsMember(kSuites));
  add_common(verify);
  verify->add_option("--r", config.r, "Scale for the splitting suite (default 2)");
  verify->add_option("--maxdim", config.maxdim, "Highest dimension checked");
  verify->add_option("--nmax", config.nmax, "Largest n");
  verify->add_option("--mmax", config.mmax, "Largest m");
  verify->add_option("--rmax", config.rmax, "Largest r for table1");
  verify->add_option("--samples", config.samples, "Random complexes for the oracle suite");
  verify->add_option("--seed", config.seed, "Seed for the oracle suite");

  auto* survey = app.add_subcommand("survey", "Computed vs predicted grid over n and r");
  add_common(survey);
  survey->add_option("--nmax", config.nmax, "Largest n (default 4)");
  survey->add_option("--rmax", config.rmax, "Largest r (default 4)");
  survey->add_option("--maxdim", config.maxdim, "Highest dimension (default 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    result.exit_code = kExitOk;
    result.message = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitInvalid;
    result.message = e.what();
    return result;
  }
  config.format = format == "json" ? OutputFormat::json : OutputFormat::tsv;
  if (betti->parsed()) config.command = Command::betti;
  if (predict->parsed()) config.command = Command::predict;
  if (verify->parsed()) config.command = Command::verify;
  if (survey->parsed()) config.command = Command::survey;
  if ((betti->parsed() || predict->parsed()) && !config.n && !config.m) {
    result.exit_code = kExitInvalid;
    result.message = "exactly one of --n or --m is required";
    return result;
  }
  if (config.threads == 0) config.threads = 1;
  result.config = config;
  return result;
}

namespace {

EnumerationOptions enumeration(const RunConfig& config) {
  EnumerationOptions opts;
  opts.budget = config.budget;
  opts.threads = config.threads;
  return opts;
}

SpaceSpec space_of(const RunConfig& config) {
  if (config.n.has_value() == config.m.has_value())
    throw InvalidArgument("exactly one of --n or --m is required");
  if (!config.r) throw InvalidArgument("--r is required");
  if (config.n) return SpaceSpec::hypercube(*config.n, *config.r);
  return SpaceSpec::truncated(*config.m, *config.r);
}

json space_params(const RunConfig& config) {
  json p = json::object();
  if (config.n) p["n"] = *config.n;
  if (config.m) p["m"] = *config.m;
  if (config.r) p["r"] = *config.r;
  p["field"] = config.field_char;
  return p;
}

std::string betti_summary(const BettiVector& b) {
  std::string out;
  for (unsigned i = 0; i < b.reduced_betti.size(); ++i) {
    if (b.reduced_betti[i] == 0) continue;
    if (!out.empty()) out += ",";
    out += "b" + std::to_string(i) + "=" + std::to_string(b.reduced_betti[i]);
  }
  return out.empty() ? "*" : out;
}

std::string prediction_summary(const PredictionRecord& p) {
  if (p.status == PredictionStatus::unknown) return "unknown";
  std::string out;
  for (const auto& [dim, v] : p.predicted_reduced_betti) {
    if (!out.empty()) out += ",";
    out += "b" + std::to_string(dim) + "=" + v.str();
  }
  return out.empty() ? "*" : out;
}

CheckLine check(std::string name, std::string expected, std::string computed, bool ok,
                std::string provenance) {
  return {std::move(name), std::move(expected), std::move(computed),
          ok ? CheckStatus::pass : CheckStatus::fail, std::move(provenance)};
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

void add_survey(Report& report, const SurveyReport& survey) {
  report.grid.assign(survey.r_max + 1, {});
  for (const auto& cell : survey.cells) {
    const std::string computed = cell.computed ? betti_summary(*cell.computed) : "-";
    report.grid[cell.r].push_back(to_string(cell.status) + ":" + computed);
    CheckLine line;
    line.name = "Q_" + std::to_string(cell.n) + " r=" + std::to_string(cell.r);
    line.expected = prediction_summary(cell.prediction);
    line.computed = computed + (cell.note.empty() ? "" : " (" + cell.note + ")");
    line.provenance = to_string(cell.prediction.status);
    line.status = cell.status == CellStatus::match      ? CheckStatus::pass
                  : cell.status == CellStatus::mismatch ? CheckStatus::fail
                                                        : CheckStatus::skipped;
    report.checks.push_back(std::move(line));
  }
}

// Random clique complex with at most `cap` simplices.
Skeleton random_flag_complex(std::mt19937_64& rng, std::uint64_t cap) {
  for (;;) {
    const unsigned v = 3 + static_cast<unsigned>(rng() % 10);
    const double density = std::uniform_real_distribution<double>(0.2, 0.85)(rng);
    std::vector<std::vector<bool>> adj(v, std::vector<bool>(v, false));
    std::bernoulli_distribution edge(density);
    for (unsigned a = 0; a < v; ++a)
      for (unsigned b = a + 1; b < v; ++b) adj[a][b] = adj[b][a] = edge(rng);
    std::vector<VertexLabel> verts(v);
    for (unsigned i = 0; i < v; ++i) verts[i] = i;
    Skeleton skel = flag_complex(
        verts, [&](VertexLabel a, VertexLabel b) { return adj[a][b]; }, v - 1, v);
    if (skel.total_count() <= cap) return skel;
  }
}

Report suite_table1(const RunConfig& config) {
  const unsigned nmax = config.nmax.value_or(5);
  const unsigned rmax = config.rmax.value_or(nmax == 0 ? 0 : nmax - 1);
  const unsigned maxdim = config.maxdim.value_or(7);
  Report report;
  report.params = {{"nmax", nmax}, {"rmax", rmax}, {"maxdim", maxdim}, {"field", config.field_char}};
  add_survey(report, table_survey(nmax, rmax, PrimeField(config.field_char), maxdim,
                                  enumeration(config)));
  return report;
}

Report suite_lemma_link(const RunConfig& config) {
  const std::uint64_t mmax = config.mmax.value_or(256);
  Report report;
  report.params = {{"mmax", mmax}, {"field", config.field_char}};
  for (std::uint64_t m = 2; m <= mmax; ++m) {
    const LinkReport rep = link_homotopy_check(m, PrimeField(config.field_char), enumeration(config));
    report.checks.push_back(check("lk(" + std::to_string(m - 1) + ") in G_" + std::to_string(m) + "^2",
                                  "b2=" + std::to_string(rep.expected_alpha) + " only",
                                  join(rep.betti.reduced_betti), rep.passed, "theorem"));
  }
  return report;
}

Report suite_theorem_gm2(const RunConfig& config) {
  const std::uint64_t mmax = config.mmax.value_or(64);
  Report report;
  report.params = {{"mmax", mmax}, {"field", config.field_char}};
  for (std::uint64_t m = 1; m <= mmax; ++m) {
    const Skeleton skel = enumerate_skeleton(SpaceSpec::truncated(m, 2), 4, enumeration(config));
    const BettiVector b = betti_numbers(skel, PrimeField(config.field_char), 3);
    const BigInt expected = alpha_partial_sum(m);
    const auto& v = b.reduced_betti;
    const bool ok = b.trusted_through >= 3 && v[0] == 0 && v[1] == 0 && v[2] == 0 &&
                    BigInt(v[3]) == expected;
    report.checks.push_back(check("Cl(G_" + std::to_string(m) + "^2)", "b3=" + expected.str() + " only",
                                  join(v), ok, "theorem"));
  }
  return report;
}

Report suite_splitting(const RunConfig& config) {
  const unsigned r = config.r.value_or(2);
  const std::uint64_t mmax = config.mmax.value_or(64);
  const unsigned maxdim = config.maxdim.value_or(3);
  Report report;
  report.params = {{"r", r}, {"mmax", mmax}, {"maxdim", maxdim}, {"field", config.field_char}};
  for (std::uint64_t m = 2; m <= mmax; ++m) {
    const SplittingReport rep =
        splitting_check(m, r, PrimeField(config.field_char), maxdim, enumeration(config));
    std::string holds;
    for (bool h : rep.holds) holds += h ? '1' : '0';
    report.checks.push_back(check("Betti additivity over GF(" + std::to_string(config.field_char) +
                                      ") m=" + std::to_string(m),
                                  join(rep.betti_G_m.reduced_betti),
                                  join(rep.betti_G_m_minus_1.reduced_betti) + " + susp " +
                                      join(rep.betti_L_m.reduced_betti) + " holds=" + holds,
                                  rep.all_hold(), r == 2 ? "theorem" : "observation"));
  }
  return report;
}

Report suite_kneser(const RunConfig& config) {
  const unsigned nmax = config.nmax.value_or(7);
  Report report;
  report.params = {{"nmax", nmax}, {"field", config.field_char}};
  for (unsigned n = 4; n <= nmax; ++n) {
    const KneserReport rep = kneser_check(n, PrimeField(config.field_char), enumeration(config));
    report.checks.push_back(check("I(KG_{" + std::to_string(n) + ",2})",
                                  "b2=" + std::to_string(rep.expected) + " only",
                                  join(rep.betti.reduced_betti), rep.passed, "theorem"));
  }
  return report;
}

Report suite_oracle(const RunConfig& config) {
  Report report;
  report.params = {{"samples", config.samples}, {"seed", config.seed}, {"field", config.field_char}};
  std::mt19937_64 rng(config.seed);
  const PrimeField field(config.field_char);
  for (unsigned i = 0; i < config.samples; ++i) {
    const Skeleton skel = random_flag_complex(rng, 200);
    const unsigned maxdim = static_cast<unsigned>(std::max(0, skel.top_dimension()));
    const BettiVector sparse = betti_numbers(skel, field, maxdim);
    const BettiVector dense = dense_betti_oracle(skel, field, maxdim);
    report.checks.push_back(check("random flag complex #" + std::to_string(i) + " (" +
                                      std::to_string(skel.total_count()) + " simplices)",
                                  join(dense.reduced_betti), join(sparse.reduced_betti),
                                  sparse == dense, "oracle"));
  }
  return report;
}

}  // namespace

int exit_code_for(const Report& report) {
  for (const auto& c : report.checks)
    if (c.status == CheckStatus::fail) return kExitMismatch;
  return kExitOk;
}

Outcome cmd_betti(const RunConfig& config) {
  const SpaceSpec space = space_of(config);
  const unsigned maxdim = config.maxdim.value_or(3);
  const PrimeField field(config.field_char);
  const Skeleton skel = enumerate_skeleton(space, maxdim + 1, enumeration(config));
  if (config.export_skeleton) {
    std::ofstream file(*config.export_skeleton);
    if (!file) throw InvalidArgument("cannot open " + *config.export_skeleton);
    write_skeleton_text(skel, file);
  }
  Outcome out;
  out.report.command = "betti";
  out.report.params = space_params(config);
  out.report.params["maxdim"] = maxdim;
  out.report.params["budget"] = config.budget;
  const BettiVector betti = betti_numbers(skel, field, maxdim);
  out.report.betti = betti_entries(betti);
  out.report.counts = skel.counts();
  if (space.is_hypercube()) {
    const PredictionRecord prediction = predicted_betti(space.n(), space.r());
    out.report.prediction = summarize(prediction);
    // A conjecture that disagrees is still reported as a failed check.
    if (const auto ok = prediction_matches(prediction, betti))
      out.report.checks.push_back(check(space.describe(), prediction_summary(prediction),
                                        betti_summary(betti), *ok, to_string(prediction.status)));
  }
  out.exit_code = exit_code_for(out.report);
  return out;
}

Outcome cmd_predict(const RunConfig& config) {
  const SpaceSpec space = space_of(config);
  if (!space.is_hypercube()) throw InvalidArgument("predictions exist only for m = 2^n");
  Outcome out;
  out.report.command = "predict";
  out.report.params = space_params(config);
  out.report.params.erase("field");
  out.report.prediction = summarize(predicted_betti(space.n(), space.r()));
  return out;
}

Outcome cmd_verify(const RunConfig& config) {
  Report report;
  const std::string& s = config.suite;
  if (s == "table1")
    report = suite_table1(config);
  else if (s == "lemma-link")
    report = suite_lemma_link(config);
  else if (s == "theorem-gm2")
    report = suite_theorem_gm2(config);
  else if (s == "splitting")
    report = suite_splitting(config);
  else if (s == "kneser")
    report = suite_kneser(config);
  else if (s == "oracle")
    report = suite_oracle(config);
  else
    throw InvalidArgument("unknown suite '" + s + "'");
  report.command = "verify " + s;
  return {report, exit_code_for(report)};
}

Outcome cmd_survey(const RunConfig& config) {
  const unsigned nmax = config.nmax.value_or(4);
  const unsigned rmax = config.rmax.value_or(4);
  const unsigned maxdim = config.maxdim.value_or(3);
  Outcome out;
  out.report.command = "survey";
  out.report.params = {{"nmax", nmax}, {"rmax", rmax}, {"maxdim", maxdim}, {"field", config.field_char}};
  add_survey(out.report, table_survey(nmax, rmax, PrimeField(config.field_char), maxdim,
                                      enumeration(config)));
  out.exit_code = exit_code_for(out.report);
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    switch (config.command) {
      case Command::betti: outcome = cmd_betti(config); break;
      case Command::predict: outcome = cmd_predict(config); break;
      case Command::verify: outcome = cmd_verify(config); break;
      case Command::survey: outcome = cmd_survey(config); break;
    }
  } catch (const SizeBudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (partial count " << e.partial_count() << ")\n";
    return kExitBudget;
  } catch (const std::bad_alloc&) {
    err << "out of memory\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "invalid arguments: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    err << "invalid arguments: " << e.what() << '\n';
    return kExitInvalid;
  }
  outcome.report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (config.format == OutputFormat::json)
    out << to_json(outcome.report).dump(2) << '\n';
  else
    out << to_tsv(outcome.report);
  return outcome.exit_code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const ParseResult parsed = parse_args(argc, argv);
  if (!parsed.config) {
    (parsed.exit_code == kExitOk ? out : err) << parsed.message << '\n';
    return parsed.exit_code;
  }
  return run(*parsed.config, out, err);
}

}  // namespace vrq::cli
