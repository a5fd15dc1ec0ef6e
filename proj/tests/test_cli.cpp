#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vrq/cli.hpp"

using namespace vrq;
using namespace vrq::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "vrq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Run r = invoke(args);
  REQUIRE(r.code == kExitOk);
  return nlohmann::json::parse(r.out);
}

std::uint64_t betti_at(const nlohmann::json& j, unsigned dim) {
  for (const auto& e : j.at("betti"))
    if (e.at("dim") == dim) return e.at("value");
  FAIL("dimension missing");
  return 0;
}

}  // namespace

TEST_CASE("betti command") {
  const auto q4 = json_of({"betti", "--n", "4", "--r", "2", "--maxdim", "4"});
  CHECK(betti_at(q4, 3) == 9);
  CHECK(q4.at("counts") == nlohmann::json({16, 80, 160, 120, 16, 0}));
  CHECK(q4.at("prediction").at("status") == "theorem");
  CHECK(q4.at("betti").at(4).at("trusted") == true);

  CHECK(betti_at(json_of({"betti", "--m", "12", "--r", "2", "--maxdim", "4"}), 3) == 2);
  CHECK(betti_at(json_of({"betti", "--n", "3", "--r", "0", "--maxdim", "1"}), 0) == 7);
}

TEST_CASE("predict command") {
  const auto q9 = json_of({"predict", "--n", "9", "--r", "2"});
  CHECK(q9.at("prediction").at("status") == "theorem");
  CHECK(q9.at("prediction").at("values").at("3") == 7937);
  const auto q8 = json_of({"predict", "--n", "8", "--r", "3"});
  CHECK(q8.at("prediction").at("status") == "conjecture");
  CHECK(q8.at("prediction").at("values").at("4") == 351);
  CHECK(q8.at("prediction").at("values").at("7") == 1120);
  CHECK(json_of({"predict", "--n", "5", "--r", "4"}).at("prediction").at("values").at("15") == 1);
}

TEST_CASE("verify suites pass") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "table1", "--nmax", "5"},
        {"verify", "lemma-link", "--mmax", "64"},
        {"verify", "theorem-gm2", "--mmax", "16"},
        {"verify", "splitting", "--r", "2", "--mmax", "16", "--maxdim", "3"},
        {"verify", "kneser", "--nmax", "6"},
        {"verify", "oracle", "--samples", "10"}}) {
    const Run r = invoke(args);
    CHECK_MESSAGE(r.code == kExitOk, args[1] << ": " << r.out << r.err);
    CHECK(r.out.find("fail") == std::string::npos);
  }
}

TEST_CASE("exit codes") {
  CHECK(invoke({"betti", "--n", "3"}).code == kExitInvalid);
  CHECK(invoke({"betti", "--n", "3", "--m", "8", "--r", "1"}).code == kExitInvalid);
  CHECK(invoke({"betti", "--r", "1"}).code == kExitInvalid);
  CHECK(invoke({"betti", "--n", "3", "--r", "1", "--field", "4"}).code == kExitInvalid);
  CHECK(invoke({"verify", "nonsense"}).code == kExitInvalid);
  CHECK(invoke({"predict", "--m", "12", "--r", "2"}).code == kExitInvalid);

  const Run budget = invoke({"betti", "--n", "5", "--r", "2", "--budget", "50"});
  CHECK(budget.code == kExitBudget);
  CHECK(budget.err.find("partial count") != std::string::npos);

  CHECK(invoke({"betti", "--n", "4", "--r", "2", "--maxdim", "4"}).code == kExitOk);

  Report report;
  report.checks.push_back({"a", "1", "1", CheckStatus::pass, "derived"});
  report.checks.push_back({"b", "1", "-", CheckStatus::skipped, "derived"});
  CHECK(exit_code_for(report) == kExitOk);
  report.checks.push_back({"c", "1", "2", CheckStatus::fail, "theorem"});
  CHECK(exit_code_for(report) == kExitMismatch);
}

TEST_CASE("budget environment override") {
  ::setenv("VRQ_BUDGET", "1234", 1);
  CHECK(default_budget() == 1234);
  ::setenv("VRQ_BUDGET", "lots", 1);
  CHECK(invoke({"betti", "--n", "3", "--r", "1"}).code == kExitInvalid);
  ::unsetenv("VRQ_BUDGET");
  CHECK(default_budget() == kDefaultBudget);
}

TEST_CASE("JSON reports round-trip") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"betti", "--n", "5", "--r", "3", "--maxdim", "8"},
        {"predict", "--n", "40", "--r", "2"},
        {"survey", "--nmax", "4", "--rmax", "3"},
        {"verify", "kneser", "--nmax", "5"}}) {
    const auto j = json_of(args);
    const Report back = report_from_json(j);
    CHECK(to_json(back) == j);
  }
  // c_60 needs more than 64 bits and travels as a string.
  const auto big = json_of({"predict", "--n", "60", "--r", "2"});
  CHECK(big.at("prediction").at("values").at("3").is_string());
  CHECK(to_json(report_from_json(big)) == big);
}

TEST_CASE("report bodies are deterministic for a fixed thread count") {
  for (const char* threads : {"1", "4"}) {
    const std::vector<std::string> args = {"betti", "--n", "5", "--r", "2", "--maxdim", "4",
                                           "--threads", threads, "--format", "json"};
    const auto a = report_from_json(nlohmann::json::parse(invoke(args).out));
    const auto b = report_from_json(nlohmann::json::parse(invoke(args).out));
    CHECK(a.same_body(b));
    CHECK(to_tsv(a, false) == to_tsv(b, false));
  }
}

TEST_CASE("survey grid has rows r and columns n") {
  const auto j = json_of({"survey", "--nmax", "3", "--rmax", "2"});
  const auto& grid = j.at("grid");
  REQUIRE(grid.size() == 3);
  CHECK(grid.at(0).size() == 3);
}

TEST_CASE("skeleton export") {
  const auto path = std::filesystem::temp_directory_path() / "vrq_test_skeleton.txt";
  const Run r = invoke({"betti", "--n", "3", "--r", "2", "--export-skeleton", path.string()});
  REQUIRE(r.code == kExitOk);
  std::ifstream in(path);
  const Skeleton s = read_skeleton_text(in);
  CHECK(s.same_simplices(enumerate_skeleton(SpaceSpec::hypercube(3, 2), 4)));
  std::filesystem::remove(path);
}

TEST_CASE("the installed binary reports exit codes") {
  const std::string bin = VRQ_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("betti --n 3 --r 2") == kExitOk);
  CHECK(status("betti --n 3") == kExitInvalid);
  CHECK(status("betti --n 5 --r 2 --budget 10") == kExitBudget);
  CHECK(status("--help") == kExitOk);
}
