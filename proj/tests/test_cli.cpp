#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_stdout.tmp";
  const std::string err_path = "cli_stderr.tmp";
  const std::string cmd =
      std::string(MONOGAMY_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

}  // namespace

TEST_CASE("measure --family w reports the monogamy extremes") {
  const auto r = run_cli("measure --family w");
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["sC"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(j["sE"].get<double>() == doctest::Approx(1.65014327875).epsilon(1e-9));
  CHECK(j["discord_sum"].get<double>() == doctest::Approx(3.3002865575).epsilon(1e-9));
}

TEST_CASE("measure --family ghz reports zeros") {
  const auto r = run_cli("measure --family ghz");
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["sC"].get<double>() == 0.0);
  CHECK(j["sE"].get<double>() == 0.0);
  for (const char* pair : {"AB", "AC", "BC"})
    CHECK(j["pairs"][pair]["concurrence"].get<double>() == 0.0);
}

TEST_CASE("measure on an invariant-violating file exits 2 and names the invariant") {
  {
    std::ofstream os("bad_norm.json");
    os << R"({"n_qubits": 1, "amplitudes": [[0.5, 0.0], [0.0, 0.0]]})";
  }
  const auto r = run_cli("measure --input bad_norm.json");
  std::remove("bad_norm.json");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("normalization violated") != std::string::npos);
}

TEST_CASE("measure rejects missing files and malformed JSON with exit 2") {
  CHECK(run_cli("measure --input does_not_exist.json").exit_code == 2);
  {
    std::ofstream os("broken.json");
    os << "{not json";
  }
  const auto r = run_cli("measure --input broken.json");
  std::remove("broken.json");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("input error") != std::string::npos);
}

TEST_CASE("family writes a state that measures identically after a round trip") {
  const std::string params =
      R"('{"l": [0.57735026918962576, 0, 0.57735026918962576, 0.57735026918962576, 0], "theta": 0.0}')";
  const auto direct = run_cli("measure --family acin --params " + params);
  REQUIRE(direct.exit_code == 0);

  const auto emitted = run_cli("family --family acin --params " + params +
                               " --output acin_state.json");
  REQUIRE(emitted.exit_code == 0);
  const auto via_file = run_cli("measure --input acin_state.json");
  CHECK(via_file.exit_code == 0);
  CHECK(json::parse(via_file.out) == json::parse(direct.out));

  // the written file re-reads to the identical state (bit-exact round trip)
  const auto round1 = json::parse(slurp("acin_state.json"));
  const auto reread = run_cli("family --family acin --params " + params);
  CHECK(json::parse(reread.out) == round1);
  std::remove("acin_state.json");
}

TEST_CASE("measure on the wbar mixture exercises the density-matrix path") {
  const auto r = run_cli(R"(measure --family wbar-mix --params '{"p1": 0.5}')");
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["pairs"]["AB"]["concurrence"].get<double>() ==
        doctest::Approx(1.0 / 3).epsilon(1e-9));
  CHECK_FALSE(j.contains("discord_sum"));
}

TEST_CASE("sample is deterministic and honors the seed") {
  const std::string args = "sample --objective sC --samples 2000 --seed 7";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto j = json::parse(a.out);
  CHECK(j["seed"].get<int>() == 7);
  CHECK(j["best_value"].get<double>() <= 2.0 + 1e-9);

  const auto other_seed = run_cli("sample --objective sC --samples 2000 --seed 8");
  CHECK(other_seed.out != a.out);
}

TEST_CASE("sample emits a CSV histogram on request") {
  const auto r =
      run_cli("sample --objective sE --samples 500 --seed 3 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("# seed=3 objective=sE samples=500") == 0);
  CHECK(r.out.find("value,count\n") != std::string::npos);
}

TEST_CASE("optimize over wclass reaches the sC maximum") {
  const auto r = run_cli("optimize --objective sC --family wclass --starts 6 --seed 2");
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["best_value"].get<double>() == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(j["best_params"].contains("r1"));
}

TEST_CASE("unknown names exit 2 and list the valid options") {
  const auto bad_objective = run_cli("sample --objective bogus --samples 10");
  CHECK(bad_objective.exit_code == 2);
  CHECK(bad_objective.err.find("valid:") != std::string::npos);

  const auto bad_family = run_cli("measure --family bogus");
  CHECK(bad_family.exit_code == 2);
  CHECK(bad_family.err.find("valid:") != std::string::npos);

  const auto bad_search_family = run_cli("optimize --objective sC --family bogus");
  CHECK(bad_search_family.exit_code == 2);
}

TEST_CASE("scan reports the conjecture margin") {
  const auto r = run_cli("scan --n 3 --samples 2000 --seed 5");
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["best_value"].get<double>() <= 2.0 + 1e-9);
  CHECK(j["extras"].contains("gap_to_w"));
  CHECK(j["extras"]["bound_satisfied"].get<double>() == 1.0);

  const auto csv = run_cli("scan --n 3 --samples 1000 --seed 5 --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.out.find("# seed=5 scan_n=3") == 0);
  CHECK(csv.out.find("value,count\n") != std::string::npos);
}

TEST_CASE("unknown flags are input errors") {
  CHECK(run_cli("sample --bogus-flag 3").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("verify --quick passes with the default seed") {
  const auto r = run_cli("verify --quick");
  CHECK(r.exit_code == 0);
  // one JSON object per line; the last line is the summary
  std::istringstream lines(r.out);
  std::string line, last;
  std::size_t checks = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const auto j = json::parse(line);
    if (j.contains("name")) {
      ++checks;
      CHECK(j.contains("expected"));
      CHECK(j.contains("observed"));
      CHECK(j.contains("tolerance"));
      CHECK(j["pass"].is_boolean());
    }
    last = line;
  }
  const auto summary = json::parse(last);
  CHECK(summary["failures"].get<int>() == 0);
  CHECK(summary["checks"].get<std::size_t>() == checks);
  CHECK(summary["quick"].get<bool>() == true);
}

TEST_CASE("verify with an injected Wootters fault fails with exit 1") {
  const auto r = run_cli("verify --quick --inject-fault wootters-sign");
  CHECK(r.exit_code == 1);
}
