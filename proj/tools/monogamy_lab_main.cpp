// monogamy-lab: entanglement measures, monogamy sums, and bound searches for
// few-qubit states. Exit codes: 0 success, 1 check/bound failure, 2 input
// error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "monogamy/families.hpp"
#include "monogamy/io.hpp"
#include "monogamy/measures.hpp"
#include "monogamy/search.hpp"
#include "monogamy/verify.hpp"

namespace {

using nlohmann::json;
using namespace monogamy;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

struct OutputTarget {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (text.empty() || text.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream os(path);
    if (!os) throw std::invalid_argument("cannot open output file: " + path);
    os << text;
    if (text.empty() || text.back() != '\n') os << '\n';
  }
};

json parse_params(const std::string& params) {
  if (params.empty()) return json::object();
  return json::parse(params);  // json::exception maps to exit 2 below
}

Complex<double> complex_param(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  throw std::invalid_argument("family params: complex entries are numbers or [re, im] pairs");
}

template <typename T>
std::array<T, 3> array3(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != 3)
    throw std::invalid_argument(std::string("family params: '") + key +
                                "' must be an array of 3 numbers");
  return {j[key][0].get<T>(), j[key][1].get<T>(), j[key][2].get<T>()};
}

/// Families constructible from the CLI. wbar-mix yields a density matrix,
/// everything else a pure state.
StateVariant build_family(const std::string& name, const json& params) {
  const int n = params.value("n", 3);
  if (name == "w") return w_state<double>(n);
  if (name == "ghz") return ghz_state<double>(n);
  if (name == "liu") return liu_state<double>();
  if (name == "wclass") {
    if (!params.contains("r") || !params["r"].is_array() || params["r"].size() != 4)
      throw std::invalid_argument("family params: wclass needs \"r\": [r0, r1, r2, r3]");
    return wclass_state(WClassParams<double>({params["r"][0].get<double>(),
                                              params["r"][1].get<double>(),
                                              params["r"][2].get<double>(),
                                              params["r"][3].get<double>()}));
  }
  if (name == "acin") {
    if (!params.contains("l") || !params["l"].is_array() || params["l"].size() != 5)
      throw std::invalid_argument("family params: acin needs \"l\": [l0..l4] and \"theta\"");
    return acin_state(AcinParams<double>(
        {params["l"][0].get<double>(), params["l"][1].get<double>(),
         params["l"][2].get<double>(), params["l"][3].get<double>(),
         params["l"][4].get<double>()},
        params.value("theta", 0.0)));
  }
  if (name == "ghzclass") {
    return ghzclass_state(GhzClassParams<double>(
        array3<double>(params, "u"), array3<double>(params, "v"),
        array3<double>(params, "theta"), array3<double>(params, "phi")));
  }
  if (name == "genw") {
    if (!params.contains("a") || !params["a"].is_array())
      throw std::invalid_argument("family params: genw needs \"p\" and \"a\": [amplitudes]");
    std::vector<Complex<double>> a;
    for (const auto& entry : params["a"]) a.push_back(complex_param(entry));
    return generalized_w_state(GeneralizedWParams<double>(params.value("p", 1.0), std::move(a)));
  }
  if (name == "wbar-mix") return wbar_mixture<double>(params.value("p1", 0.5));
  throw std::invalid_argument("unknown family '" + name +
                              "'; valid: w ghz wclass acin ghzclass genw wbar-mix liu");
}

StateVariant load_state(const std::string& input_path, const std::string& family,
                        const std::string& params) {
  if (!input_path.empty()) {
    std::ifstream is(input_path);
    if (!is) throw std::invalid_argument("cannot open input file: " + input_path);
    json j;
    is >> j;
    return state_variant_from_json(j);
  }
  if (!family.empty()) return build_family(family, parse_params(params));
  throw std::invalid_argument("need either --input or --family");
}

int cmd_measure(const std::string& input, const std::string& family, const std::string& params,
                const OutputTarget& out) {
  const auto state = load_state(input, family, params);
  const auto report = std::holds_alternative<PureState<double>>(state)
                          ? pairwise_report(std::get<PureState<double>>(state))
                          : pairwise_report(std::get<DensityMatrix<double>>(state));
  out.write(report_to_json(report).dump(2));
  return kExitOk;
}

int cmd_family(const std::string& family, const std::string& params, const OutputTarget& out) {
  const auto state = build_family(family, parse_params(params));
  const json j = std::holds_alternative<PureState<double>>(state)
                     ? state_to_json(std::get<PureState<double>>(state))
                     : density_to_json(std::get<DensityMatrix<double>>(state));
  out.write(j.dump(2));
  return kExitOk;
}

int cmd_sample(const std::string& objective, int n, std::uint64_t samples, std::uint64_t seed,
               const std::string& format, const OutputTarget& out) {
  const Objective obj{parse_objective(objective), n};
  if (format == "csv") {
    std::vector<double> values;
    const auto result = monte_carlo_max(obj, samples, seed, &values);
    std::ostringstream os;
    write_histogram_csv(os, values,
                        "seed=" + std::to_string(seed) + " objective=" + objective +
                            " samples=" + std::to_string(samples) +
                            " best=" + std::to_string(result.best_value));
    out.write(os.str());
  } else {
    out.write(search_result_to_json(monte_carlo_max(obj, samples, seed)).dump(2));
  }
  return kExitOk;
}

int cmd_optimize(const std::string& objective, const std::string& family, int n, int starts,
                 std::uint64_t seed, const OutputTarget& out) {
  const Objective obj{parse_objective(objective), n};
  const auto result = optimize_family(obj, parse_search_family(family), starts, seed);
  out.write(search_result_to_json(result).dump(2));
  return kExitOk;
}

int cmd_scan(int n, std::uint64_t samples, std::uint64_t seed, double threshold,
             const std::string& format, const OutputTarget& out) {
  if (format == "csv") {
    std::vector<double> values;
    const auto result = conjecture_scan(n, samples, seed, threshold, &values);
    values.erase(std::remove_if(values.begin(), values.end(),
                                [](double v) { return std::isnan(v); }),
                 values.end());
    std::ostringstream os;
    write_histogram_csv(os, values,
                        "seed=" + std::to_string(seed) + " scan_n=" + std::to_string(n) +
                            " samples=" + std::to_string(samples) +
                            " best=" + std::to_string(result.best_value));
    out.write(os.str());
  } else {
    out.write(search_result_to_json(conjecture_scan(n, samples, seed, threshold)).dump(2));
  }
  return kExitOk;
}

int cmd_verify(bool quick, std::uint64_t seed, const std::string& inject_fault,
               const OutputTarget& out) {
  if (!inject_fault.empty()) {
    if (inject_fault == "wootters-sign") {
      debug::wootters_sign_fault = true;
    } else {
      throw std::invalid_argument("unknown fault '" + inject_fault +
                                  "'; valid: wootters-sign");
    }
  }
  std::ostringstream lines;
  auto sink = [&lines](const CheckResult& r) {
    const json line{{"name", r.name},
                    {"expected", round_to_significant(r.expected, 12)},
                    {"observed", round_to_significant(r.observed, 12)},
                    {"tolerance", r.tolerance},
                    {"pass", r.pass}};
    lines << line.dump() << "\n";
  };
  const auto results = run_acceptance_suite({quick, seed}, sink);
  std::size_t failures = 0;
  for (const auto& r : results) failures += r.pass ? 0 : 1;
  const json summary{
      {"checks", results.size()}, {"failures", failures}, {"seed", seed}, {"quick", quick}};
  lines << summary.dump() << "\n";
  out.write(lines.str());
  return failures == 0 ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monogamy-lab: pairwise entanglement measures and monogamy bounds"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  std::string input, family, params, objective = "sC", format = "json", output;
  std::string inject_fault;
  std::uint64_t seed = 0;  // fixed default for reproducibility
  std::uint64_t samples = 100000;
  int starts = 32;
  int n = 3;
  double threshold = 1e-3;
  bool quick = false;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", output, "write result to this path instead of stdout");
  };

  auto* measure = app.add_subcommand("measure", "pairwise measure report of a 3-qubit state");
  measure->add_option("--input", input, "state JSON file (pure or density matrix)");
  measure->add_option("--family", family, "family name: w ghz wclass acin ghzclass genw wbar-mix liu");
  measure->add_option("--params", params, "family parameters as JSON");
  add_output(measure);

  auto* fam = app.add_subcommand("family", "construct a family state and emit its JSON");
  fam->add_option("--family", family)->required();
  fam->add_option("--params", params, "family parameters as JSON");
  add_output(fam);

  auto* sample = app.add_subcommand("sample", "Haar Monte Carlo maximization of an objective");
  sample->add_option("--objective", objective, "sC sE eof_pair_sum conc_pair_sum");
  sample->add_option("--samples,-n", samples);
  sample->add_option("--n-qubits", n);
  sample->add_option("--seed", seed);
  sample->add_option("--format", format, "json or csv (value histogram)");
  add_output(sample);

  auto* optimize = app.add_subcommand("optimize", "multistart search over a family manifold");
  optimize->add_option("--objective", objective);
  optimize->add_option("--family", family)->required();
  optimize->add_option("--n-qubits", n);
  optimize->add_option("--starts", starts);
  optimize->add_option("--seed", seed);
  add_output(optimize);

  auto* scan = app.add_subcommand("scan", "n-qubit concurrence-sum conjecture scan");
  scan->add_option("--n", n)->required();
  scan->add_option("--samples", samples);
  scan->add_option("--seed", seed);
  scan->add_option("--threshold", threshold, "genuine-entanglement filter threshold");
  scan->add_option("--format", format, "json or csv (histogram of passing samples)");
  add_output(scan);

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_flag("--quick", quick, "fewer samples, slow checks skipped");
  verify->add_option("--seed", seed);
  verify->add_option("--inject-fault", inject_fault)->group("");  // debug hook, hidden
  add_output(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);           // prints the message / help text
    return code == 0 ? kExitOk : kExitInputError;  // flag errors are input errors
  }

  const OutputTarget out{output};
  try {
    if (measure->parsed()) return cmd_measure(input, family, params, out);
    if (fam->parsed()) return cmd_family(family, params, out);
    if (sample->parsed()) return cmd_sample(objective, n, samples, seed, format, out);
    if (optimize->parsed()) return cmd_optimize(objective, family, n, starts, seed, out);
    if (scan->parsed()) return cmd_scan(n, samples, seed, threshold, format, out);
    if (verify->parsed()) return cmd_verify(quick, seed, inject_fault, out);
  } catch (const BoundViolation& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: malformed JSON: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
