#include "monogamy/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>

namespace monogamy {

using nlohmann::json;

double round_to_significant(double x, int digits) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

namespace {

json complex_to_json(const Complex<double>& z) { return json::array({z.real(), z.imag()}); }

Complex<double> complex_from_json(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument(std::string(where) +
                                ": each entry must be a [re, im] number pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json rounded(double x) { return round_to_significant(x, 12); }

}  // namespace

json state_to_json(const PureState<double>& psi) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < psi.dim(); ++i) amps.push_back(complex_to_json(psi.amplitude(i)));
  return json{{"n_qubits", psi.n_qubits()}, {"amplitudes", std::move(amps)}};
}

PureState<double> pure_state_from_json(const json& j) {
  if (!j.contains("n_qubits") || !j["n_qubits"].is_number_integer())
    throw std::invalid_argument("pure state: missing integer field 'n_qubits'");
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
    throw std::invalid_argument("pure state: missing array field 'amplitudes'");
  const int n = j["n_qubits"].get<int>();
  if (n < 1 || n > 5)
    throw std::invalid_argument("pure state: system size out of supported range [1, 5]");
  const auto& arr = j["amplitudes"];
  Vector<double> amps(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i)
    amps[static_cast<Eigen::Index>(i)] = complex_from_json(arr[i], "pure state amplitudes");
  return PureState<double>(n, std::move(amps));  // enforces length/norm/finiteness
}

json density_to_json(const DensityMatrix<double>& rho) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < rho.dim(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < rho.dim(); ++c)
      row.push_back(complex_to_json(rho.entries()(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"dim", rho.dim()}, {"rows", std::move(rows)}};
}

DensityMatrix<double> density_matrix_from_json(const json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw std::invalid_argument("density matrix: missing integer field 'dim'");
  if (!j.contains("rows") || !j["rows"].is_array())
    throw std::invalid_argument("density matrix: missing array field 'rows'");
  const Eigen::Index dim = j["dim"].get<Eigen::Index>();
  if (dim < 2 || dim > 32 || (dim & (dim - 1)) != 0)
    throw std::invalid_argument("density matrix: dim must be 2^n for n in [1, 5]");
  const auto& rows = j["rows"];
  if (static_cast<Eigen::Index>(rows.size()) != dim)
    throw std::invalid_argument("density matrix: shape violated (row count != dim)");
  Matrix<double> m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
      throw std::invalid_argument("density matrix: shape violated (column count != dim)");
    for (Eigen::Index c = 0; c < dim; ++c)
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)], "density matrix rows");
  }
  return DensityMatrix<double>::validated(std::move(m));  // hermiticity/trace/positivity
}

StateVariant state_variant_from_json(const json& j) {
  if (j.contains("amplitudes")) return pure_state_from_json(j);
  if (j.contains("rows")) return density_matrix_from_json(j);
  throw std::invalid_argument(
      "state: expected a pure-state ('amplitudes') or density-matrix ('rows') document");
}

json report_to_json(const MeasureReport<double>& report) {
  auto pair = [](const PairMeasures<double>& p) {
    return json{{"concurrence", rounded(p.concurrence)}, {"eof", rounded(p.eof)}};
  };
  json out{
      {"pairs", json{{"AB", pair(report.ab)}, {"AC", pair(report.ac)}, {"BC", pair(report.bc)}}},
      {"sC", rounded(report.sc)},
      {"sE", rounded(report.se)},
      {"margins",
       json{{"c_max", rounded(report.margins.c_max)},
            {"sC2", rounded(report.margins.sc2)},
            {"liu_eof", rounded(report.margins.liu_eof)},
            {"liu_conc", rounded(report.margins.liu_conc)}}},
  };
  if (report.discord_sum) out["discord_sum"] = rounded(*report.discord_sum);
  if (report.tangle_residuals) {
    const auto& t = *report.tangle_residuals;
    out["tangle_residuals"] =
        json{{"A", rounded(t[0])}, {"B", rounded(t[1])}, {"C", rounded(t[2])}};
  }
  return out;
}

json search_result_to_json(const SearchResult& result) {
  json out{
      {"best_value", rounded(result.best_value)},
      {"seed", result.seed},
      {"samples_or_iterations", result.samples_or_iterations},
  };
  if (!result.best_params.empty()) {
    json params;
    for (const auto& [k, v] : result.best_params) params[k] = rounded(v);
    out["best_params"] = std::move(params);
  }
  if (result.best_state) out["best_state"] = state_to_json(*result.best_state);
  if (!result.extras.empty()) {
    json extras;
    for (const auto& [k, v] : result.extras) extras[k] = rounded(v);
    out["extras"] = std::move(extras);
  }
  json trace = json::array();
  for (const auto& [iter, best] : result.trace)
    trace.push_back(json::array({iter, rounded(best)}));
  out["trace"] = std::move(trace);
  return out;
}

void write_histogram_csv(std::ostream& os, const std::vector<double>& values,
                         const std::string& header) {
  constexpr double kBinWidth = 1e-3;
  std::map<long long, std::uint64_t> bins;
  for (double v : values) ++bins[static_cast<long long>(std::floor(v / kBinWidth))];
  if (!header.empty()) os << "# " << header << "\n";
  os << "value,count\n";
  char buf[32];
  for (const auto& [bin, count] : bins) {
    std::snprintf(buf, sizeof buf, "%.3f", static_cast<double>(bin) * kBinWidth);
    os << buf << "," << count << "\n";
  }
}

}  // namespace monogamy
