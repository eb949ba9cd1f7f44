#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "monogamy/families.hpp"
#include "monogamy/measures.hpp"
#include "monogamy/random.hpp"

namespace monogamy {

enum class ObjectiveKind { sc, se, eof_pair_sum, conc_pair_sum };

struct Objective {
  ObjectiveKind kind = ObjectiveKind::sc;
  int n_qubits = 3;
};

inline const std::vector<std::pair<std::string, ObjectiveKind>>& objective_registry() {
  static const std::vector<std::pair<std::string, ObjectiveKind>> reg{
      {"sC", ObjectiveKind::sc},
      {"sE", ObjectiveKind::se},
      {"eof_pair_sum", ObjectiveKind::eof_pair_sum},
      {"conc_pair_sum", ObjectiveKind::conc_pair_sum},
  };
  return reg;
}

inline ObjectiveKind parse_objective(const std::string& name) {
  for (const auto& [n, kind] : objective_registry())
    if (n == name) return kind;
  std::string valid;
  for (const auto& [n, kind] : objective_registry()) valid += n + " ";
  throw std::invalid_argument("unknown objective '" + name + "'; valid: " + valid);
}

inline std::string objective_name(ObjectiveKind kind) {
  for (const auto& [n, k] : objective_registry())
    if (k == kind) return n;
  return "?";
}

/// Worker count for sample sharding: hardware concurrency, capped by the
/// MONOGAMY_LAB_THREADS environment variable. Results never depend on it.
inline int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("MONOGAMY_LAB_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, static_cast<unsigned>(cap));
  }
  return static_cast<int>(hw);
}

/// Thrown when a sampled or optimized state violates a proven three-qubit
/// bound; carries a dump of the offending amplitudes.
struct BoundViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Wootters concurrence of every qubit pair, pairs in lexicographic order
/// (0,1), (0,2), ..., (n-2,n-1).
inline std::vector<double> all_pair_concurrences(const PureState<double>& psi) {
  std::vector<double> out;
  const int n = psi.n_qubits();
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      out.push_back(
          wootters_concurrence(DensityMatrix<double>(reduced_density(psi, {a, b}))));
  return out;
}

namespace detail {

inline void check_three_qubit_bounds(const PureState<double>& psi,
                                     const std::vector<double>& conc) {
  const double sc = conc[0] + conc[1] + conc[2];
  double se = 0;
  for (double c : conc) se += eof_from_concurrence(c);
  const double eof_pivot =
      std::max({eof_from_concurrence(conc[0]) + eof_from_concurrence(conc[1]),
                eof_from_concurrence(conc[0]) + eof_from_concurrence(conc[2]),
                eof_from_concurrence(conc[1]) + eof_from_concurrence(conc[2])});
  const double conc_pivot = std::max({conc[0] + conc[1], conc[0] + conc[2], conc[1] + conc[2]});

  std::string which;
  if (sc > bounds::sc_max() + 1e-9) which = "sC <= 2";
  else if (se > bounds::c_max() + 1e-6) which = "sE <= c_max";
  else if (eof_pivot > bounds::pivot_eof_max() + 1e-4) which = "E_xy + E_xz <= 1.20175";
  else if (conc_pivot > bounds::pivot_conc_max() + 1e-6) which = "C_xy + C_xz <= sqrt(2)";
  if (which.empty()) return;

  std::ostringstream os;
  os.precision(17);
  os << "bound violation (" << which << "): sC=" << sc << " sE=" << se
     << "; offending amplitudes:";
  for (Eigen::Index i = 0; i < psi.dim(); ++i) {
    const auto a = psi.amplitude(i);
    os << " [" << a.real() << "," << a.imag() << "]";
  }
  throw BoundViolation(os.str());
}

}  // namespace detail

/// Objective value of a pure state. Three-qubit evaluations also enforce the
/// proven bounds and throw BoundViolation on breach; pivot-pair objectives
/// use the largest of the three pivots.
inline double evaluate_objective(const Objective& obj, const PureState<double>& psi) {
  if (psi.n_qubits() != obj.n_qubits)
    throw std::invalid_argument("evaluate_objective: state size does not match objective");
  if ((obj.kind == ObjectiveKind::eof_pair_sum || obj.kind == ObjectiveKind::conc_pair_sum) &&
      obj.n_qubits != 3)
    throw std::invalid_argument("evaluate_objective: pivot-pair objectives need n = 3");

  const auto conc = all_pair_concurrences(psi);
  if (obj.n_qubits == 3) detail::check_three_qubit_bounds(psi, conc);

  switch (obj.kind) {
    case ObjectiveKind::sc: {
      double s = 0;
      for (double c : conc) s += c;
      return s;
    }
    case ObjectiveKind::se: {
      double s = 0;
      for (double c : conc) s += eof_from_concurrence(c);
      return s;
    }
    case ObjectiveKind::eof_pair_sum: {
      const double e0 = eof_from_concurrence(conc[0]);
      const double e1 = eof_from_concurrence(conc[1]);
      const double e2 = eof_from_concurrence(conc[2]);
      return std::max({e0 + e1, e0 + e2, e1 + e2});
    }
    case ObjectiveKind::conc_pair_sum:
      return std::max({conc[0] + conc[1], conc[0] + conc[2], conc[1] + conc[2]});
  }
  throw std::logic_error("evaluate_objective: unreachable");
}

struct SearchResult {
  double best_value = 0;
  std::optional<PureState<double>> best_state;
  std::map<std::string, double> best_params;  // family searches only
  std::uint64_t samples_or_iterations = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::uint64_t, double>> trace;  // (iteration, best so far)
  std::map<std::string, double> extras;
};

namespace detail {

struct Improvement {
  std::uint64_t index;
  double value;
};

/// Runs fn(i) for i in [0, n) across workers and returns the sequential
/// improvement trace; fn must depend only on i. Exceptions propagate.
template <typename Fn>
std::vector<Improvement> sharded_improvements(std::uint64_t n, Fn&& fn) {
  const int workers =
      static_cast<int>(std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(n, 1)));
  std::vector<std::vector<Improvement>> local(workers);
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t chunk = (n + workers - 1) / workers;

  auto body = [&](int w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min(n, lo + chunk);
    double best = -std::numeric_limits<double>::infinity();
    for (std::uint64_t i = lo; i < hi; ++i) {
      const double v = fn(i);
      if (v > best) {
        best = v;
        local[w].push_back({i, v});
      }
    }
  };

  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          body(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<Improvement> merged;
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& chunk_improvements : local)
    for (const auto& imp : chunk_improvements)
      if (imp.value > best) {
        best = imp.value;
        merged.push_back(imp);
      }
  return merged;
}

}  // namespace detail

/// Haar Monte Carlo maximization of an objective. Sample i is generated from
/// RandomStream(seed, i), so the result is bit-identical for any worker
/// count. Optionally collects every sampled value (for histograms).
inline SearchResult monte_carlo_max(const Objective& obj, std::uint64_t n_samples,
                                    std::uint64_t seed,
                                    std::vector<double>* collect_values = nullptr) {
  if (n_samples < 1) throw std::invalid_argument("monte_carlo_max: need n_samples >= 1");
  if (obj.n_qubits < 1 || obj.n_qubits > 5)
    throw std::invalid_argument("monte_carlo_max: n_qubits out of range [1, 5]");
  if (collect_values) collect_values->assign(n_samples, 0.0);

  auto evaluate = [&](std::uint64_t i) {
    RandomStream stream(seed, i);
    const auto psi = haar_random_pure(obj.n_qubits, stream);
    const double v = evaluate_objective(obj, psi);
    if (collect_values) (*collect_values)[i] = v;
    return v;
  };
  const auto improvements = detail::sharded_improvements(n_samples, evaluate);
  if (improvements.empty())
    throw std::runtime_error("monte_carlo_max: no sample produced a finite value");

  SearchResult result;
  result.seed = seed;
  result.samples_or_iterations = n_samples;
  for (const auto& imp : improvements) result.trace.emplace_back(imp.index, imp.value);
  const auto& last = improvements.back();
  result.best_value = last.value;
  RandomStream stream(seed, last.index);
  result.best_state = haar_random_pure(obj.n_qubits, stream);
  return result;
}

enum class FamilyKind { wclass, acin, genw };

inline FamilyKind parse_search_family(const std::string& name) {
  if (name == "wclass") return FamilyKind::wclass;
  if (name == "acin") return FamilyKind::acin;
  if (name == "genw") return FamilyKind::genw;
  throw std::invalid_argument("unknown search family '" + name +
                              "'; valid: wclass acin genw");
}

namespace detail {

/// Family parameterizations for the derivative-free search: an ambient
/// coordinate vector plus a projection onto the constraint manifold
/// (normalize moduli, wrap the phase, clamp the weight).
struct FamilyChart {
  FamilyKind family;
  int n_qubits;

  int dimension() const {
    switch (family) {
      case FamilyKind::wclass: return 4;
      case FamilyKind::acin: return 6;
      case FamilyKind::genw: return n_qubits + 1;
    }
    return 0;
  }

  void project(std::vector<double>& x) const {
    const int nl = (family == FamilyKind::wclass) ? 4 : (family == FamilyKind::acin) ? 5 : 0;
    if (nl > 0) {
      double norm = 0;
      for (int i = 0; i < nl; ++i) {
        x[i] = std::abs(x[i]);
        norm += x[i] * x[i];
      }
      norm = std::sqrt(norm);
      for (int i = 0; i < nl; ++i) x[i] /= norm;
      if (family == FamilyKind::acin) {
        const double pi = std::numbers::pi;
        x[5] = std::fmod(x[5], pi);
        if (x[5] < 0) x[5] += pi;
      }
    } else {  // genw: weight then moduli
      x[0] = std::clamp(x[0], 0.0, 1.0);
      double norm = 0;
      for (int i = 1; i <= n_qubits; ++i) {
        x[i] = std::abs(x[i]);
        norm += x[i] * x[i];
      }
      norm = std::sqrt(norm);
      for (int i = 1; i <= n_qubits; ++i) x[i] /= norm;
    }
  }

  std::vector<double> random_start(RandomStream& stream) const {
    std::vector<double> x(dimension());
    switch (family) {
      case FamilyKind::wclass:
        for (auto& v : x) v = stream.next_gaussian();
        break;
      case FamilyKind::acin:
        for (int i = 0; i < 5; ++i) x[i] = stream.next_gaussian();
        x[5] = stream.next_double() * std::numbers::pi;
        break;
      case FamilyKind::genw:
        x[0] = stream.next_double();
        for (int i = 1; i <= n_qubits; ++i) x[i] = stream.next_gaussian();
        break;
    }
    project(x);
    return x;
  }

  PureState<double> state(const std::vector<double>& x) const {
    switch (family) {
      case FamilyKind::wclass:
        return wclass_state(WClassParams<double>({x[0], x[1], x[2], x[3]}));
      case FamilyKind::acin: {
        const double theta = std::min(x[5], std::nextafter(std::numbers::pi, 0.0));
        return acin_state(AcinParams<double>({x[0], x[1], x[2], x[3], x[4]}, theta));
      }
      case FamilyKind::genw: {
        std::vector<Complex<double>> a(n_qubits);
        for (int i = 0; i < n_qubits; ++i) a[i] = x[i + 1];
        return generalized_w_state(GeneralizedWParams<double>(x[0], std::move(a)));
      }
    }
    throw std::logic_error("FamilyChart::state: unreachable");
  }

  std::map<std::string, double> named_params(const std::vector<double>& x) const {
    std::map<std::string, double> out;
    switch (family) {
      case FamilyKind::wclass:
        for (int i = 0; i < 4; ++i) out["r" + std::to_string(i)] = x[i];
        break;
      case FamilyKind::acin:
        for (int i = 0; i < 5; ++i) out["l" + std::to_string(i)] = x[i];
        out["theta"] = x[5];
        break;
      case FamilyKind::genw:
        out["p"] = x[0];
        for (int i = 1; i <= n_qubits; ++i) out["a" + std::to_string(i - 1)] = x[i];
        break;
    }
    return out;
  }
};

struct PatternSearchOutcome {
  std::vector<double> point;
  double value;
  std::uint64_t evals;
  std::vector<Improvement> trace;  // local eval counter
};

/// Adaptive coordinate pattern search with projection. Stops when the step
/// falls below 1e-9 or the best value improves by less than 1e-12 over 50
/// sweeps.
template <typename Eval>
PatternSearchOutcome pattern_search(const FamilyChart& chart, std::vector<double> x,
                                    Eval&& eval) {
  PatternSearchOutcome out;
  out.evals = 0;
  double f = eval(x);
  ++out.evals;
  out.trace.push_back({0, f});

  std::vector<double> history{f};
  double step = 0.25;
  const int dim = chart.dimension();
  while (step >= 1e-9) {
    bool improved = false;
    for (int k = 0; k < dim; ++k) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> y = x;
        y[k] += sign * step;
        chart.project(y);
        const double fy = eval(y);
        ++out.evals;
        if (fy > f) {
          x = std::move(y);
          f = fy;
          improved = true;
          out.trace.push_back({out.evals - 1, f});
        }
      }
    }
    if (!improved) step *= 0.5;
    history.push_back(f);
    if (history.size() > 50 &&
        f - history[history.size() - 51] < 1e-12)
      break;
  }
  out.point = std::move(x);
  out.value = f;
  return out;
}

}  // namespace detail

/// Multistart derivative-free maximization of an objective over a family
/// parameterization. Start j draws its initial point from
/// RandomStream(seed, j); starts run in a fixed order, so the result is
/// deterministic. Ties keep the earliest start.
inline SearchResult optimize_family(const Objective& obj, FamilyKind family, int starts,
                                    std::uint64_t seed) {
  if (starts < 1) throw std::invalid_argument("optimize_family: need starts >= 1");
  if (family == FamilyKind::genw) {
    if (obj.n_qubits < 2 || obj.n_qubits > 5)
      throw std::invalid_argument("optimize_family: genw supports 2 <= n <= 5");
    if (obj.kind == ObjectiveKind::eof_pair_sum || obj.kind == ObjectiveKind::conc_pair_sum)
      if (obj.n_qubits != 3)
        throw std::invalid_argument(
            "optimize_family: pivot-pair objectives pair only with n = 3");
  } else if (obj.n_qubits != 3) {
    throw std::invalid_argument("optimize_family: wclass and acin are three-qubit families");
  }

  const detail::FamilyChart chart{family, obj.n_qubits};
  auto eval = [&](const std::vector<double>& x) {
    return evaluate_objective(obj, chart.state(x));
  };

  SearchResult result;
  result.seed = seed;
  std::uint64_t total_evals = 0;
  bool have_best = false;
  std::vector<double> best_point;
  for (int j = 0; j < starts; ++j) {
    RandomStream stream(seed, static_cast<std::uint64_t>(j));
    auto outcome = detail::pattern_search(chart, chart.random_start(stream), eval);
    // Pattern search improves monotonically, so if this start beats the
    // global best anywhere, its converged point carries the new best value.
    for (const auto& imp : outcome.trace)
      if (!have_best || imp.value > result.best_value) {
        result.trace.emplace_back(total_evals + imp.index, imp.value);
        result.best_value = imp.value;
        have_best = true;
        best_point = outcome.point;
      }
    total_evals += outcome.evals;
  }
  result.samples_or_iterations = total_evals;
  result.best_params = chart.named_params(best_point);
  result.best_state = chart.state(best_point);
  return result;
}

/// Central-difference gradient of the objective over the Acin manifold,
/// projected onto the tangent space of the normalization constraint.
/// Stationary points (the W point, the GHZ point for sE) return O(step).
inline double stationarity_check(const AcinParams<double>& params, const Objective& obj,
                                 double step) {
  if (step < 1e-7 || step > 1e-3)
    throw std::invalid_argument("stationarity_check: step outside [1e-7, 1e-3]");
  if (obj.n_qubits != 3)
    throw std::invalid_argument("stationarity_check: Acin manifold is three-qubit");

  // Evaluate the acin form for arbitrary ambient coordinates: moduli
  // normalized, phase taken as-is (the state is 2pi-periodic in theta).
  auto value = [&](const std::array<double, 6>& x) {
    std::array<double, 5> l;
    double norm = 0;
    for (int i = 0; i < 5; ++i) {
      l[i] = std::abs(x[i]);
      norm += l[i] * l[i];
    }
    norm = std::sqrt(norm);
    Vector<double> amps = Vector<double>::Zero(8);
    amps[0] = l[0] / norm;
    amps[4] = l[1] / norm * std::exp(Complex<double>{0, 1} * x[5]);
    amps[5] = l[2] / norm;
    amps[6] = l[3] / norm;
    amps[7] = l[4] / norm;
    return evaluate_objective(obj, PureState<double>(3, std::move(amps)));
  };

  std::array<double, 6> x{params.l[0], params.l[1], params.l[2], params.l[3], params.l[4],
                          params.theta};
  std::array<double, 6> grad{};
  for (int k = 0; k < 6; ++k) {
    auto xp = x, xm = x;
    xp[k] += step;
    xm[k] -= step;
    grad[k] = (value(xp) - value(xm)) / (2 * step);
  }
  // Remove the radial component in the moduli block (the objective is
  // scale-invariant there, so this only sheds finite-difference noise).
  double dot = 0;
  for (int i = 0; i < 5; ++i) dot += grad[i] * x[i];
  double norm2 = 0;
  for (int k = 0; k < 6; ++k) {
    const double g = k < 5 ? grad[k] - dot * x[k] : grad[k];
    norm2 += g * g;
  }
  return std::sqrt(norm2);
}

/// Haar scan for the n-qubit concurrence-sum conjecture: among samples whose
/// every single-qubit reduction has smaller eigenvalue above the filter
/// threshold, tracks max sC and the gap to the W state. The n-1 bound is a
/// conjecture for n > 3, so breaches are recorded in extras, not fatal.
/// collect_passing, when set, receives the sC of sample i at position i and
/// NaN where the filter rejected it.
inline SearchResult conjecture_scan(int n, std::uint64_t n_samples, std::uint64_t seed,
                                    double genuine_filter_threshold = 1e-3,
                                    std::vector<double>* collect_passing = nullptr) {
  if (n < 3 || n > 5) throw std::invalid_argument("conjecture_scan: n out of range [3, 5]");
  if (n_samples < 1) throw std::invalid_argument("conjecture_scan: need n_samples >= 1");
  if (collect_passing)
    collect_passing->assign(n_samples, std::numeric_limits<double>::quiet_NaN());

  const Objective obj{ObjectiveKind::sc, n};
  std::vector<std::uint8_t> passed(n_samples, 0);
  auto evaluate = [&](std::uint64_t i) {
    RandomStream stream(seed, i);
    const auto psi = haar_random_pure(n, stream);
    for (int q = 0; q < n; ++q) {
      const auto eigs = hermitian_eigenvalues<double>(reduced_density(psi, {q}));
      if (!(eigs[1] > genuine_filter_threshold))
        return -std::numeric_limits<double>::infinity();  // filtered out
    }
    passed[i] = 1;
    const double v = evaluate_objective(obj, psi);
    if (collect_passing) (*collect_passing)[i] = v;
    return v;
  };
  const auto improvements = detail::sharded_improvements(n_samples, evaluate);

  SearchResult result;
  result.seed = seed;
  result.samples_or_iterations = n_samples;
  std::uint64_t n_passed = 0;
  for (auto flag : passed) n_passed += flag;

  double best = -std::numeric_limits<double>::infinity();
  std::uint64_t best_index = 0;
  for (const auto& imp : improvements) {
    if (imp.value == -std::numeric_limits<double>::infinity()) continue;
    result.trace.emplace_back(imp.index, imp.value);
    best = imp.value;
    best_index = imp.index;
  }
  const double w_value = evaluate_objective(obj, w_state<double>(n));
  result.extras["passed_samples"] = static_cast<double>(n_passed);
  result.extras["w_value"] = w_value;
  if (result.trace.empty()) {
    result.best_value = 0;
    result.extras["bound_satisfied"] = 1;
    result.extras["gap_to_w"] = w_value;
    return result;
  }
  result.best_value = best;
  RandomStream stream(seed, best_index);
  result.best_state = haar_random_pure(n, stream);
  result.extras["gap_to_w"] = w_value - best;
  result.extras["bound_satisfied"] = best <= n - 1 + 1e-9 ? 1 : 0;
  return result;
}

struct UniquenessHit {
  std::uint64_t index;
  double sc;
  double conc_deviation;      // max_i |C_i - 2/3|
  double spectrum_deviation;  // max over qubits of reduced-spectrum distance to {2/3, 1/3}
};

struct UniquenessReport {
  std::uint64_t n_samples = 0;
  double tolerance = 0;
  std::uint64_t seed = 0;
  std::vector<UniquenessHit> hits;  // sample-index order
  double worst_conc_deviation = 0;
  double worst_spectrum_deviation = 0;
};

/// Deviation of one state from the W extremal fingerprint.
inline UniquenessHit probe_state(const PureState<double>& psi, std::uint64_t index = 0) {
  const auto conc = all_pair_concurrences(psi);
  UniquenessHit hit{index, conc[0] + conc[1] + conc[2], 0, 0};
  for (double c : conc) hit.conc_deviation = std::max(hit.conc_deviation, std::abs(c - 2.0 / 3));
  for (int q = 0; q < 3; ++q) {
    const auto eigs = hermitian_eigenvalues<double>(reduced_density(psi, {q}));
    hit.spectrum_deviation = std::max(
        {hit.spectrum_deviation, std::abs(eigs[0] - 2.0 / 3), std::abs(eigs[1] - 1.0 / 3)});
  }
  return hit;
}

/// Collects every Haar sample with sC > 2 - tolerance and reports its
/// LU-invariant distance to the W state (empirical uniqueness support).
inline UniquenessReport uniqueness_probe(double tolerance, std::uint64_t n_samples,
                                         std::uint64_t seed) {
  if (!(tolerance > 0) || !(tolerance < 0.1))
    throw std::invalid_argument("uniqueness_probe: tolerance outside (0, 0.1)");
  UniquenessReport report;
  report.n_samples = n_samples;
  report.tolerance = tolerance;
  report.seed = seed;

  const int workers =
      static_cast<int>(std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(n_samples, 1)));
  std::vector<std::vector<UniquenessHit>> local(workers);
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t chunk = (n_samples + workers - 1) / workers;
  auto body = [&](int w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min<std::uint64_t>(n_samples, lo + chunk);
    for (std::uint64_t i = lo; i < hi; ++i) {
      RandomStream stream(seed, i);
      const auto psi = haar_random_pure(3, stream);
      const auto conc = all_pair_concurrences(psi);
      detail::check_three_qubit_bounds(psi, conc);
      if (conc[0] + conc[1] + conc[2] > 2.0 - tolerance) local[w].push_back(probe_state(psi, i));
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          body(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (auto& bucket : local)
    for (auto& hit : bucket) {
      report.worst_conc_deviation = std::max(report.worst_conc_deviation, hit.conc_deviation);
      report.worst_spectrum_deviation =
          std::max(report.worst_spectrum_deviation, hit.spectrum_deviation);
      report.hits.push_back(hit);
    }
  return report;
}

}  // namespace monogamy
