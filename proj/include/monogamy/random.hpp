#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "monogamy/types.hpp"

namespace monogamy {

namespace detail {
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {  // splitmix64 finalizer
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Counter-based deterministic random stream. The sequence produced by
/// RandomStream(seed, counter) depends only on (seed, counter), so sample i
/// of a Monte Carlo run can be generated by any worker in any order and the
/// merged result is bit-identical to a sequential run.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t counter = 0)
      : state_(detail::mix64(seed + detail::kGolden) ^
               detail::mix64(counter * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull)) {}

  std::uint64_t next_u64() {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

  /// Uniform in [0, 1), 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; platform-independent (no libstdc++
  /// distribution objects, whose algorithms are implementation-defined).
  double next_gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - next_double();  // (0, 1]
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(angle);
    has_cached_ = true;
    return r * std::cos(angle);
  }

  std::complex<double> next_complex_gaussian() {
    const double re = next_gaussian();
    const double im = next_gaussian();
    return {re, im};
  }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

/// Haar-uniform pure state on n_qubits in [1, 5]: 2^n independent complex
/// Gaussians, normalized (Ginibre construction).
inline PureState<double> haar_random_pure(int n_qubits, RandomStream& stream) {
  if (n_qubits < 1 || n_qubits > 5)
    throw std::invalid_argument("haar_random_pure: n_qubits out of range [1, 5]");
  Vector<double> amps(Eigen::Index{1} << n_qubits);
  for (Eigen::Index i = 0; i < amps.size(); ++i) amps[i] = stream.next_complex_gaussian();
  amps /= amps.norm();
  return PureState<double>(n_qubits, std::move(amps));
}

/// Haar-uniform 2x2 unitary: Gram-Schmidt on a Ginibre pair.
inline LocalUnitary<double> random_local_unitary(RandomStream& stream) {
  Eigen::Vector2cd g0{stream.next_complex_gaussian(), stream.next_complex_gaussian()};
  Eigen::Vector2cd g1{stream.next_complex_gaussian(), stream.next_complex_gaussian()};
  g0.normalize();
  g1 -= g0.dot(g1) * g0;
  g1.normalize();
  Matrix2<double> u;
  u.col(0) = g0;
  u.col(1) = g1;
  return LocalUnitary<double>(u);
}

}  // namespace monogamy
