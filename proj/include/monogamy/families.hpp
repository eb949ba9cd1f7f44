#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "monogamy/linalg.hpp"
#include "monogamy/measures.hpp"
#include "monogamy/types.hpp"

namespace monogamy {

namespace detail {

template <typename Scalar, typename Iter>
void check_unit_square_sum(Iter begin, Iter end, const char* who) {
  Scalar sum = 0;
  for (auto it = begin; it != end; ++it) {
    if (*it < Scalar{0}) invariant_violation(std::string(who) + ": negative coefficient");
    sum += *it * *it;
  }
  if (std::abs(sum - Scalar{1}) > Scalar{1e-12})
    invariant_violation(std::string(who) + ": squared coefficients must sum to 1");
}

}  // namespace detail

/// W-class canonical form r0|000> + r1|001> + r2|010> + r3|100>.
template <typename Scalar = double>
struct WClassParams {
  std::array<Scalar, 4> r;

  explicit WClassParams(std::array<Scalar, 4> coeffs) : r(coeffs) {
    detail::check_unit_square_sum<Scalar>(r.begin(), r.end(), "WClassParams");
  }
};

/// Generalized Schmidt coordinates
/// l0|000> + l1 e^{i theta}|100> + l2|101> + l3|110> + l4|111>.
template <typename Scalar = double>
struct AcinParams {
  std::array<Scalar, 5> l;
  Scalar theta;

  AcinParams(std::array<Scalar, 5> coeffs, Scalar phase) : l(coeffs), theta(phase) {
    detail::check_unit_square_sum<Scalar>(l.begin(), l.end(), "AcinParams");
    if (theta < Scalar{0} || theta >= std::numbers::pi_v<Scalar>)
      invariant_violation("AcinParams: theta must lie in [0, pi)");
  }
};

/// GHZ-class state M1 x M2 x M3 |GHZ> with real 2x2 factors
/// M_i = (u_i, v_i), u_i = u_i (cos t_i, sin t_i), v_i = v_i (cos(p_i + t_i),
/// sin(p_i + t_i)); nonsingular iff u_i v_i sin(p_i) != 0.
template <typename Scalar = double>
struct GhzClassParams {
  std::array<Scalar, 3> u, v, theta, phi;

  GhzClassParams(std::array<Scalar, 3> us, std::array<Scalar, 3> vs,
                 std::array<Scalar, 3> thetas, std::array<Scalar, 3> phis)
      : u(us), v(vs), theta(thetas), phi(phis) {
    for (int i = 0; i < 3; ++i) {
      if (!(u[i] > Scalar{0}) || !(v[i] > Scalar{0}))
        invariant_violation("GhzClassParams: u and v must be positive");
      if (std::abs(u[i] * v[i] * std::sin(phi[i])) <= Scalar{1e-10})
        invariant_violation("GhzClassParams: singular factor (|det M_i| <= 1e-10)");
    }
  }

  Matrix2<Scalar> factor(int i) const {
    Matrix2<Scalar> m;
    m(0, 0) = u[i] * std::cos(theta[i]);
    m(1, 0) = u[i] * std::sin(theta[i]);
    m(0, 1) = v[i] * std::cos(phi[i] + theta[i]);
    m(1, 1) = v[i] * std::sin(phi[i] + theta[i]);
    return m;
  }

  /// 2r = (u1 u2 u3)/(v1 v2 v3) + (v1 v2 v3)/(u1 u2 u3); r >= 1.
  Scalar r() const {
    const Scalar pu = u[0] * u[1] * u[2];
    const Scalar pv = v[0] * v[1] * v[2];
    return (pu / pv + pv / pu) / Scalar{2};
  }
};

/// sqrt(p) (a1|10..0> + ... + an|0..01>) + sqrt(1-p)|0..0>.
template <typename Scalar = double>
struct GeneralizedWParams {
  Scalar p;
  std::vector<Complex<Scalar>> a;

  GeneralizedWParams(Scalar weight, std::vector<Complex<Scalar>> amps)
      : p(weight), a(std::move(amps)) {
    if (p < Scalar{0} || p > Scalar{1})
      invariant_violation("GeneralizedWParams: p must lie in [0, 1]");
    if (a.size() < 2 || a.size() > 5)
      invariant_violation("GeneralizedWParams: supported sizes are 2 <= n <= 5");
    Scalar sum = 0;
    for (const auto& ai : a) sum += std::norm(ai);
    if (std::abs(sum - Scalar{1}) > Scalar{1e-12})
      invariant_violation("GeneralizedWParams: sum |a_i|^2 must equal 1");
  }

  int n_qubits() const { return static_cast<int>(a.size()); }
};

/// n-qubit W state: equal superposition of the weight-1 basis states.
template <typename Scalar = double>
PureState<Scalar> w_state(int n) {
  if (n < 2 || n > 5) throw std::invalid_argument("w_state: n must lie in [2, 5]");
  Vector<Scalar> amps = Vector<Scalar>::Zero(Eigen::Index{1} << n);
  const Scalar coeff = Scalar{1} / std::sqrt(static_cast<Scalar>(n));
  for (int q = 0; q < n; ++q) amps[Eigen::Index{1} << q] = coeff;
  return PureState<Scalar>(n, std::move(amps));
}

/// n-qubit GHZ state (|0...0> + |1...1>)/sqrt(2).
template <typename Scalar = double>
PureState<Scalar> ghz_state(int n) {
  if (n < 2 || n > 5) throw std::invalid_argument("ghz_state: n must lie in [2, 5]");
  Vector<Scalar> amps = Vector<Scalar>::Zero(Eigen::Index{1} << n);
  amps[0] = Scalar{1} / std::sqrt(Scalar{2});
  amps[amps.size() - 1] = amps[0];
  return PureState<Scalar>(n, std::move(amps));
}

template <typename Scalar>
PureState<Scalar> wclass_state(const WClassParams<Scalar>& p) {
  Vector<Scalar> amps = Vector<Scalar>::Zero(8);
  amps[0] = p.r[0];  // |000>
  amps[1] = p.r[1];  // |001>
  amps[2] = p.r[2];  // |010>
  amps[4] = p.r[3];  // |100>
  return PureState<Scalar>(3, std::move(amps));
}

/// Pair concurrences (C_AB, C_AC, C_BC) = (2 r2 r3, 2 r1 r3, 2 r1 r2): each
/// pair concurrence is twice the product of the two amplitudes that excite
/// its qubits.
template <typename Scalar>
std::array<Scalar, 3> wclass_closed_form(const WClassParams<Scalar>& p) {
  return {Scalar{2} * p.r[2] * p.r[3], Scalar{2} * p.r[1] * p.r[3],
          Scalar{2} * p.r[1] * p.r[2]};
}

template <typename Scalar>
PureState<Scalar> acin_state(const AcinParams<Scalar>& p) {
  Vector<Scalar> amps = Vector<Scalar>::Zero(8);
  amps[0] = p.l[0];                                                    // |000>
  amps[4] = p.l[1] * std::exp(Complex<Scalar>{0, 1} * p.theta);        // |100>
  amps[5] = p.l[2];                                                    // |101>
  amps[6] = p.l[3];                                                    // |110>
  amps[7] = p.l[4];                                                    // |111>
  return PureState<Scalar>(3, std::move(amps));
}

/// Squared pair concurrences (C^2_AB, C^2_AC, C^2_BC) of the generalized
/// Schmidt form, in the ket order of acin_state (A = qubit 0):
///   C^2_AB = 4 l0^2 l3^2   (the |000>/|110> coherence),
///   C^2_AC = 4 l0^2 l2^2   (the |000>/|101> coherence),
///   C^2_BC = 4 l2^2 l3^2 + 4 l1^2 l4^2 - 8 l1 l2 l3 l4 cos(theta).
template <typename Scalar>
std::array<Scalar, 3> acin_closed_form(const AcinParams<Scalar>& p) {
  const auto& l = p.l;
  const Scalar c2ab = Scalar{4} * l[0] * l[0] * l[3] * l[3];
  const Scalar c2ac = Scalar{4} * l[0] * l[0] * l[2] * l[2];
  const Scalar c2bc = Scalar{4} * l[2] * l[2] * l[3] * l[3] +
                      Scalar{4} * l[1] * l[1] * l[4] * l[4] -
                      Scalar{8} * l[1] * l[2] * l[3] * l[4] * std::cos(p.theta);
  return {std::max(Scalar{0}, c2ab), std::max(Scalar{0}, c2ac), std::max(Scalar{0}, c2bc)};
}

/// GHZ-class state, renormalized after applying the (generally nonunitary)
/// local factors.
template <typename Scalar>
PureState<Scalar> ghzclass_state(const GhzClassParams<Scalar>& p) {
  const Matrix<Scalar> m =
      kron(kron(Matrix<Scalar>(p.factor(0)), Matrix<Scalar>(p.factor(1))),
           Matrix<Scalar>(p.factor(2)));
  Vector<Scalar> amps = m * ghz_state<Scalar>(3).amplitudes();
  amps /= amps.norm();
  return PureState<Scalar>(3, std::move(amps));
}

/// Concurrence sum of the GHZ-class state:
/// sC = (|c1 s2 s3| + |c2 s1 s3| + |c3 s1 s2|) / (r + c1 c2 c3),
/// c_i = cos(phi_i), s_i = sin(phi_i).
template <typename Scalar>
Scalar ghzclass_sc_closed_form(const GhzClassParams<Scalar>& p) {
  const Scalar c1 = std::cos(p.phi[0]), c2 = std::cos(p.phi[1]), c3 = std::cos(p.phi[2]);
  const Scalar s1 = std::sin(p.phi[0]), s2 = std::sin(p.phi[1]), s3 = std::sin(p.phi[2]);
  const Scalar den = p.r() + c1 * c2 * c3;
  if (std::abs(den) <= Scalar{1e-10})
    throw std::invalid_argument("ghzclass_sc_closed_form: near-zero denominator");
  return (std::abs(c1 * s2 * s3) + std::abs(c2 * s1 * s3) + std::abs(c3 * s1 * s2)) / den;
}

template <typename Scalar>
PureState<Scalar> generalized_w_state(const GeneralizedWParams<Scalar>& p) {
  const int n = p.n_qubits();
  Vector<Scalar> amps = Vector<Scalar>::Zero(Eigen::Index{1} << n);
  amps[0] = std::sqrt(Scalar{1} - p.p);
  const Scalar sp = std::sqrt(p.p);
  for (int i = 0; i < n; ++i) amps[Eigen::Index{1} << (n - 1 - i)] = sp * p.a[i];
  return PureState<Scalar>(n, std::move(amps));
}

/// sC = p ((sum_i |a_i|)^2 - 1), equivalently 2p sum_{i<j} |a_i a_j| with the
/// pair rule C(rho_{A_i A_j}) = 2p |a_i a_j|.
template <typename Scalar>
Scalar generalized_w_sc_closed_form(const GeneralizedWParams<Scalar>& p) {
  Scalar abs_sum = 0;
  for (const auto& ai : p.a) abs_sum += std::abs(ai);
  return p.p * (abs_sum * abs_sum - Scalar{1});
}

/// rho = p1 |W><W| + (1-p1) |Wbar><Wbar| with |Wbar> the bit-flipped W state.
template <typename Scalar = double>
DensityMatrix<Scalar> wbar_mixture(Scalar p1) {
  if (p1 < Scalar{0} || p1 > Scalar{1})
    throw std::invalid_argument("wbar_mixture: weight outside [0, 1]");
  const auto w = w_state<Scalar>(3);
  Vector<Scalar> wbar = Vector<Scalar>::Zero(8);
  wbar[3] = wbar[5] = wbar[6] = Scalar{1} / std::sqrt(Scalar{3});  // |011>,|101>,|110>
  Matrix<Scalar> rho =
      p1 * w.projector() + (Scalar{1} - p1) * (wbar * wbar.adjoint());
  return DensityMatrix<Scalar>(std::move(rho));
}

/// The pivot-bound extremal state |100>/sqrt(2) + (|010> + |001>)/2.
template <typename Scalar = double>
PureState<Scalar> liu_state() {
  Vector<Scalar> amps = Vector<Scalar>::Zero(8);
  amps[4] = Scalar{1} / std::sqrt(Scalar{2});
  amps[2] = Scalar{0.5};
  amps[1] = Scalar{0.5};
  return PureState<Scalar>(3, std::move(amps));
}

}  // namespace monogamy
