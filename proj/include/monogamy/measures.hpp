#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>

#include <Eigen/Dense>

#include "monogamy/linalg.hpp"
#include "monogamy/types.hpp"

namespace monogamy {

namespace debug {
/// Test hook: flips the sign of the second Wootters root in
/// wootters_concurrence, so downstream bound checks fail loudly. Never set
/// outside fault-injection tests.
inline bool wootters_sign_fault = false;
}  // namespace debug

/// Binary entropy h(x) = -x log2 x - (1-x) log2(1-x), with h(0) = h(1) = 0
/// by the 0 log 0 = 0 convention. Accepts 1e-12 of slack outside [0, 1].
template <typename Scalar>
Scalar binary_entropy(Scalar x) {
  if (x < Scalar{-1e-12} || x > Scalar{1} + Scalar{1e-12})
    throw std::invalid_argument("binary_entropy: argument outside [0, 1]");
  x = std::clamp(x, Scalar{0}, Scalar{1});
  if (x == Scalar{0} || x == Scalar{1}) return Scalar{0};
  return -x * std::log2(x) - (Scalar{1} - x) * std::log2(Scalar{1} - x);
}

/// Two-qubit entanglement of formation as a function of concurrence:
/// E(C) = h((1 + sqrt(1 - C^2)) / 2).
template <typename Scalar>
Scalar eof_from_concurrence(Scalar c) {
  c = std::clamp(c, Scalar{0}, Scalar{1});
  return binary_entropy((Scalar{1} + std::sqrt(Scalar{1} - c * c)) / Scalar{2});
}

namespace bounds {

/// Maximal pairwise EoF sum of a three-qubit state, 3 h(1/2 + sqrt(5)/6),
/// attained by |W>. Evaluated from the entropy formula, not a literal.
template <typename Scalar = double>
Scalar c_max() {
  static const Scalar value =
      Scalar{3} * binary_entropy(Scalar{0.5} + std::sqrt(Scalar{5}) / Scalar{6});
  return value;
}

/// Maximal pairwise concurrence sum of a three-qubit state (|W> again).
template <typename Scalar = double>
Scalar sc_max() {
  return Scalar{2};
}

/// Maximal single-pivot EoF pair sum E_AB + E_AC, attained by the state
/// |100>/sqrt(2) + (|010> + |001>)/2; equals 2 E(1/sqrt(2)) = 1.20175...
template <typename Scalar = double>
Scalar pivot_eof_max() {
  static const Scalar value =
      Scalar{2} * eof_from_concurrence(Scalar{1} / std::sqrt(Scalar{2}));
  return value;
}

/// Maximal single-pivot concurrence pair sum C_AB + C_AC = sqrt(2).
template <typename Scalar = double>
Scalar pivot_conc_max() {
  return std::sqrt(Scalar{2});
}

}  // namespace bounds

namespace detail {

inline void check_bipartition(int n_qubits, const std::vector<int>& side_a) {
  if (side_a.empty() || static_cast<int>(side_a.size()) >= n_qubits)
    throw std::invalid_argument("bipartition: one side is empty");
  check_keep_set(n_qubits, side_a);
}

}  // namespace detail

/// Pure-state concurrence across the cut (side_a | rest):
/// C = sqrt(2 (1 - Tr rho_A^2)).
template <typename Scalar>
Scalar pure_concurrence(const PureState<Scalar>& psi, const std::vector<int>& side_a) {
  detail::check_bipartition(psi.n_qubits(), side_a);
  const Matrix<Scalar> rho_a = reduced_density(psi, side_a);
  const Scalar purity = (rho_a * rho_a).trace().real();
  return std::sqrt(std::max(Scalar{0}, Scalar{2} * (Scalar{1} - purity)));
}

/// Pure-state EoF across the cut: entanglement entropy of the reduction, in
/// ebits.
template <typename Scalar>
Scalar pure_eof(const PureState<Scalar>& psi, const std::vector<int>& side_a) {
  detail::check_bipartition(psi.n_qubits(), side_a);
  const auto lambda = hermitian_eigenvalues<Scalar>(reduced_density(psi, side_a));
  Scalar entropy = 0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    if (lambda[i] > Scalar{0}) entropy -= lambda[i] * std::log2(lambda[i]);
  return std::max(Scalar{0}, entropy);
}

/// Spin-flipped two-qubit operator rho~ = (sy x sy) conj(rho) (sy x sy).
template <typename Scalar>
Matrix<Scalar> spin_flip(const Matrix<Scalar>& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("spin_flip: expected a 4x4 matrix");
  // (sy x sy) e_k = s_k e_{3-k} with signs (-1, 1, 1, -1).
  static const std::array<Scalar, 4> sign{Scalar{-1}, Scalar{1}, Scalar{1}, Scalar{-1}};
  Matrix<Scalar> out(4, 4);
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j)
      out(i, j) = sign[i] * sign[j] * std::conj(rho(3 - i, 3 - j));
  return out;
}

template <typename Scalar>
Matrix<Scalar> spin_flip(const DensityMatrix<Scalar>& rho) {
  return spin_flip<Scalar>(rho.entries());
}

/// Wootters concurrence of a two-qubit density matrix:
/// C = max(0, r1 - r2 - r3 - r4) where r_i are the decreasing square roots of
/// the eigenvalues of rho rho~. The r_i are computed as the singular values
/// of sqrt(rho~) sqrt(rho), whose Gram matrix is sqrt(rho) rho~ sqrt(rho);
/// this keeps the near-zero roots at full precision instead of sqrt(eps).
template <typename Scalar>
Scalar wootters_concurrence(const DensityMatrix<Scalar>& rho) {
  if (rho.dim() != 4)
    throw std::invalid_argument("wootters_concurrence: expected a two-qubit state");
  const Matrix<Scalar> sr = psd_sqrt<Scalar>(rho.entries());
  const Matrix4<Scalar> r = spin_flip<Scalar>(sr) * sr;  // sqrt(rho~) = spin_flip(sqrt(rho))
  Eigen::JacobiSVD<Matrix4<Scalar>> svd(r);
  const auto& s = svd.singularValues();  // descending
  const Scalar second = debug::wootters_sign_fault ? -s[1] : s[1];
  return std::max(Scalar{0}, s[0] - second - s[2] - s[3]);
}

/// Two-qubit EoF through the Wootters formula.
template <typename Scalar>
Scalar eof_two_qubit(const DensityMatrix<Scalar>& rho) {
  return eof_from_concurrence(wootters_concurrence(rho));
}

template <typename Scalar = double>
struct PairMeasures {
  Scalar concurrence;
  Scalar eof;
};

template <typename Scalar = double>
struct BoundMargins {
  Scalar c_max;     // c_max - sE
  Scalar sc2;       // 2 - sC
  Scalar liu_eof;   // pivot bound - max over pivots of (E_xy + E_xz)
  Scalar liu_conc;  // sqrt(2)   - max over pivots of (C_xy + C_xz)
};

/// All pairwise measures of a three-qubit system plus the monogamy sums.
/// discord_sum and tangle_residuals are pure-state quantities and absent for
/// mixed input.
template <typename Scalar = double>
struct MeasureReport {
  PairMeasures<Scalar> ab, ac, bc;
  Scalar sc;
  Scalar se;
  std::optional<Scalar> discord_sum;
  std::optional<std::array<Scalar, 3>> tangle_residuals;  // pivots A, B, C
  BoundMargins<Scalar> margins;

  const PairMeasures<Scalar>& pair(int first, int second) const {
    if (first == 0 && second == 1) return ab;
    if (first == 0 && second == 2) return ac;
    if (first == 1 && second == 2) return bc;
    throw std::invalid_argument("MeasureReport::pair: invalid qubit pair");
  }
};

/// CKW residual C^2_{pivot|rest} - C^2_{pivot,x} - C^2_{pivot,y} of a pure
/// three-qubit state (the 3-tangle when nonnegative pivots agree).
template <typename Scalar>
Scalar ckw_residual(const PureState<Scalar>& psi, int pivot) {
  if (psi.n_qubits() != 3)
    throw std::invalid_argument("ckw_residual: expected a three-qubit pure state");
  if (pivot < 0 || pivot > 2) throw std::invalid_argument("ckw_residual: invalid pivot");
  const Scalar c_cut = pure_concurrence(psi, {pivot});
  Scalar residual = c_cut * c_cut;
  for (int other = 0; other < 3; ++other) {
    if (other == pivot) continue;
    std::vector<int> pair{pivot, other};
    std::sort(pair.begin(), pair.end());
    const Scalar c = wootters_concurrence(DensityMatrix<Scalar>(reduced_density(psi, pair)));
    residual -= c * c;
  }
  return residual;
}

namespace detail {

template <typename Scalar>
MeasureReport<Scalar> assemble_report(const std::array<Scalar, 3>& conc) {
  MeasureReport<Scalar> rep;
  rep.ab = {conc[0], eof_from_concurrence(conc[0])};
  rep.ac = {conc[1], eof_from_concurrence(conc[1])};
  rep.bc = {conc[2], eof_from_concurrence(conc[2])};
  rep.sc = rep.ab.concurrence + rep.ac.concurrence + rep.bc.concurrence;
  rep.se = rep.ab.eof + rep.ac.eof + rep.bc.eof;

  // Pivot sums: A pairs with (AB, AC), B with (AB, BC), C with (AC, BC).
  const Scalar eof_pivot = std::max({rep.ab.eof + rep.ac.eof, rep.ab.eof + rep.bc.eof,
                                     rep.ac.eof + rep.bc.eof});
  const Scalar conc_pivot =
      std::max({rep.ab.concurrence + rep.ac.concurrence,
                rep.ab.concurrence + rep.bc.concurrence,
                rep.ac.concurrence + rep.bc.concurrence});
  rep.margins.c_max = bounds::c_max<Scalar>() - rep.se;
  rep.margins.sc2 = bounds::sc_max<Scalar>() - rep.sc;
  rep.margins.liu_eof = bounds::pivot_eof_max<Scalar>() - eof_pivot;
  rep.margins.liu_conc = bounds::pivot_conc_max<Scalar>() - conc_pivot;
  return rep;
}

}  // namespace detail

/// Pairwise report of a three-qubit pure state. Includes the discord sum
/// over the six ordered pairs, which equals 2 sE for pure states by the
/// Koashi-Winter conservation law.
template <typename Scalar>
MeasureReport<Scalar> pairwise_report(const PureState<Scalar>& psi) {
  if (psi.n_qubits() != 3)
    throw std::invalid_argument("pairwise_report: expected a three-qubit system");
  std::array<Scalar, 3> conc;
  int k = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      conc[k++] = wootters_concurrence(DensityMatrix<Scalar>(reduced_density(psi, {a, b})));
  auto rep = detail::assemble_report(conc);
  rep.discord_sum = Scalar{2} * rep.se;
  rep.tangle_residuals = std::array<Scalar, 3>{ckw_residual(psi, 0), ckw_residual(psi, 1),
                                               ckw_residual(psi, 2)};
  return rep;
}

/// Pairwise report of a three-qubit mixed state. Pair measures are the
/// two-qubit Wootters measures of the reductions; convex-roof quantities of
/// the full state (discord, tangle) are not defined here and stay absent.
template <typename Scalar>
MeasureReport<Scalar> pairwise_report(const DensityMatrix<Scalar>& rho) {
  if (rho.dim() != 8)
    throw std::invalid_argument("pairwise_report: expected a three-qubit system");
  std::array<Scalar, 3> conc;
  int k = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      conc[k++] = wootters_concurrence(partial_trace(rho, 3, {a, b}));
  return detail::assemble_report(conc);
}

/// Largest eigenvalue modulus of A B for Hermitian PSD contractions A, B.
/// The product of two PSD contractions has spectral radius at most 1;
/// callers assert that on the returned value.
template <typename Scalar>
Scalar product_spectrum_check(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("product_spectrum_check: dimension mismatch");
  for (const auto* m : {&a, &b}) {
    const auto eigs = hermitian_eigenvalues<Scalar>(*m);
    if (eigs.minCoeff() < Scalar{-1e-9} || eigs.maxCoeff() > Scalar{1} + Scalar{1e-9})
      throw std::invalid_argument(
          "product_spectrum_check: input is not a PSD contraction");
  }
  Eigen::ComplexEigenSolver<Matrix<Scalar>> es(a * b, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("product_spectrum_check: eigensolver failed");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

/// Transfer inequality f(a)+f(b)+f(c) >= f(a')+f(b')+f(c') for a monotone
/// increasing f, given the sum dominance a+b+c >= a'+b'+c'. Returns whether
/// the inequality holds within 1e-12; a false return is a failed lemma check,
/// not an error.
template <typename Scalar>
bool convexity_transfer_check(Scalar a, Scalar b, Scalar c, Scalar a2, Scalar b2, Scalar c2,
                              const std::function<Scalar(Scalar)>& f) {
  for (Scalar v : {a, b, c, a2, b2, c2})
    if (v < Scalar{-1e-12} || v > Scalar{1} + Scalar{1e-12})
      throw std::invalid_argument("convexity_transfer_check: argument outside [0, 1]");
  if (a + b + c < a2 + b2 + c2 - Scalar{1e-12})
    throw std::invalid_argument("convexity_transfer_check: sum dominance violated");
  return f(a) + f(b) + f(c) >= f(a2) + f(b2) + f(c2) - Scalar{1e-12};
}

template <typename Scalar = double>
struct LuRankResult {
  int rank;            // numerical rank, eigenvalues > 1e-8 relative
  Scalar concurrence;  // Wootters concurrence of the mixture
};

/// Builds sigma = p1 |phi+><phi+| + (1-p1) (U1 x U2)|phi+><phi+|(U1 x U2)^dag
/// and reports its numerical rank and concurrence; rank 1 iff concurrence 1.
/// Takes the full unitary triple of the three-qubit construction it mirrors;
/// the third factor acts on the traced-out qubit and cannot affect sigma.
template <typename Scalar>
LuRankResult<Scalar> lu_rank_check(Scalar p1, const std::array<LocalUnitary<Scalar>, 3>& us) {
  if (!(p1 > Scalar{0}) || !(p1 < Scalar{1}))
    throw std::invalid_argument("lu_rank_check: weight must lie in (0, 1)");
  Vector<Scalar> phi_plus = Vector<Scalar>::Zero(4);
  phi_plus[1] = phi_plus[2] = Scalar{1} / std::sqrt(Scalar{2});
  const Matrix<Scalar> u12 = kron(us[0].matrix(), us[1].matrix());
  const Vector<Scalar> rotated = u12 * phi_plus;
  Matrix<Scalar> sigma = p1 * (phi_plus * phi_plus.adjoint()) +
                         (Scalar{1} - p1) * (rotated * rotated.adjoint());
  const auto eigs = hermitian_eigenvalues<Scalar>(sigma);
  const Scalar cut = Scalar{1e-8} * eigs.maxCoeff();
  int rank = 0;
  for (Eigen::Index i = 0; i < eigs.size(); ++i)
    if (eigs[i] > cut) ++rank;
  return {rank, wootters_concurrence(DensityMatrix<Scalar>(std::move(sigma)))};
}

}  // namespace monogamy
