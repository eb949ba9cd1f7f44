#pragma once

#include <algorithm>
#include <vector>

#include <Eigen/Dense>

#include "monogamy/types.hpp"

namespace monogamy {

/// Kronecker product of two dense expressions.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Result = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Result out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace detail {

inline void check_keep_set(int n_qubits, const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] < 0 || keep[k] >= n_qubits)
      throw std::invalid_argument("partial_trace: qubit index out of range");
    if (k > 0 && keep[k] <= keep[k - 1])
      throw std::invalid_argument("partial_trace: keep set must be strictly ascending");
  }
}

/// Bit masks (in basis-index space) for the kept and traced qubits, kept in
/// ascending qubit order so the reduced index preserves the qubit-0-is-MSB
/// convention.
struct BitPlan {
  std::vector<Eigen::Index> keep_bits;    // MSB first
  std::vector<Eigen::Index> traced_bits;  // MSB first

  Eigen::Index scatter(Eigen::Index packed, const std::vector<Eigen::Index>& bits) const {
    Eigen::Index idx = 0;
    for (std::size_t k = 0; k < bits.size(); ++k)
      if ((packed >> (bits.size() - 1 - k)) & 1) idx |= bits[k];
    return idx;
  }
};

inline BitPlan make_bit_plan(int n_qubits, const std::vector<int>& keep) {
  BitPlan plan;
  std::size_t ki = 0;
  for (int q = 0; q < n_qubits; ++q) {
    const Eigen::Index bit = Eigen::Index{1} << (n_qubits - 1 - q);
    if (ki < keep.size() && keep[ki] == q) {
      plan.keep_bits.push_back(bit);
      ++ki;
    } else {
      plan.traced_bits.push_back(bit);
    }
  }
  return plan;
}

}  // namespace detail

/// Partial trace over the complement of `keep` (strictly ascending qubit
/// indices). Kept qubits retain their relative order.
template <typename Scalar>
Matrix<Scalar> partial_trace_matrix(const Matrix<Scalar>& rho, int n_qubits,
                                    const std::vector<int>& keep) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("partial_trace: dimension mismatch with n_qubits");
  detail::check_keep_set(n_qubits, keep);

  const auto plan = detail::make_bit_plan(n_qubits, keep);
  const Eigen::Index dk = Eigen::Index{1} << plan.keep_bits.size();
  const Eigen::Index dt = Eigen::Index{1} << plan.traced_bits.size();

  Matrix<Scalar> out = Matrix<Scalar>::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r) {
    const Eigen::Index rbase = plan.scatter(r, plan.keep_bits);
    for (Eigen::Index c = 0; c < dk; ++c) {
      const Eigen::Index cbase = plan.scatter(c, plan.keep_bits);
      Complex<Scalar> acc{0, 0};
      for (Eigen::Index e = 0; e < dt; ++e) {
        const Eigen::Index off = plan.scatter(e, plan.traced_bits);
        acc += rho(rbase | off, cbase | off);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

template <typename Scalar>
DensityMatrix<Scalar> partial_trace(const DensityMatrix<Scalar>& rho, int n_qubits,
                                    const std::vector<int>& keep) {
  return DensityMatrix<Scalar>(partial_trace_matrix<Scalar>(rho.entries(), n_qubits, keep));
}

/// Reduced density operator of a pure state: groups amplitudes into a
/// (kept x traced) matrix A and returns A A^dag, avoiding the full projector.
template <typename Scalar>
Matrix<Scalar> reduced_density(const PureState<Scalar>& psi, const std::vector<int>& keep) {
  detail::check_keep_set(psi.n_qubits(), keep);
  const auto plan = detail::make_bit_plan(psi.n_qubits(), keep);
  const Eigen::Index dk = Eigen::Index{1} << plan.keep_bits.size();
  const Eigen::Index dt = Eigen::Index{1} << plan.traced_bits.size();

  Matrix<Scalar> grouped(dk, dt);
  for (Eigen::Index r = 0; r < dk; ++r) {
    const Eigen::Index rbase = plan.scatter(r, plan.keep_bits);
    for (Eigen::Index e = 0; e < dt; ++e)
      grouped(r, e) = psi.amplitude(rbase | plan.scatter(e, plan.traced_bits));
  }
  return grouped * grouped.adjoint();
}

template <typename Scalar>
struct Eigensystem {
  RealVector<Scalar> values;  // descending
  Matrix<Scalar> vectors;     // columns, aligned with values
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
/// Rejects inputs with entrywise Hermiticity error above 1e-8.
template <typename Scalar>
Eigensystem<Scalar> hermitian_eigensystem(const Matrix<Scalar>& m) {
  const Scalar herm_err = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > Scalar{1e-8})
    throw std::invalid_argument("hermitian_eigensystem: input not Hermitian within 1e-8");
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> es((m + m.adjoint()) / Scalar{2});
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigensystem: eigensolver failed");
  Eigensystem<Scalar> sys;
  sys.values = es.eigenvalues().reverse();
  sys.vectors = es.eigenvectors().rowwise().reverse();
  return sys;
}

template <typename Scalar>
RealVector<Scalar> hermitian_eigenvalues(const Matrix<Scalar>& m) {
  return hermitian_eigensystem(m).values;
}

/// Square root of a Hermitian PSD matrix. Eigenvalues in [-1e-6, 0) are
/// treated as roundoff and clamped to 0; anything below -1e-6 is invalid
/// input, not noise.
template <typename Scalar>
Matrix<Scalar> psd_sqrt(const Matrix<Scalar>& m) {
  auto sys = hermitian_eigensystem(m);
  for (Eigen::Index i = 0; i < sys.values.size(); ++i) {
    if (sys.values[i] < Scalar{-1e-6}) {
      std::ostringstream os;
      os << "psd_sqrt positivity violated: eigenvalue " << sys.values[i];
      throw std::invalid_argument(os.str());
    }
    sys.values[i] = std::sqrt(std::max(sys.values[i], Scalar{0}));
  }
  return sys.vectors * sys.values.asDiagonal() * sys.vectors.adjoint();
}

/// Applies one unitary per qubit, U_0 x U_1 x ... acting in qubit order.
template <typename Scalar>
PureState<Scalar> apply_local_unitaries(const PureState<Scalar>& psi,
                                        const std::vector<LocalUnitary<Scalar>>& us) {
  const int n = psi.n_qubits();
  if (static_cast<int>(us.size()) != n)
    throw std::invalid_argument("apply_local_unitaries: need exactly one unitary per qubit");
  Vector<Scalar> amps = psi.amplitudes();
  for (int q = 0; q < n; ++q) {
    const auto& u = us[q].matrix();
    const Eigen::Index bit = Eigen::Index{1} << (n - 1 - q);
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
      if (i & bit) continue;
      const Complex<Scalar> a0 = amps[i];
      const Complex<Scalar> a1 = amps[i | bit];
      amps[i] = u(0, 0) * a0 + u(0, 1) * a1;
      amps[i | bit] = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
  return PureState<Scalar>(n, std::move(amps));
}

}  // namespace monogamy
