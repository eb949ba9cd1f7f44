#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace monogamy {

template <typename Scalar>
using Complex = std::complex<Scalar>;
template <typename Scalar>
using Vector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Matrix2 = Eigen::Matrix<Complex<Scalar>, 2, 2>;
template <typename Scalar>
using Matrix4 = Eigen::Matrix<Complex<Scalar>, 4, 4>;
template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace tol {
inline constexpr double norm = 1e-9;       // |<psi|psi> - 1|
inline constexpr double hermitian = 1e-9;  // entrywise |rho - rho^dag|
inline constexpr double trace = 1e-9;
inline constexpr double psd = 1e-9;        // eigenvalue floor for valid densities
inline constexpr double unitary = 1e-9;    // entrywise |U^dag U - I|
}  // namespace tol

/// Basis convention used everywhere: qubit 0 is the MOST significant bit of
/// the computational-basis index, so |q0 q1 q2> = |011> sits at index 3 for
/// three qubits.
inline int qubit_bit(Eigen::Index basis_index, int n_qubits, int qubit) {
  return static_cast<int>((basis_index >> (n_qubits - 1 - qubit)) & 1);
}

[[noreturn]] inline void invariant_violation(const std::string& what) {
  throw std::invalid_argument(what);
}

/// Normalized pure state of n_qubits qubits, amplitudes in computational
/// basis order. Immutable after construction; the constructor enforces the
/// type invariants (length 2^n, unit norm, finite entries).
template <typename Scalar = double>
class PureState {
 public:
  PureState(int n_qubits, Vector<Scalar> amplitudes)
      : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits_ < 1)
      invariant_violation("PureState length violated: n_qubits must be >= 1");
    if (amps_.size() != (Eigen::Index{1} << n_qubits_)) {
      std::ostringstream os;
      os << "PureState length violated: expected 2^" << n_qubits_ << " = "
         << (1 << n_qubits_) << " amplitudes, got " << amps_.size();
      invariant_violation(os.str());
    }
    Scalar norm2 = 0;
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
      const auto& a = amps_[i];
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
        invariant_violation("PureState finiteness violated: non-finite amplitude");
      norm2 += std::norm(a);
    }
    if (std::abs(norm2 - Scalar{1}) > static_cast<Scalar>(tol::norm)) {
      std::ostringstream os;
      os << "PureState normalization violated: sum |amplitude|^2 = " << norm2;
      invariant_violation(os.str());
    }
  }

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Vector<Scalar>& amplitudes() const { return amps_; }
  Complex<Scalar> amplitude(Eigen::Index i) const { return amps_[i]; }

  Matrix<Scalar> projector() const { return amps_ * amps_.adjoint(); }

  /// Bitwise equality (exact amplitude comparison).
  bool operator==(const PureState& other) const {
    return n_qubits_ == other.n_qubits_ &&
           (amps_.array() == other.amps_.array()).all();
  }

 private:
  int n_qubits_;
  Vector<Scalar> amps_;
};

/// Hermitian, unit-trace density operator. The constructor enforces
/// Hermiticity and trace; positive semidefiniteness costs an eigensolve and
/// is checked only where untrusted data enters (see validated()).
template <typename Scalar = double>
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix<Scalar> entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1)
      invariant_violation("DensityMatrix shape violated: matrix must be square");
    const Scalar herm_err = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_err > static_cast<Scalar>(tol::hermitian)) {
      std::ostringstream os;
      os << "DensityMatrix hermiticity violated: max |rho - rho^dag| = " << herm_err;
      invariant_violation(os.str());
    }
    const Complex<Scalar> tr = m_.trace();
    if (std::abs(tr - Complex<Scalar>{1}) > static_cast<Scalar>(tol::trace)) {
      std::ostringstream os;
      os << "DensityMatrix trace violated: trace = " << tr.real();
      invariant_violation(os.str());
    }
    if (!m_.allFinite())
      invariant_violation("DensityMatrix finiteness violated: non-finite entry");
  }

  /// Full validation including the PSD invariant; use for external input.
  static DensityMatrix validated(Matrix<Scalar> entries) {
    DensityMatrix rho(std::move(entries));
    Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> es(rho.m_, Eigen::EigenvaluesOnly);
    const Scalar min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -static_cast<Scalar>(tol::psd)) {
      std::ostringstream os;
      os << "DensityMatrix positivity violated: smallest eigenvalue = " << min_eig;
      invariant_violation(os.str());
    }
    return rho;
  }

  Eigen::Index dim() const { return m_.rows(); }
  const Matrix<Scalar>& entries() const { return m_; }

 private:
  Matrix<Scalar> m_;
};

/// Single-qubit unitary factor.
template <typename Scalar = double>
class LocalUnitary {
 public:
  explicit LocalUnitary(Matrix2<Scalar> u) : u_(std::move(u)) {
    const Scalar err =
        (u_.adjoint() * u_ - Matrix2<Scalar>::Identity()).cwiseAbs().maxCoeff();
    if (err > static_cast<Scalar>(tol::unitary)) {
      std::ostringstream os;
      os << "LocalUnitary unitarity violated: max |U^dag U - I| = " << err;
      invariant_violation(os.str());
    }
  }

  const Matrix2<Scalar>& matrix() const { return u_; }

 private:
  Matrix2<Scalar> u_;
};

using PureStateD = PureState<double>;
using DensityMatrixD = DensityMatrix<double>;
using LocalUnitaryD = LocalUnitary<double>;

}  // namespace monogamy
