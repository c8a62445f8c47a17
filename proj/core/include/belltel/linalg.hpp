// Dense complex linear algebra for small qubit registers (dimension 2..64).
//
// Conventions, fixed globally:
//   - qubit 0 is the MOST significant bit of a computational-basis index;
//   - kron(a, b) places `a` on the more significant qubits;
//   - sigma_y = [[0, -i], [i, 0]].
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <initializer_list>
#include <span>

namespace belltel {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Validation tolerances shared by DensityMatrix and the equality helpers.
// `structural` bounds entrywise checks (hermiticity, trace, matrix equality);
// `psd` is the slack allowed below zero in eigenvalue-sign decisions.
// Override once at startup; everything else only reads them.
struct Tolerances {
  double structural = 1e-12;
  double psd = 1e-10;
};

Tolerances& tolerances();

const Matrix& pauli_i();
const Matrix& pauli_x();
const Matrix& pauli_y();
const Matrix& pauli_z();
const Matrix& pauli(int axis);  // 0 = I, 1 = x, 2 = y, 3 = z

double max_abs_diff(const Matrix& a, const Matrix& b);
bool approx_equal(const Matrix& a, const Matrix& b, double tol);
bool approx_equal(const Matrix& a, const Matrix& b);

Matrix kron(const Matrix& a, const Matrix& b);

Matrix projector(const Vector& v);

/// Eigenvalues of a Hermitian matrix, ascending. Rejects inputs whose
/// hermiticity defect exceeds 1e-10.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

/// Transpose of one tensor factor of a two-qubit operator; subsystem 0 is
/// the first (most significant) qubit, 1 the second.
Matrix partial_transpose(const Matrix& rho, int subsystem);

/// Trace out every qubit not listed in `keep` (strictly ascending indices).
/// Kept qubits retain their relative order in the reduced register.
Matrix partial_trace(const Matrix& rho, int n_qubits, std::span<const int> keep);

/// Embed a k-qubit operator into an n-qubit register: op qubit j acts on
/// register qubit targets[j], identity elsewhere. Targets must be distinct
/// but may be in any order.
Matrix embed_operator(const Matrix& op, std::span<const int> targets, int n_qubits);

/// Hermitian, unit-trace, positive-semidefinite operator on 1..6 qubits.
/// Construction checks all three contracts against `tolerances()` and
/// rejects violations with std::invalid_argument.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(Matrix m);
  static DensityMatrix pure(const Vector& state);

  const Matrix& matrix() const { return mat_; }
  int qubit_count() const { return qubits_; }
  Eigen::Index dim() const { return mat_.rows(); }
  double purity() const;  // tr(rho^2)

  DensityMatrix reduce(std::span<const int> keep) const;
  DensityMatrix reduce(std::initializer_list<int> keep) const;
  DensityMatrix reduce(int keep) const;

 private:
  DensityMatrix(Matrix m, int qubits) : mat_(std::move(m)), qubits_(qubits) {}

  Matrix mat_;
  int qubits_;
};

}  // namespace belltel
