#include "belltel/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace belltel {

namespace {

// Spectral weight below this counts as an exact zero of a unit-trace state;
// it sits well above eigensolver noise (~1e-15) and well below any
// population the toolkit distinguishes.
constexpr double kRankTol = 1e-13;

void require_two_qubits(const DensityMatrix& rho, const char* op) {
  if (rho.qubit_count() != 2) {
    throw std::invalid_argument(std::string(op) + ": expected a 2-qubit state");
  }
}

}  // namespace

double ppt_min_eigenvalue(const DensityMatrix& rho) {
  require_two_qubits(rho, "ppt_min_eigenvalue");
  return hermitian_eigenvalues(partial_transpose(rho.matrix(), 1)).minCoeff();
}

double concurrence(const DensityMatrix& rho) {
  require_two_qubits(rho, "concurrence");
  static const Matrix yy = kron(pauli_y(), pauli_y());
  const Matrix& m = rho.matrix();

  // The s_i are the square roots of the eigenvalues of rho * tilde(rho),
  // equivalently the singular values of A = sqrt(rho) * YY * conj(sqrt(rho)):
  // A A^dag = sqrt(rho) * tilde(rho) * sqrt(rho), which shares the product's
  // spectrum. The SVD route keeps exact rank deficiency exact; square-rooting
  // near-zero eigenvalues directly would amplify solver noise to ~1e-8.
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  Eigen::VectorXd d = es.eigenvalues();
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (d(i) < kRankTol) d(i) = 0.0;
  }
  const Matrix sqrt_rho =
      es.eigenvectors() * d.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
  const Matrix a = sqrt_rho * yy * sqrt_rho.conjugate();

  Eigen::JacobiSVD<Matrix> svd(a);
  const Eigen::VectorXd s = svd.singularValues();  // descending
  return std::clamp(s(0) - s(1) - s(2) - s(3), 0.0, 1.0);
}

Eigen::Matrix3d t_matrix(const DensityMatrix& rho) {
  require_two_qubits(rho, "t_matrix");
  Eigen::Matrix3d t;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      t(i - 1, j - 1) = (rho.matrix() * kron(pauli(i), pauli(j))).trace().real();
    }
  }
  return t;
}

double horodecki_m(const DensityMatrix& rho) {
  const Eigen::Matrix3d t = t_matrix(rho);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(t.transpose() * t, Eigen::EigenvaluesOnly);
  const auto ev = es.eigenvalues();  // ascending
  return ev(1) + ev(2);
}

double renyi2(const DensityMatrix& rho) {
  return -std::log(std::min(rho.purity(), 1.0));
}

TwoEResult two_e_violation(const DensityMatrix& rho12, double tol) {
  require_two_qubits(rho12, "two_e_violation");
  const double s12 = renyi2(rho12);
  const double s1 = renyi2(rho12.reduce(0));
  const double s2 = renyi2(rho12.reduce(1));
  const double deficit = s12 - std::max(s1, s2);
  return TwoEResult{deficit, deficit < -tol};
}

CriteriaReport evaluate_criteria(const DensityMatrix& rho, double tol) {
  const double ppt = ppt_min_eigenvalue(rho);
  const double m = horodecki_m(rho);
  const TwoEResult two_e = two_e_violation(rho, tol);
  return CriteriaReport{
      .ppt_min_eig = ppt,
      .concurrence = belltel::concurrence(rho),
      .horodecki_m = m,
      .s2_deficit = two_e.deficit,
      .entangled = ppt < -tol,
      .bell_violating = m > 1.0 + tol,
      .two_e_violating = two_e.violates,
  };
}

}  // namespace belltel
