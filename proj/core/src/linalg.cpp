#include "belltel/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace belltel {

namespace {

constexpr double kHermitianGate = 1e-10;

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(Eigen::Index n) {
  int k = 0;
  while ((Eigen::Index{1} << k) < n) ++k;
  return k;
}

}  // namespace

Tolerances& tolerances() {
  static Tolerances tols;
  return tols;
}

const Matrix& pauli_i() {
  static const Matrix m = Matrix::Identity(2, 2);
  return m;
}

const Matrix& pauli_x() {
  static const Matrix m = [] {
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    return x;
  }();
  return m;
}

const Matrix& pauli_y() {
  static const Matrix m = [] {
    Matrix y(2, 2);
    y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return y;
  }();
  return m;
}

const Matrix& pauli_z() {
  static const Matrix m = [] {
    Matrix z(2, 2);
    z << 1, 0, 0, -1;
    return z;
  }();
  return m;
}

const Matrix& pauli(int axis) {
  switch (axis) {
    case 0: return pauli_i();
    case 1: return pauli_x();
    case 2: return pauli_y();
    case 3: return pauli_z();
    default: throw std::invalid_argument("pauli: axis must be 0..3");
  }
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

bool approx_equal(const Matrix& a, const Matrix& b) {
  return approx_equal(a, b, tolerances().structural);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw std::invalid_argument("kron: factors must be square");
  }
  const Eigen::Index da = a.rows(), db = b.rows();
  Matrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a(i, j) * b;
    }
  }
  return out;
}

Matrix projector(const Vector& v) { return v * v.adjoint(); }

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
  }
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (defect > kHermitianGate) {
    std::ostringstream msg;
    msg << "hermitian_eigenvalues: input is not Hermitian (defect " << defect << ")";
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed to converge");
  }
  return solver.eigenvalues();  // ascending
}

Matrix partial_transpose(const Matrix& rho, int subsystem) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw std::invalid_argument("partial_transpose: expected a 4x4 matrix");
  }
  if (subsystem != 0 && subsystem != 1) {
    throw std::invalid_argument("partial_transpose: subsystem must be 0 or 1");
  }
  Matrix out(4, 4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int a2 = 0; a2 < 2; ++a2) {
        for (int b2 = 0; b2 < 2; ++b2) {
          if (subsystem == 0) {
            out(2 * a + b, 2 * a2 + b2) = rho(2 * a2 + b, 2 * a + b2);
          } else {
            out(2 * a + b, 2 * a2 + b2) = rho(2 * a + b2, 2 * a2 + b);
          }
        }
      }
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& rho, int n_qubits, std::span<const int> keep) {
  if (n_qubits < 1 || rho.rows() != rho.cols() ||
      rho.rows() != (Eigen::Index{1} << n_qubits)) {
    throw std::invalid_argument("partial_trace: dimension does not match qubit count");
  }
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set must be non-empty");
  }
  for (size_t j = 0; j < keep.size(); ++j) {
    if (keep[j] < 0 || keep[j] >= n_qubits) {
      throw std::invalid_argument("partial_trace: qubit index out of range");
    }
    if (j > 0 && keep[j] <= keep[j - 1]) {
      throw std::invalid_argument("partial_trace: keep indices must be strictly ascending");
    }
  }

  std::vector<int> traced;
  for (int q = 0; q < n_qubits; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
  }

  const int nk = static_cast<int>(keep.size());
  const int nt = static_cast<int>(traced.size());
  const Eigen::Index dk = Eigen::Index{1} << nk;
  const Eigen::Index dt = Eigen::Index{1} << nt;

  // Bit j (MSB first) of a reduced/traced index belongs to keep[j]/traced[j].
  auto full_index = [&](Eigen::Index kept_bits, Eigen::Index traced_bits) {
    Eigen::Index idx = 0;
    for (int j = 0; j < nk; ++j) {
      if ((kept_bits >> (nk - 1 - j)) & 1) idx |= Eigen::Index{1} << (n_qubits - 1 - keep[j]);
    }
    for (int j = 0; j < nt; ++j) {
      if ((traced_bits >> (nt - 1 - j)) & 1) idx |= Eigen::Index{1} << (n_qubits - 1 - traced[j]);
    }
    return idx;
  };

  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r) {
    for (Eigen::Index c = 0; c < dk; ++c) {
      Complex sum = 0;
      for (Eigen::Index t = 0; t < dt; ++t) {
        sum += rho(full_index(r, t), full_index(c, t));
      }
      out(r, c) = sum;
    }
  }
  return out;
}

Matrix embed_operator(const Matrix& op, std::span<const int> targets, int n_qubits) {
  const int k = static_cast<int>(targets.size());
  if (op.rows() != op.cols() || op.rows() != (Eigen::Index{1} << k)) {
    throw std::invalid_argument("embed_operator: operator dimension does not match targets");
  }
  for (size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= n_qubits) {
      throw std::invalid_argument("embed_operator: target out of range");
    }
    for (size_t j = i + 1; j < targets.size(); ++j) {
      if (targets[i] == targets[j]) {
        throw std::invalid_argument("embed_operator: duplicate target");
      }
    }
  }

  std::vector<int> rest;
  for (int q = 0; q < n_qubits; ++q) {
    if (std::find(targets.begin(), targets.end(), q) == targets.end()) rest.push_back(q);
  }

  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  const Eigen::Index dop = Eigen::Index{1} << k;
  const Eigen::Index drest = Eigen::Index{1} << rest.size();

  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index rest_bits = 0; rest_bits < drest; ++rest_bits) {
    Eigen::Index base = 0;
    for (size_t j = 0; j < rest.size(); ++j) {
      if ((rest_bits >> (rest.size() - 1 - j)) & 1) {
        base |= Eigen::Index{1} << (n_qubits - 1 - rest[j]);
      }
    }
    for (Eigen::Index orow = 0; orow < dop; ++orow) {
      for (Eigen::Index ocol = 0; ocol < dop; ++ocol) {
        const Complex value = op(orow, ocol);
        if (value == Complex(0, 0)) continue;
        Eigen::Index r = base, c = base;
        for (int j = 0; j < k; ++j) {
          if ((orow >> (k - 1 - j)) & 1) r |= Eigen::Index{1} << (n_qubits - 1 - targets[j]);
          if ((ocol >> (k - 1 - j)) & 1) c |= Eigen::Index{1} << (n_qubits - 1 - targets[j]);
        }
        out(r, c) = value;
      }
    }
  }
  return out;
}

DensityMatrix DensityMatrix::from_matrix(Matrix m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("DensityMatrix: matrix must be square");
  }
  if (!is_power_of_two(m.rows()) || m.rows() < 2 || m.rows() > 64) {
    throw std::invalid_argument("DensityMatrix: dimension must be a power of 2 in [2, 64]");
  }
  const Tolerances& tol = tolerances();
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol.structural) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian (defect " << herm << ")";
    throw std::invalid_argument(msg.str());
  }
  const double trace_err = std::abs(m.trace() - Complex(1, 0));
  if (trace_err > tol.structural) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace deviates from 1 by " << trace_err;
    throw std::invalid_argument(msg.str());
  }
  const double min_eig = hermitian_eigenvalues(m).minCoeff();
  if (min_eig < -tol.psd) {
    std::ostringstream msg;
    msg << "DensityMatrix: not positive semidefinite (min eigenvalue " << min_eig << ")";
    throw std::invalid_argument(msg.str());
  }
  const int qubits = log2_exact(m.rows());
  return DensityMatrix(std::move(m), qubits);
}

DensityMatrix DensityMatrix::pure(const Vector& state) {
  if (!is_power_of_two(state.size()) || state.size() < 2 || state.size() > 64) {
    throw std::invalid_argument("DensityMatrix: state length must be a power of 2 in [2, 64]");
  }
  const double norm_err = std::abs(state.squaredNorm() - 1.0);
  if (norm_err > tolerances().structural) {
    std::ostringstream msg;
    msg << "DensityMatrix: state norm deviates from 1 by " << norm_err;
    throw std::invalid_argument(msg.str());
  }
  return DensityMatrix(projector(state), log2_exact(state.size()));
}

double DensityMatrix::purity() const { return mat_.squaredNorm(); }

DensityMatrix DensityMatrix::reduce(std::span<const int> keep) const {
  return from_matrix(partial_trace(mat_, qubits_, keep));
}

DensityMatrix DensityMatrix::reduce(std::initializer_list<int> keep) const {
  std::vector<int> idx(keep);
  return reduce(std::span<const int>(idx));
}

DensityMatrix DensityMatrix::reduce(int keep) const {
  const int idx[] = {keep};
  return reduce(std::span<const int>(idx));
}

}  // namespace belltel
