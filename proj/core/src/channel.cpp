#include "belltel/channel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace belltel {

namespace {

constexpr const char* kWeightNames[4] = {"w1", "w2", "w3", "w4"};

// Kraus decomposition of the teleportation channel: the weight of each Bell
// state in the mixture becomes the probability of the Pauli error that maps
// psi+ onto it (identity, z, x, y respectively).
const Matrix& kraus_op(int i) {
  switch (i) {
    case 0: return pauli_i();
    case 1: return pauli_z();
    case 2: return pauli_x();
    case 3: return pauli_y();
    default: throw std::invalid_argument("kraus_op: index must be 0..3");
  }
}

BellWeights require_cp(const PauliLambdas& l) {
  auto w = try_weights_from_lambdas(l);
  if (!w) {
    const auto rec = recovered_weights(l);
    int worst = 0;
    for (int i = 1; i < 4; ++i) {
      if (rec[i] < rec[worst]) worst = i;
    }
    std::ostringstream msg;
    msg << "channel is not CP-realizable as a Bell mixture: recovered " << kWeightNames[worst]
        << " = " << rec[worst];
    throw std::domain_error(msg.str());
  }
  return *w;
}

}  // namespace

PauliLambdas::PauliLambdas(double lx, double ly, double lz) : lx(lx), ly(ly), lz(lz) {
  const double tol = tolerances().structural;
  for (double v : {lx, ly, lz}) {
    if (!(std::abs(v) <= 1.0 + tol)) {
      std::ostringstream msg;
      msg << "PauliLambdas: |lambda| = " << std::abs(v) << " exceeds 1";
      throw std::invalid_argument(msg.str());
    }
  }
}

double sum_lambda_sq(const PauliLambdas& l) {
  return l.lx * l.lx + l.ly * l.ly + l.lz * l.lz;
}

PauliLambdas lambdas_from_weights(const BellWeights& w) {
  return PauliLambdas(w.w1 - w.w2 + w.w3 - w.w4,
                      w.w1 - w.w2 - w.w3 + w.w4,
                      w.w1 + w.w2 - w.w3 - w.w4);
}

std::array<double, 4> recovered_weights(const PauliLambdas& l) {
  return {(1.0 + l.lx + l.ly + l.lz) / 4.0,
          (1.0 - l.lx - l.ly + l.lz) / 4.0,
          (1.0 + l.lx - l.ly - l.lz) / 4.0,
          (1.0 - l.lx + l.ly - l.lz) / 4.0};
}

bool is_cp_realizable(const PauliLambdas& l) {
  for (double w : recovered_weights(l)) {
    if (w < -kCpTol) return false;
  }
  return true;
}

std::optional<BellWeights> try_weights_from_lambdas(const PauliLambdas& l) {
  if (!is_cp_realizable(l)) return std::nullopt;
  const auto w = recovered_weights(l);
  return BellWeights(w[0], w[1], w[2], w[3]);
}

BellWeights weights_from_lambdas(const PauliLambdas& l) { return require_cp(l); }

DensityMatrix apply_pauli_channel_1q(const DensityMatrix& rho, const PauliLambdas& l) {
  if (rho.qubit_count() != 1) {
    throw std::invalid_argument("apply_pauli_channel_1q: expected a 1-qubit state");
  }
  const BellWeights w = require_cp(l);
  Matrix out = Matrix::Zero(2, 2);
  for (int i = 0; i < 4; ++i) {
    const Matrix& k = kraus_op(i);
    out += w[i] * (k * rho.matrix() * k.adjoint());
  }
  return DensityMatrix::from_matrix(std::move(out));
}

DensityMatrix apply_channel_two_sided(const DensityMatrix& rho12, const PauliLambdas& l) {
  if (rho12.qubit_count() != 2) {
    throw std::invalid_argument("apply_channel_two_sided: expected a 2-qubit state");
  }
  const BellWeights w = require_cp(l);
  Matrix out = Matrix::Zero(4, 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const Matrix k = kron(kraus_op(a), kraus_op(b));
      out += (w[a] * w[b]) * (k * rho12.matrix() * k.adjoint());
    }
  }
  return DensityMatrix::from_matrix(std::move(out));
}

DensityMatrix closed_form_max_entangled_output(const PauliLambdas& l) {
  require_cp(l);
  const double x2 = l.lx * l.lx, y2 = l.ly * l.ly, z2 = l.lz * l.lz;
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = (1.0 + z2) / 4.0;
  m(1, 1) = m(2, 2) = (1.0 - z2) / 4.0;
  m(0, 3) = m(3, 0) = (x2 + y2) / 4.0;
  m(1, 2) = m(2, 1) = (x2 - y2) / 4.0;
  return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix closed_form_schmidt_output(const SchmidtState& s, const PauliLambdas& l) {
  require_cp(l);
  const double a2 = std::norm(s.alpha), b2 = std::norm(s.beta);
  const double d = a2 - b2;
  const Complex ab = s.alpha * std::conj(s.beta);
  const double x2 = l.lx * l.lx, y2 = l.ly * l.ly, z2 = l.lz * l.lz;

  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = (1.0 + 2.0 * l.lz * d + z2) / 4.0;
  m(1, 1) = m(2, 2) = (1.0 - z2) / 4.0;
  m(3, 3) = (1.0 - 2.0 * l.lz * d + z2) / 4.0;
  // Corner entries carry no lz dependence; at lx = ly they reduce to
  // lx^2 * alpha * conj(beta).
  const Complex corner(ab.real() * (x2 + y2) / 2.0, ab.imag() * l.lx * l.ly);
  m(0, 3) = corner;
  m(3, 0) = std::conj(corner);
  m(1, 2) = m(2, 1) = ab.real() * (x2 - y2) / 2.0;
  return DensityMatrix::from_matrix(std::move(m));
}

}  // namespace belltel
