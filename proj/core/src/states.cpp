#include "belltel/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace belltel {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_probability(double v, const char* name) {
  const double tol = tolerances().structural;
  if (!(v >= -tol && v <= 1.0 + tol)) {
    std::ostringstream msg;
    msg << "BellWeights: " << name << " = " << v << " is not in [0, 1]";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

const char* bell_kind_name(BellKind kind) {
  switch (kind) {
    case BellKind::PsiPlus: return "psi+";
    case BellKind::PsiMinus: return "psi-";
    case BellKind::PhiPlus: return "phi+";
    case BellKind::PhiMinus: return "phi-";
  }
  throw std::invalid_argument("bell_kind_name: invalid kind");
}

Vector bell_state(BellKind kind) {
  Vector v = Vector::Zero(4);
  switch (kind) {
    case BellKind::PsiPlus:
      v(1) = kInvSqrt2;
      v(2) = kInvSqrt2;
      break;
    case BellKind::PsiMinus:
      v(1) = kInvSqrt2;
      v(2) = -kInvSqrt2;
      break;
    case BellKind::PhiPlus:
      v(0) = kInvSqrt2;
      v(3) = kInvSqrt2;
      break;
    case BellKind::PhiMinus:
      v(0) = kInvSqrt2;
      v(3) = -kInvSqrt2;
      break;
  }
  return v;
}

const Matrix& bell_projector(BellKind kind) {
  static const std::array<Matrix, 4> projectors = [] {
    std::array<Matrix, 4> p;
    for (BellKind k : kBellKinds) p[static_cast<int>(k)] = projector(bell_state(k));
    return p;
  }();
  return projectors[static_cast<int>(kind)];
}

BellWeights::BellWeights(double w1, double w2, double w3, double w4)
    : w1(w1), w2(w2), w3(w3), w4(w4) {
  require_probability(w1, "w1");
  require_probability(w2, "w2");
  require_probability(w3, "w3");
  require_probability(w4, "w4");
  const double sum = w1 + w2 + w3 + w4;
  if (std::abs(sum - 1.0) > tolerances().structural) {
    std::ostringstream msg;
    msg << "BellWeights: weights sum to " << sum << ", expected 1";
    throw std::invalid_argument(msg.str());
  }
}

double BellWeights::operator[](int i) const {
  switch (i) {
    case 0: return w1;
    case 1: return w2;
    case 2: return w3;
    case 3: return w4;
    default: throw std::invalid_argument("BellWeights: index must be 0..3");
  }
}

double BellWeights::max_weight() const {
  return std::max(std::max(w1, w2), std::max(w3, w4));
}

double BellWeights::purity() const { return w1 * w1 + w2 * w2 + w3 * w3 + w4 * w4; }

DensityMatrix bell_mixture(const BellWeights& w) {
  Matrix m = Matrix::Zero(4, 4);
  for (BellKind k : kBellKinds) {
    m += w[static_cast<int>(k)] * bell_projector(k);
  }
  return DensityMatrix::from_matrix(std::move(m));
}

BellWeights werner_weights(double phi, BellKind pole) {
  if (!(phi >= 0.0 && phi <= 1.0)) {
    std::ostringstream msg;
    msg << "werner_weights: phi = " << phi << " is not in [0, 1]";
    throw std::invalid_argument(msg.str());
  }
  const double background = (1.0 - phi) / 4.0;
  std::array<double, 4> w = {background, background, background, background};
  w[static_cast<int>(pole)] += phi;
  return BellWeights(w[0], w[1], w[2], w[3]);
}

SchmidtState::SchmidtState(Complex alpha, Complex beta) : alpha(alpha), beta(beta) {
  const double norm_err = std::abs(std::norm(alpha) + std::norm(beta) - 1.0);
  if (norm_err > tolerances().structural) {
    std::ostringstream msg;
    msg << "SchmidtState: |alpha|^2 + |beta|^2 deviates from 1 by " << norm_err;
    throw std::invalid_argument(msg.str());
  }
}

SchmidtState SchmidtState::from_alpha2(double alpha2, double phase) {
  if (!(alpha2 >= 0.0 && alpha2 <= 1.0)) {
    throw std::invalid_argument("SchmidtState: alpha2 must be in [0, 1]");
  }
  const Complex beta = std::sqrt(1.0 - alpha2) * std::exp(Complex(0, phase));
  return SchmidtState(std::sqrt(alpha2), beta);
}

DensityMatrix schmidt_density(const SchmidtState& s) {
  Vector v = Vector::Zero(4);
  v(0) = s.alpha;
  v(3) = s.beta;
  return DensityMatrix::pure(v);
}

double mef_bell_diagonal(const BellWeights& w) { return w.max_weight(); }

}  // namespace belltel
