// Shared helpers for the test suites: seeded random states and operators.
#pragma once

#include "belltel/linalg.hpp"

#include <random>

namespace belltel::testing {

inline Matrix matrix4(std::initializer_list<Complex> entries) {
  Matrix m(4, 4);
  int i = 0;
  for (Complex v : entries) m(i / 4, i % 4) = v, ++i;
  return m;
}

inline Vector random_pure_state(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

// Full-rank random state (normalized G G^dag with Gaussian G).
inline Matrix random_full_rank_state(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
  }
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

inline Matrix random_hermitian(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  }
  return 0.5 * (m + m.adjoint().eval());
}

// Random states of mixed character: full rank, pure, rank-2, maximally mixed.
inline DensityMatrix random_state(std::mt19937_64& rng, int dim, int kind) {
  switch (kind % 4) {
    case 0:
      return DensityMatrix::from_matrix(random_full_rank_state(rng, dim));
    case 1:
      return DensityMatrix::pure(random_pure_state(rng, dim));
    case 2: {
      const Matrix a = projector(random_pure_state(rng, dim));
      const Matrix b = projector(random_pure_state(rng, dim));
      return DensityMatrix::from_matrix(0.5 * a + 0.5 * b);
    }
    default:
      return DensityMatrix::from_matrix(Matrix::Identity(dim, dim) / double(dim));
  }
}

inline Matrix random_unitary_2x2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  const double theta = 0.5 * angle(rng), phi = angle(rng), lam = angle(rng);
  Matrix u(2, 2);
  u << std::cos(theta), -std::exp(Complex(0, lam)) * std::sin(theta),
      std::exp(Complex(0, phi)) * std::sin(theta),
      std::exp(Complex(0, phi + lam)) * std::cos(theta);
  return u;
}

}  // namespace belltel::testing
