#include "belltel/linalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

#include "test_util.hpp"

using namespace belltel;
using namespace belltel::testing;

TEST_CASE("kron follows the most-significant-left layout") {
  const Matrix zi = kron(pauli_z(), pauli_i());
  Matrix expected = Matrix::Zero(4, 4);
  expected.diagonal() << 1, 1, -1, -1;
  CHECK(max_abs_diff(zi, expected) == 0.0);

  CHECK(max_abs_diff(kron(pauli_i(), pauli_i()), Matrix::Identity(4, 4)) == 0.0);

  const Matrix xx = kron(pauli_x(), pauli_x());
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      CHECK(xx(r, c) == Complex(r + c == 3 ? 1 : 0, 0));
    }
  }
}

TEST_CASE("kron rejects non-square factors") {
  CHECK_THROWS_AS(kron(Matrix::Zero(2, 3), pauli_i()), std::invalid_argument);
}

TEST_CASE("hermitian_eigenvalues sorts ascending") {
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 3, 1, 2;
  const Eigen::VectorXd ev = hermitian_eigenvalues(d);
  CHECK(ev(0) == doctest::Approx(1).epsilon(1e-12));
  CHECK(ev(1) == doctest::Approx(2).epsilon(1e-12));
  CHECK(ev(2) == doctest::Approx(3).epsilon(1e-12));
}

TEST_CASE("hermitian_eigenvalues of a rank-1 projector") {
  Vector phi_plus = Vector::Zero(4);
  phi_plus(0) = phi_plus(3) = 1.0 / std::sqrt(2.0);
  const Eigen::VectorXd ev = hermitian_eigenvalues(projector(phi_plus));
  for (int i = 0; i < 3; ++i) CHECK(std::abs(ev(i)) < 1e-10);
  CHECK(ev(3) == doctest::Approx(1).epsilon(1e-10));
}

TEST_CASE("hermitian_eigenvalues of (I + sigma_x)/2") {
  const Matrix m = 0.5 * (pauli_i() + pauli_x());
  const Eigen::VectorXd ev = hermitian_eigenvalues(m);
  CHECK(std::abs(ev(0)) < 1e-10);
  CHECK(ev(1) == doctest::Approx(1).epsilon(1e-10));
}

TEST_CASE("hermitian_eigenvalues rejects non-Hermitian input") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(m), std::invalid_argument);
}

TEST_CASE("eigenvalue sum equals trace and survives Pauli conjugation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 1 << (1 + trial % 3);
    const Matrix m = random_hermitian(rng, dim);
    const Eigen::VectorXd ev = hermitian_eigenvalues(m);
    CHECK(std::abs(ev.sum() - m.trace().real()) < 1e-9);

    if (dim == 4) {
      const Matrix u = kron(pauli(1 + trial % 3), pauli(1 + (trial + 1) % 3));
      const Eigen::VectorXd conjugated = hermitian_eigenvalues(u * m * u.adjoint());
      for (int i = 0; i < 4; ++i) CHECK(std::abs(ev(i) - conjugated(i)) < 1e-9);
    }
  }
}

TEST_CASE("partial_transpose of the phi+ projector has eigenvalues (-1/2, 1/2 x3)") {
  Vector phi_plus = Vector::Zero(4);
  phi_plus(0) = phi_plus(3) = 1.0 / std::sqrt(2.0);
  for (int subsystem : {0, 1}) {
    const Eigen::VectorXd ev = hermitian_eigenvalues(partial_transpose(projector(phi_plus), subsystem));
    CHECK(ev(0) == doctest::Approx(-0.5).epsilon(1e-12));
    for (int i = 1; i < 4; ++i) CHECK(ev(i) == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("partial_transpose fixes product and maximally mixed states") {
  Vector ket00 = Vector::Zero(4);
  ket00(0) = 1.0;
  CHECK(max_abs_diff(partial_transpose(projector(ket00), 0), projector(ket00)) == 0.0);

  const Matrix mixed = Matrix::Identity(4, 4) / 4.0;
  CHECK(max_abs_diff(partial_transpose(mixed, 1), mixed) == 0.0);
}

TEST_CASE("partial_transpose is an exact involution") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const Matrix m = random_hermitian(rng, 4);
    for (int subsystem : {0, 1}) {
      CHECK(max_abs_diff(partial_transpose(partial_transpose(m, subsystem), subsystem), m) <=
            1e-14);
    }
  }
}

TEST_CASE("partial_transpose rejects wrong dimensions") {
  CHECK_THROWS_AS(partial_transpose(Matrix::Identity(8, 8), 0), std::invalid_argument);
  CHECK_THROWS_AS(partial_transpose(Matrix::Identity(4, 4), 2), std::invalid_argument);
}

TEST_CASE("partial_trace of Bell and product states") {
  Vector phi_plus = Vector::Zero(4);
  phi_plus(0) = phi_plus(3) = 1.0 / std::sqrt(2.0);
  const DensityMatrix bell = DensityMatrix::pure(phi_plus);
  for (int keep : {0, 1}) {
    CHECK(max_abs_diff(bell.reduce(keep).matrix(), Matrix::Identity(2, 2) / 2.0) <= 1e-12);
  }

  Vector ket01 = Vector::Zero(4);
  ket01(1) = 1.0;
  Matrix ket0_proj = Matrix::Zero(2, 2);
  ket0_proj(0, 0) = 1.0;
  CHECK(max_abs_diff(DensityMatrix::pure(ket01).reduce(0).matrix(), ket0_proj) <= 1e-12);

  const double a2 = 0.3;
  Vector schmidt = Vector::Zero(4);
  schmidt(0) = std::sqrt(a2);
  schmidt(3) = std::sqrt(1 - a2);
  Matrix marginal = Matrix::Zero(2, 2);
  marginal(0, 0) = a2;
  marginal(1, 1) = 1 - a2;
  CHECK(max_abs_diff(DensityMatrix::pure(schmidt).reduce(0).matrix(), marginal) <= 1e-12);
}

TEST_CASE("partial_trace of kron recovers the kept factor") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = random_full_rank_state(rng, 2);
    const Matrix b = random_full_rank_state(rng, 2);
    const Matrix joint = kron(a, b);
    static const int kFirst[] = {0};
    static const int kSecond[] = {1};
    CHECK(max_abs_diff(partial_trace(joint, 2, kFirst), a) <= 1e-12);
    CHECK(max_abs_diff(partial_trace(joint, 2, kSecond), b) <= 1e-12);
  }
}

TEST_CASE("partial_trace validates its keep set") {
  const Matrix mixed = Matrix::Identity(4, 4) / 4.0;
  static const int kBad[] = {2};
  CHECK_THROWS_AS(partial_trace(mixed, 2, kBad), std::invalid_argument);
  static const int kUnsorted[] = {1, 0};
  CHECK_THROWS_AS(partial_trace(mixed, 2, kUnsorted), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(mixed, 2, std::span<const int>{}), std::invalid_argument);
}

TEST_CASE("embed_operator matches kron on adjacent targets and permutes otherwise") {
  std::mt19937_64 rng(17);
  const Matrix a = random_hermitian(rng, 2);
  const Matrix b = random_hermitian(rng, 2);

  static const int kQ0[] = {0};
  static const int kQ1[] = {1};
  CHECK(max_abs_diff(embed_operator(a, kQ0, 2), kron(a, pauli_i())) <= 1e-15);
  CHECK(max_abs_diff(embed_operator(a, kQ1, 2), kron(pauli_i(), a)) <= 1e-15);

  static const int kForward[] = {0, 1};
  static const int kSwapped[] = {1, 0};
  const Matrix ab = kron(a, b);
  CHECK(max_abs_diff(embed_operator(ab, kForward, 2), ab) <= 1e-15);
  CHECK(max_abs_diff(embed_operator(ab, kSwapped, 2), kron(b, a)) <= 1e-15);

  // Embedding on disjoint targets multiplies like a tensor product.
  static const int kT02[] = {0, 2};
  const Matrix lifted = embed_operator(ab, kT02, 3);
  CHECK(max_abs_diff(lifted, embed_operator(a, kQ0, 3) * embed_operator(b, std::array{2}, 3)) <=
        1e-15);
}

TEST_CASE("DensityMatrix validates its contracts") {
  CHECK_THROWS_AS(DensityMatrix::from_matrix(Matrix::Identity(3, 3) / 3.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(Matrix::Identity(128, 128) / 128.0),
                  std::invalid_argument);

  Matrix skew = Matrix::Identity(2, 2) / 2.0;
  skew(0, 1) = Complex(0.1, 0.0);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(skew), std::invalid_argument);

  CHECK_THROWS_AS(DensityMatrix::from_matrix(Matrix::Identity(2, 2)), std::invalid_argument);

  Matrix indefinite = Matrix::Zero(4, 4);
  indefinite.diagonal() << 1.5, -0.5, 0.0, 0.0;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(indefinite), std::invalid_argument);

  const DensityMatrix ok = DensityMatrix::from_matrix(Matrix::Identity(4, 4) / 4.0);
  CHECK(ok.qubit_count() == 2);
  CHECK(ok.dim() == 4);
  CHECK(ok.purity() == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("DensityMatrix::pure requires normalization") {
  Vector unnormalized = Vector::Zero(4);
  unnormalized(0) = 1.1;
  CHECK_THROWS_AS(DensityMatrix::pure(unnormalized), std::invalid_argument);
}
