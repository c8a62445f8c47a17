// The analytic layer: Bell weights <-> Pauli-damping triple, one- and
// two-sided channel application, and closed-form output states.
#pragma once

#include "belltel/states.hpp"

#include <optional>

namespace belltel {

// Recovered weights this far below zero still count as CP-realizable.
inline constexpr double kCpTol = 1e-12;

/// Hilbert-Schmidt action of the teleportation channel:
/// I -> I, sigma_i -> l_i sigma_i. Construction requires |l_i| <= 1;
/// CP-realizability is checked only where a channel is actually applied,
/// so invalid triples can be probed and observed to fail inversion.
struct PauliLambdas {
  double lx, ly, lz;

  PauliLambdas(double lx, double ly, double lz);
};

double sum_lambda_sq(const PauliLambdas& l);

PauliLambdas lambdas_from_weights(const BellWeights& w);

/// The four Bell weights a damping triple would require, in (w1..w4) order;
/// entries may be negative outside the CP tetrahedron.
std::array<double, 4> recovered_weights(const PauliLambdas& l);

bool is_cp_realizable(const PauliLambdas& l);

std::optional<BellWeights> try_weights_from_lambdas(const PauliLambdas& l);

/// Exact inverse of lambdas_from_weights. Throws std::domain_error naming
/// the violating weight when `l` lies outside the CP tetrahedron.
BellWeights weights_from_lambdas(const PauliLambdas& l);

DensityMatrix apply_pauli_channel_1q(const DensityMatrix& rho, const PauliLambdas& l);

/// (Lambda x Lambda) acting on a two-qubit state: the same Pauli channel
/// applied independently to each half.
DensityMatrix apply_channel_two_sided(const DensityMatrix& rho12, const PauliLambdas& l);

/// Two-sided channel output on (|00> + |11>)/sqrt(2), in closed form:
/// (1/4) [[1+lz^2, 0, 0, lx^2+ly^2], [0, 1-lz^2, lx^2-ly^2, 0],
///        [0, lx^2-ly^2, 1-lz^2, 0], [lx^2+ly^2, 0, 0, 1+lz^2]].
DensityMatrix closed_form_max_entangled_output(const PauliLambdas& l);

/// Two-sided channel output on alpha|00> + beta|11>, in closed form, valid
/// for any lz (not only the marginal-preserving lz = 1 case).
DensityMatrix closed_form_schmidt_output(const SchmidtState& s, const PauliLambdas& l);

}  // namespace belltel
