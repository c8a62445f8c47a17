// Brute-force protocol simulation: 3-qubit single-qubit teleportation and
// the 6-qubit two-wing variant. Measurement is deterministic projector
// conjugation over all outcome branches, not sampling, so results are exact
// and serve as the independent oracle for the analytic channel maps.
#pragma once

#include "belltel/channel.hpp"

#include <vector>

namespace belltel {

/// Pauli correction applied for each Bell measurement outcome, indexed in
/// Bell-kind order. The defining property of the default table: the pure
/// psi+ channel teleports every state exactly.
struct CorrectionTable {
  std::array<Matrix, 4> ops;

  const Matrix& for_outcome(BellKind k) const { return ops[static_cast<int>(k)]; }
};

CorrectionTable default_correction_table();

struct TeleportResult {
  DensityMatrix state;
  // Unnormalized outcome probabilities in accumulation order; they sum to 1.
  std::vector<double> branch_traces;
};

/// 3-qubit register (input, sender half, receiver half); Bell measurement on
/// the first two. Branches accumulate serially in Bell-kind order.
TeleportResult teleport_1q_branches(const DensityMatrix& rho_in, const BellWeights& channel,
                                    const CorrectionTable& table);
DensityMatrix teleport_1q(const DensityMatrix& rho_in, const BellWeights& channel);

/// 6-qubit register (in1, in2, a1, b1, a2, b2); Bell measurements on
/// (in1, a1) and (in2, a2), corrections on b1/b2, output on (b1, b2).
/// The 16 branches accumulate serially, wing-1 outcome outermost and
/// Bell-kind order within each wing.
TeleportResult teleport_2q_branches(const DensityMatrix& rho12, const BellWeights& channel,
                                    const CorrectionTable& table);
DensityMatrix teleport_2q(const DensityMatrix& rho12, const BellWeights& channel);

}  // namespace belltel
