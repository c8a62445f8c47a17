#include "belltel/teleport.hpp"

#include <array>
#include <stdexcept>

namespace belltel {

CorrectionTable default_correction_table() {
  // psi+ -> I, psi- -> z, phi+ -> x, phi- -> y (the y case is xz up to a
  // global phase, which is irrelevant at the density-matrix level).
  return CorrectionTable{{pauli_i(), pauli_z(), pauli_x(), pauli_y()}};
}

TeleportResult teleport_1q_branches(const DensityMatrix& rho_in, const BellWeights& channel,
                                    const CorrectionTable& table) {
  if (rho_in.qubit_count() != 1) {
    throw std::invalid_argument("teleport_1q: expected a 1-qubit input state");
  }
  // Register (q0, q1, q2) = (input, sender half, receiver half).
  const Matrix rho3 = kron(rho_in.matrix(), bell_mixture(channel).matrix());

  Matrix out = Matrix::Zero(2, 2);
  std::vector<double> traces;
  traces.reserve(4);
  static const int kKeep[] = {2};
  for (BellKind outcome : kBellKinds) {
    const Matrix proj = kron(bell_projector(outcome), pauli_i());
    const Matrix branch = proj * rho3 * proj;
    const Matrix reduced = partial_trace(branch, 3, kKeep);
    traces.push_back(reduced.trace().real());
    const Matrix& c = table.for_outcome(outcome);
    out += c * reduced * c.adjoint();
  }
  return TeleportResult{DensityMatrix::from_matrix(std::move(out)), std::move(traces)};
}

DensityMatrix teleport_1q(const DensityMatrix& rho_in, const BellWeights& channel) {
  return teleport_1q_branches(rho_in, channel, default_correction_table()).state;
}

TeleportResult teleport_2q_branches(const DensityMatrix& rho12, const BellWeights& channel,
                                    const CorrectionTable& table) {
  if (rho12.qubit_count() != 2) {
    throw std::invalid_argument("teleport_2q: expected a 2-qubit input state");
  }
  // Register (q0..q5) = (in1, in2, a1, b1, a2, b2): the input pair followed
  // by one channel pair per wing.
  const Matrix ch = bell_mixture(channel).matrix();
  const Matrix rho6 = kron(rho12.matrix(), kron(ch, ch));

  static const int kWing1[] = {0, 2};
  static const int kWing2[] = {1, 4};
  std::array<Matrix, 4> proj1, proj2;
  for (BellKind k : kBellKinds) {
    proj1[static_cast<int>(k)] = embed_operator(bell_projector(k), kWing1, 6);
    proj2[static_cast<int>(k)] = embed_operator(bell_projector(k), kWing2, 6);
  }

  static const int kKeep[] = {3, 5};
  Matrix out = Matrix::Zero(4, 4);
  std::vector<double> traces;
  traces.reserve(16);
  for (BellKind k1 : kBellKinds) {
    for (BellKind k2 : kBellKinds) {
      // The two wing projectors act on disjoint qubits and commute.
      const Matrix proj = proj1[static_cast<int>(k1)] * proj2[static_cast<int>(k2)];
      const Matrix branch = proj * rho6 * proj;
      // Corrections act only on kept qubits, so they commute with the trace.
      const Matrix reduced = partial_trace(branch, 6, kKeep);
      traces.push_back(reduced.trace().real());
      const Matrix corr = kron(table.for_outcome(k1), table.for_outcome(k2));
      out += corr * reduced * corr.adjoint();
    }
  }
  return TeleportResult{DensityMatrix::from_matrix(std::move(out)), std::move(traces)};
}

DensityMatrix teleport_2q(const DensityMatrix& rho12, const BellWeights& channel) {
  return teleport_2q_branches(rho12, channel, default_correction_table()).state;
}

}  // namespace belltel
