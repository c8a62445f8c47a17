// Entanglement and nonlocality diagnostics for two-qubit states.
#pragma once

#include "belltel/linalg.hpp"

namespace belltel {

// Default tolerance for boundary verdicts (entangled / violating).
inline constexpr double kDecisionTol = 1e-9;

/// Minimum eigenvalue of the partial transpose; negative exactly when the
/// state is entangled (two qubits).
double ppt_min_eigenvalue(const DensityMatrix& rho);

/// Wootters concurrence, in [0, 1]. conj() below is entrywise conjugation
/// in the computational basis.
double concurrence(const DensityMatrix& rho);

/// Correlation matrix T_ij = tr(rho sigma_i x sigma_j), i, j in {x, y, z}.
Eigen::Matrix3d t_matrix(const DensityMatrix& rho);

/// Sum of the two largest eigenvalues of T^T T; CHSH violation iff > 1.
double horodecki_m(const DensityMatrix& rho);

/// Renyi-2 entropy -ln tr(rho^2); zero exactly for pure states.
double renyi2(const DensityMatrix& rho);

struct TwoEResult {
  double deficit;  // S2(rho12) - max(S2(rho1), S2(rho2)); negative under violation
  bool violates;
};

TwoEResult two_e_violation(const DensityMatrix& rho12, double tol = kDecisionTol);

struct CriteriaReport {
  double ppt_min_eig;
  double concurrence;
  double horodecki_m;
  double s2_deficit;
  bool entangled;
  bool bell_violating;
  bool two_e_violating;
};

CriteriaReport evaluate_criteria(const DensityMatrix& rho, double tol = kDecisionTol);

}  // namespace belltel
