// The state zoo: Bell states, Bell mixtures, Werner states and pure states
// of the form alpha|00> + beta|11>.
#pragma once

#include "belltel/linalg.hpp"

#include <array>

namespace belltel {

// Bell-basis order used everywhere (weight subscripts, correction tables,
// CLI weight vectors): psi+, psi-, phi+, phi-.
enum class BellKind { PsiPlus = 0, PsiMinus = 1, PhiPlus = 2, PhiMinus = 3 };

inline constexpr std::array<BellKind, 4> kBellKinds = {
    BellKind::PsiPlus, BellKind::PsiMinus, BellKind::PhiPlus, BellKind::PhiMinus};

const char* bell_kind_name(BellKind kind);

// All Bell amplitudes are real; this pins the off-diagonal signs of every
// matrix derived from them.
Vector bell_state(BellKind kind);
const Matrix& bell_projector(BellKind kind);

/// Probability weights (w1..w4) over (psi+, psi-, phi+, phi-). Construction
/// requires each weight in [0, 1] and a unit sum, both within 1e-12.
struct BellWeights {
  double w1, w2, w3, w4;

  BellWeights(double w1, double w2, double w3, double w4);

  double operator[](int i) const;
  std::array<double, 4> to_array() const { return {w1, w2, w3, w4}; }
  double max_weight() const;
  double purity() const;  // sum of squared weights = tr(rho_ch^2)
};

DensityMatrix bell_mixture(const BellWeights& w);

/// Werner family: pure Bell fraction `phi` mixed with white noise, i.e.
/// weight phi + (1-phi)/4 on `pole` and (1-phi)/4 on the other three.
BellWeights werner_weights(double phi, BellKind pole = BellKind::PsiPlus);

/// alpha|00> + beta|11>; construction requires |alpha|^2 + |beta|^2 = 1
/// within 1e-12.
struct SchmidtState {
  Complex alpha, beta;

  SchmidtState(Complex alpha, Complex beta);
  static SchmidtState from_alpha2(double alpha2, double phase = 0.0);
};

DensityMatrix schmidt_density(const SchmidtState& s);

/// Largest Bell weight: the maximally entangled fraction of a Bell-diagonal
/// state whenever it is at least 1/2.
double mef_bell_diagonal(const BellWeights& w);

}  // namespace belltel
