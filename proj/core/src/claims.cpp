#include "belltel/claims.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace belltel {

namespace {

constexpr double kPi = 3.14159265358979323846;
// The exact-scaling law for output vs input concurrence is checked tighter
// than boundary verdicts.
constexpr double kScaleTol = 1e-10;

std::string strf(const char* format, ...) {
  va_list args;
  va_start(args, format);
  char buf[256];
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return std::string(buf);
}

std::string describe_weights(const BellWeights& w) {
  return strf("w=(%.6g, %.6g, %.6g, %.6g)", w.w1, w.w2, w.w3, w.w4);
}

SchmidtState random_schmidt(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> alpha2(0.01, 0.99);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  const double a2 = alpha2(rng);
  return SchmidtState::from_alpha2(a2, phase(rng));
}

BellWeights random_weights(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double e[4];
  double sum = 0.0;
  for (double& v : e) {
    v = -std::log(1.0 - unit(rng));
    sum += v;
  }
  return BellWeights(e[0] / sum, e[1] / sum, e[2] / sum, e[3] / sum);
}

Matrix rotation_y(double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  Matrix r(2, 2);
  r << c, -s, s, c;
  return r;
}

void add_witness(ClaimResult& result, std::string input, double decisive) {
  if (result.witnesses.size() < 8) {
    result.witnesses.push_back(ClaimWitness{std::move(input), decisive});
  }
}

}  // namespace

const char* claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::WitnessFound: return "WITNESS";
    case ClaimStatus::WitnessNotFound: return "NO-WITNESS";
  }
  return "?";
}

std::vector<BellWeights> simplex_grid(int grid_n) {
  if (grid_n < 1) {
    throw std::invalid_argument("simplex_grid: grid_n must be >= 1");
  }
  std::vector<BellWeights> grid;
  const double n = grid_n;
  for (int k1 = 0; k1 <= grid_n; ++k1) {
    for (int k2 = 0; k2 <= grid_n - k1; ++k2) {
      for (int k3 = 0; k3 <= grid_n - k1 - k2; ++k3) {
        const int k4 = grid_n - k1 - k2 - k3;
        grid.emplace_back(k1 / n, k2 / n, k3 / n, k4 / n);
      }
    }
  }
  return grid;
}

ClaimResult claim_two_bell_inseparable(int grid_n, std::uint64_t seed, double tol) {
  if (grid_n < 3) {
    throw std::invalid_argument("claim_two_bell_inseparable: grid_n must be >= 3");
  }
  ClaimResult result;
  result.id = "two-bell-inseparable";
  result.grid_size = grid_n;
  result.seed = seed;
  result.tolerance = tol;

  std::vector<SchmidtState> states;
  for (double a2 : {0.1, 0.25, 0.5, 0.75, 0.9}) states.push_back(SchmidtState::from_alpha2(a2));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 20; ++i) states.push_back(random_schmidt(rng));
  result.sample_count = static_cast<int>(states.size());

  int checked = 0;
  double min_margin = 1.0;
  for (int i = 0; i <= grid_n; ++i) {
    const double w = static_cast<double>(i) / grid_n;
    if (std::abs(w - 0.5) < kBoundaryBand) continue;
    const PauliLambdas lam = lambdas_from_weights(BellWeights(w, 1.0 - w, 0.0, 0.0));
    for (const SchmidtState& s : states) {
      const double ppt = ppt_min_eigenvalue(closed_form_schmidt_output(s, lam));
      ++checked;
      min_margin = std::min(min_margin, -ppt);
      if (ppt >= -tol) {
        add_witness(result, strf("w=%.6g, alpha2=%.6g", w, std::norm(s.alpha)), ppt);
      }
    }
  }

  // At w = 1/2 exactly the channel is separable and so is every output.
  const PauliLambdas boundary(0.0, 0.0, 1.0);
  for (const SchmidtState& s : states) {
    const double ppt = ppt_min_eigenvalue(closed_form_schmidt_output(s, boundary));
    if (ppt < -tol) {
      add_witness(result, strf("w=0.5, alpha2=%.6g (expected separable)", std::norm(s.alpha)),
                  ppt);
    }
  }

  result.status = result.witnesses.empty() ? ClaimStatus::Pass : ClaimStatus::Fail;
  result.detail = strf("%d off-band outputs entangled (min |ppt| %.3e); w=1/2 separable",
                       checked, min_margin);
  return result;
}

ClaimResult claim_threshold_iff(int grid_n, double tol) {
  if (grid_n < 5) {
    throw std::invalid_argument("claim_threshold_iff: grid_n must be >= 5");
  }
  ClaimResult result;
  result.id = "threshold-iff";
  result.grid_size = grid_n;
  result.tolerance = tol;

  int checked = 0, skipped = 0;
  for (const BellWeights& w : simplex_grid(grid_n)) {
    const PauliLambdas lam = lambdas_from_weights(w);
    const double s2 = sum_lambda_sq(lam);
    if (std::abs(s2 - 1.0) < kBoundaryBand) {
      ++skipped;
      continue;
    }
    const bool entangled = ppt_min_eigenvalue(closed_form_max_entangled_output(lam)) < -tol;
    ++checked;
    if (entangled != (s2 > 1.0)) {
      add_witness(result, describe_weights(w) + strf(", sum_l2=%.12g", s2),
                  ppt_min_eigenvalue(closed_form_max_entangled_output(lam)));
    }
  }

  result.status = result.witnesses.empty() ? ClaimStatus::Pass : ClaimStatus::Fail;
  result.detail = strf("verdict matches sign(sum_l2 - 1) at %d/%d grid points (%d on-band skipped)",
                       checked - static_cast<int>(result.witnesses.size()), checked, skipped);
  return result;
}

ClaimResult claim_bell_implies_threshold(int sample_count, std::uint64_t seed, double tol) {
  if (sample_count < 100) {
    throw std::invalid_argument("claim_bell_implies_threshold: sample_count must be >= 100");
  }
  ClaimResult result;
  result.id = "bell-implies-threshold";
  result.sample_count = sample_count;
  result.seed = seed;
  result.tolerance = tol;

  std::mt19937_64 rng(seed);
  int violating = 0;
  for (int i = 0; i < sample_count; ++i) {
    const BellWeights w = random_weights(rng);
    const double m = horodecki_m(bell_mixture(w));
    const double s2 = sum_lambda_sq(lambdas_from_weights(w));
    if (m > 1.0 + tol) {
      ++violating;
      if (s2 <= 1.0 + tol) {
        add_witness(result, describe_weights(w) + strf(", m=%.12g", m), s2);
      }
    }
  }

  // Strictness: this channel passes the threshold without violating CHSH.
  const BellWeights strict(0.7, 0.1, 0.1, 0.1);
  const double m_strict = horodecki_m(bell_mixture(strict));
  const double s2_strict = sum_lambda_sq(lambdas_from_weights(strict));
  if (std::abs(m_strict - 0.72) > 1e-9 || std::abs(s2_strict - 1.08) > 1e-9) {
    add_witness(result, "strictness witness (0.7, 0.1, 0.1, 0.1) off expected values", m_strict);
  }

  result.status = result.witnesses.empty() ? ClaimStatus::Pass : ClaimStatus::Fail;
  result.detail = strf("implication holds on %d samples (%d CHSH-violating); "
                       "strict witness: sum_l2=%.6g, m=%.6g",
                       sample_count, violating, s2_strict, m_strict);
  return result;
}

ClaimResult claim_two_e_iff_threshold(int grid_n, double tol) {
  if (grid_n < 5) {
    throw std::invalid_argument("claim_two_e_iff_threshold: grid_n must be >= 5");
  }
  ClaimResult result;
  result.id = "two-e-iff-threshold";
  result.grid_size = grid_n;
  result.tolerance = tol;

  int checked = 0, skipped = 0;
  double max_identity_err = 0.0;
  for (const BellWeights& w : simplex_grid(grid_n)) {
    const double s2 = sum_lambda_sq(lambdas_from_weights(w));
    // sum of lambda^2 = 4 * sum of w^2 - 1, exactly.
    const double identity_err = std::abs(s2 - (4.0 * w.purity() - 1.0));
    max_identity_err = std::max(max_identity_err, identity_err);
    if (identity_err > 1e-12) {
      add_witness(result, describe_weights(w) + " (identity violated)", identity_err);
    }
    if (std::abs(s2 - 1.0) < kBoundaryBand) {
      ++skipped;
      continue;
    }
    ++checked;
    const bool violates = two_e_violation(bell_mixture(w), tol).violates;
    if (violates != (s2 > 1.0)) {
      add_witness(result, describe_weights(w) + strf(", sum_l2=%.12g", s2),
                  two_e_violation(bell_mixture(w), tol).deficit);
    }
  }

  result.status = result.witnesses.empty() ? ClaimStatus::Pass : ClaimStatus::Fail;
  result.detail = strf("equivalence holds at %d off-band points (%d skipped); "
                       "max identity error %.2e",
                       checked, skipped, max_identity_err);
  return result;
}

ClaimResult claim_full_range_two_bell(double w, int sample_count, std::uint64_t seed, double tol) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw std::invalid_argument("claim_full_range_two_bell: w must be in [0, 1]");
  }
  if (std::abs(w - 0.5) < kBoundaryBand) {
    throw std::invalid_argument("claim_full_range_two_bell: channel at w = 1/2 is separable");
  }
  if (sample_count < 100) {
    throw std::invalid_argument("claim_full_range_two_bell: sample_count must be >= 100");
  }
  ClaimResult result;
  result.id = strf("full-range-two-bell[w=%.4g]", w);
  result.sample_count = sample_count;
  result.seed = seed;
  result.tolerance = tol;

  const PauliLambdas lam = lambdas_from_weights(BellWeights(w, 1.0 - w, 0.0, 0.0));
  const double factor = (2.0 * w - 1.0) * (2.0 * w - 1.0);

  std::mt19937_64 rng(seed);
  double max_scale_err = 0.0;
  for (int i = 0; i < sample_count; ++i) {
    const SchmidtState s = random_schmidt(rng);
    const DensityMatrix input = schmidt_density(s);
    const DensityMatrix output = closed_form_schmidt_output(s, lam);
    const double ppt = ppt_min_eigenvalue(output);
    if (ppt >= -tol) {
      add_witness(result, strf("alpha2=%.6g (output separable)", std::norm(s.alpha)), ppt);
    }
    const double scale_err = std::abs(concurrence(output) - factor * concurrence(input));
    max_scale_err = std::max(max_scale_err, scale_err);
    if (scale_err > kScaleTol) {
      add_witness(result, strf("alpha2=%.6g (concurrence scaling off)", std::norm(s.alpha)),
                  scale_err);
    }
  }

  result.status = result.witnesses.empty() ? ClaimStatus::Pass : ClaimStatus::Fail;
  result.detail = strf("%d samples entangled, concurrence = %.4g x input "
                       "(max scaling error %.2e)",
                       sample_count, factor, max_scale_err);
  return result;
}

ClaimResult claim_lambda_z_one_uniqueness(int grid_n, double tol) {
  if (grid_n < 10) {
    throw std::invalid_argument("claim_lambda_z_one_uniqueness: grid_n must be >= 10");
  }
  ClaimResult result;
  result.id = "lambda-z-uniqueness";
  result.grid_size = grid_n;
  result.tolerance = tol;

  int on_face = 0;
  for (const BellWeights& w : simplex_grid(grid_n)) {
    const PauliLambdas lam = lambdas_from_weights(w);
    if (std::abs(lam.lz - 1.0) >= 1e-12) continue;
    ++on_face;
    if (w.w3 + w.w4 >= 1e-12) {
      add_witness(result, describe_weights(w) + " (lz=1 with w3+w4 > 0)", w.w3 + w.w4);
    }
    if (std::abs(lam.lx - lam.ly) > 1e-14) {
      add_witness(result, describe_weights(w) + " (lz=1 with lx != ly)", lam.lx - lam.ly);
    }
    const bool lambda_nonzero = std::abs(lam.lx) > 1e-14;
    const bool weights_unequal = std::abs(w.w1 - w.w2) > 1e-14;
    if (lambda_nonzero != weights_unequal) {
      add_witness(result, describe_weights(w) + " (lx nonzero iff w1 != w2 failed)", lam.lx);
    }
  }

  // Inversion accepts the diagonal (t, t, 1) and rejects everything else on
  // the lz = 1 face.
  int accepted = 0, rejected = 0;
  for (int i = 0; i <= grid_n; ++i) {
    const double lx = -1.0 + 2.0 * i / grid_n;
    for (int j = 0; j <= grid_n; ++j) {
      const double ly = -1.0 + 2.0 * j / grid_n;
      const auto weights = try_weights_from_lambdas(PauliLambdas(lx, ly, 1.0));
      if (std::abs(lx - ly) > 1e-9) {
        if (weights) {
          add_witness(result, strf("probe (%.6g, %.6g, 1) accepted", lx, ly), lx - ly);
        } else {
          ++rejected;
        }
      } else {
        if (!weights) {
          add_witness(result, strf("probe (%.6g, %.6g, 1) rejected", lx, ly), lx - ly);
        } else {
          ++accepted;
          const PauliLambdas round_trip = lambdas_from_weights(*weights);
          const double err = std::max({std::abs(round_trip.lx - lx), std::abs(round_trip.ly - ly),
                                       std::abs(round_trip.lz - 1.0)});
          if (err > 1e-14) {
            add_witness(result, strf("probe (%.6g, %.6g, 1) round trip off", lx, ly), err);
          }
        }
      }
    }
  }

  result.status = result.witnesses.empty() ? ClaimStatus::Pass : ClaimStatus::Fail;
  result.detail = strf("%d grid channels with lz=1 all two-Bell; probes: %d diagonal accepted, "
                       "%d off-diagonal rejected",
                       on_face, accepted, rejected);
  return result;
}

ClaimResult claim_werner_thresholds(int grid_n, double tol) {
  if (grid_n < 20) {
    throw std::invalid_argument("claim_werner_thresholds: grid_n must be >= 20");
  }
  ClaimResult result;
  result.id = "werner-boundary";
  result.grid_size = grid_n;
  result.tolerance = tol;

  const double phi_critical = 1.0 / std::sqrt(3.0);
  auto teleports = [&](double phi) {
    const PauliLambdas lam = lambdas_from_weights(werner_weights(phi));
    return ppt_min_eigenvalue(closed_form_max_entangled_output(lam)) < 0.0;
  };

  int checked = 0;
  for (int j = 0; j <= grid_n; ++j) {
    const double phi = static_cast<double>(j) / grid_n;
    if (std::abs(3.0 * phi * phi - 1.0) < kBoundaryBand) continue;
    ++checked;
    const PauliLambdas lam = lambdas_from_weights(werner_weights(phi));
    const bool observed = ppt_min_eigenvalue(closed_form_max_entangled_output(lam)) < -tol;
    if (observed != (phi > phi_critical)) {
      add_witness(result, strf("phi=%.6g", phi), 3.0 * phi * phi - 1.0);
    }
  }

  // Bisection pins the empirical boundary well below the 1e-6 acceptance.
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 60 && hi - lo > 1e-12; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (teleports(mid) ? hi : lo) = mid;
  }
  const double phi_star = 0.5 * (lo + hi);
  const double max_weight_star = werner_weights(phi_star).max_weight();
  if (std::abs(phi_star - phi_critical) > 1e-6) {
    add_witness(result, strf("bisection boundary phi=%.9f, expected %.9f", phi_star, phi_critical),
                phi_star - phi_critical);
  }

  result.status = result.witnesses.empty() ? ClaimStatus::Pass : ClaimStatus::Fail;
  result.detail = strf("%d grid points consistent; boundary at pure-Bell admixture phi=%.8f "
                       "(max weight %.8f there)",
                       checked, phi_star, max_weight_star);
  return result;
}

ClaimResult claim_unknown_basis_failure(double w, double tol) {
  if (!(w > 0.0 && w <= 1.0)) {
    throw std::invalid_argument("claim_unknown_basis_failure: w must be in (0, 1]");
  }
  if (std::abs(w - 0.5) < kBoundaryBand) {
    throw std::invalid_argument("claim_unknown_basis_failure: channel at w = 1/2 is separable");
  }
  ClaimResult result;
  result.id = strf("unknown-basis-search[w=%.4g]", w);
  result.tolerance = tol;

  const PauliLambdas lam = lambdas_from_weights(BellWeights(w, 1.0 - w, 0.0, 0.0));

  constexpr int kThetaSteps = 18;
  constexpr double kAlpha2Grid[] = {0.02, 0.05, 0.1, 0.15, 0.2, 0.3, 0.4, 0.5};
  int scanned = 0, found = 0;
  for (int i = 0; i <= kThetaSteps; ++i) {
    const double theta = kPi / 2.0 * i / kThetaSteps;
    const Matrix rot = kron(rotation_y(theta), rotation_y(theta));
    for (double a2 : kAlpha2Grid) {
      Vector v = Vector::Zero(4);
      v(0) = std::sqrt(a2);
      v(3) = std::sqrt(1.0 - a2);
      const DensityMatrix input = DensityMatrix::pure(rot * v);
      const double ppt = ppt_min_eigenvalue(apply_channel_two_sided(input, lam));
      ++scanned;
      if (ppt >= -tol) {
        ++found;
        add_witness(result, strf("theta=%.6g, alpha2=%.6g", theta, a2), ppt);
      }
    }
  }
  result.grid_size = scanned;

  result.status = found > 0 ? ClaimStatus::WitnessFound : ClaimStatus::WitnessNotFound;
  if (found > 0) {
    result.detail = strf("%d of %d rotated states teleport to separable outputs; first at %s",
                         found, scanned, result.witnesses.front().input.c_str());
  } else {
    result.detail = strf("grid of %d rotated states exhausted without a separable output", scanned);
  }
  return result;
}

std::vector<ClaimResult> run_all_claims(const ClaimSuiteConfig& config) {
  std::vector<ClaimResult> results;
  results.push_back(claim_two_bell_inseparable(std::max(config.grid_n, 3), config.seed, config.tol));
  results.push_back(claim_threshold_iff(std::max(config.grid_n, 5), config.tol));
  results.push_back(
      claim_bell_implies_threshold(std::max(config.sample_count, 100), config.seed, config.tol));
  results.push_back(claim_two_e_iff_threshold(std::max(config.grid_n, 5), config.tol));
  for (double w : {0.6, 0.75, 0.9, 1.0}) {
    results.push_back(claim_full_range_two_bell(w, std::max(config.sample_count, 100), config.seed,
                                                config.tol));
  }
  results.push_back(claim_lambda_z_one_uniqueness(std::max(config.grid_n, 10), config.tol));
  results.push_back(claim_werner_thresholds(std::max(config.grid_n, 20), config.tol));
  results.push_back(claim_unknown_basis_failure(0.6, config.tol));
  return results;
}

}  // namespace belltel
