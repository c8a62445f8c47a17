// Executable verification of the analytic assertions about Bell-mixture
// teleportation channels. Every claim is deterministic given its grid size,
// sample count and seed, and returns a structured result with witnesses for
// any failure.
#pragma once

#include "belltel/channel.hpp"
#include "belltel/criteria.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace belltel {

// Grid experiments exclude this band around analytic decision boundaries so
// float noise cannot flip expected verdicts; boundaries themselves are
// probed only at exactly representable points.
inline constexpr double kBoundaryBand = 1e-6;

struct ClaimWitness {
  std::string input;  // parameters of the offending (or found) configuration
  double decisive;    // the scalar the verdict was read from
};

enum class ClaimStatus {
  Pass,
  Fail,
  WitnessFound,     // search-style claims only; never gates the suite
  WitnessNotFound,  // search-style claims only; never gates the suite
};

const char* claim_status_name(ClaimStatus s);

struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::Pass;
  int grid_size = 0;
  int sample_count = 0;
  std::uint64_t seed = 0;
  double tolerance = kDecisionTol;
  std::string detail;
  std::vector<ClaimWitness> witnesses;

  bool passed() const { return status != ClaimStatus::Fail; }
  bool informational() const {
    return status == ClaimStatus::WitnessFound || status == ClaimStatus::WitnessNotFound;
  }
};

/// All integer compositions (k1..k4) of grid_n, mapped to w_i = k_i/grid_n,
/// in lexicographic order of (k1, k2, k3). Shared by every claim that
/// quantifies over the weight simplex (and by the CLI sweep).
std::vector<BellWeights> simplex_grid(int grid_n);

/// Two-Bell channels (w, 1-w, 0, 0) teleport every state alpha|00>+beta|11>
/// to an entangled output whenever w != 1/2, and to a separable one at
/// w = 1/2 exactly.
ClaimResult claim_two_bell_inseparable(int grid_n = 12, std::uint64_t seed = 0,
                                       double tol = kDecisionTol);

/// The teleported maximally entangled probe stays entangled iff
/// lx^2 + ly^2 + lz^2 > 1, over the whole weight simplex.
ClaimResult claim_threshold_iff(int grid_n = 12, double tol = kDecisionTol);

/// CHSH violation of the channel state implies the damping threshold, and
/// the implication is strict: (0.7, 0.1, 0.1, 0.1) passes the threshold
/// (sum 1.08) without violating CHSH (M = 0.72).
ClaimResult claim_bell_implies_threshold(int sample_count = 200, std::uint64_t seed = 0,
                                         double tol = kDecisionTol);

/// The channel state violates the Renyi-2 entropic inequality iff
/// lx^2 + ly^2 + lz^2 > 1 (equivalently sum w_i^2 > 1/2).
ClaimResult claim_two_e_iff_threshold(int grid_n = 12, double tol = kDecisionTol);

/// Through (w, 1-w, 0, 0) with w != 1/2, every entangled alpha|00>+beta|11>
/// stays entangled and the output concurrence is exactly (2w-1)^2 times the
/// input concurrence. Throws std::invalid_argument at w = 1/2.
ClaimResult claim_full_range_two_bell(double w, int sample_count = 100, std::uint64_t seed = 0,
                                      double tol = kDecisionTol);

/// lz = 1 forces w3 = w4 = 0 (hence lx = ly = w1 - w2): two-Bell mixtures
/// are the only channels with lz = 1, and inversion rejects every probe
/// (lx, ly, 1) with lx != ly.
ClaimResult claim_lambda_z_one_uniqueness(int grid_n = 12, double tol = kDecisionTol);

/// Werner channels teleport the maximally entangled probe iff the pure-Bell
/// admixture phi exceeds 1/sqrt(3); locates the boundary by bisection and
/// reports both phi and the max weight (1+3 phi)/4 there, since the two
/// parameterizations are easy to conflate.
ClaimResult claim_werner_thresholds(int grid_n = 20, double tol = kDecisionTol);

/// Searches rotated-basis pure states a|00'>+b|11'> (local Ry rotations of
/// the computational Schmidt basis) for one that the two-Bell channel maps
/// to a separable state. Reports the witness or grid exhaustion; w in (0, 1]
/// off the 1/2 band.
ClaimResult claim_unknown_basis_failure(double w, double tol = kDecisionTol);

struct ClaimSuiteConfig {
  int grid_n = 12;
  int sample_count = 200;
  std::uint64_t seed = 0;
  double tol = kDecisionTol;
};

/// Runs every claim, flooring each grid/sample parameter at the claim's own
/// minimum so coarse global settings stay valid.
std::vector<ClaimResult> run_all_claims(const ClaimSuiteConfig& config = {});

}  // namespace belltel
