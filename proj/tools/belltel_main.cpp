// belltel: teleportation analysis for Bell-mixture noisy channels.
//
// Subcommands:
//   verify    run the built-in claim suite (exit 0 iff every claim passes)
//   sweep     tabulate channel diagnostics over the weight simplex as CSV
//   teleport  single-shot teleportation of alpha|00>+beta|11>
//   channel   diagnostics of one channel state

#include "belltel/belltel.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace belltel;

// Locale-independent rendering with 12 significant digits.
std::string format_sig12(double v) {
  if (v == 0.0) v = 0.0;  // fold -0
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

const char* yes_no(bool v) { return v ? "YES" : "NO"; }

// Comma-separated weights; sums within 1e-9 of 1 are renormalized, anything
// further off is a usage error.
bool parse_weights(const std::string& text, std::vector<double>& out, std::string& error) {
  out.clear();
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const std::string field =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      size_t used = 0;
      const double v = std::stod(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
      out.push_back(v);
    } catch (const std::exception&) {
      error = "cannot parse weight '" + field + "'";
      return false;
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != 4) {
    error = "expected 4 comma-separated weights, got " + std::to_string(out.size());
    return false;
  }
  double sum = 0.0;
  for (double& v : out) {
    if (v < -1e-9 || v > 1.0 + 1e-9) {
      error = "weight " + format_sig12(v) + " is not in [0, 1]";
      return false;
    }
    v = std::max(v, 0.0);
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    error = "weights sum to " + format_sig12(sum) + "; must be within 1e-9 of 1";
    return false;
  }
  for (double& v : out) v /= sum;
  return true;
}

void print_matrix(const Matrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    std::printf(" ");
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::printf(" %+12.9f%+12.9fi", m(r, c).real(), m(r, c).imag());
    }
    std::printf("\n");
  }
}

void print_criteria(const CriteriaReport& report) {
  std::printf("criteria:\n");
  std::printf("  ppt_min_eig      %s\n", format_sig12(report.ppt_min_eig).c_str());
  std::printf("  concurrence      %s\n", format_sig12(report.concurrence).c_str());
  std::printf("  horodecki_m      %s\n", format_sig12(report.horodecki_m).c_str());
  std::printf("  s2_deficit       %s\n", format_sig12(report.s2_deficit).c_str());
  std::printf("  entangled        %s\n", yes_no(report.entangled));
  std::printf("  bell_violating   %s\n", yes_no(report.bell_violating));
  std::printf("  two_e_violating  %s\n", yes_no(report.two_e_violating));
}

int cmd_verify(int grid_n, std::uint64_t seed, double tol) {
  const auto results = run_all_claims(ClaimSuiteConfig{grid_n, 200, seed, tol});
  bool all_passed = true;
  for (const ClaimResult& r : results) {
    std::printf("%-10s %-32s %s\n", claim_status_name(r.status), r.id.c_str(), r.detail.c_str());
    if (r.status == ClaimStatus::Fail) {
      all_passed = false;
      for (const ClaimWitness& w : r.witnesses) {
        std::printf("           witness: %s (decisive %s)\n", w.input.c_str(),
                    format_sig12(w.decisive).c_str());
      }
    }
  }
  return all_passed ? 0 : 1;
}

int cmd_sweep(int grid_n, const std::string& out_path, double tol) {
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::fprintf(stderr, "error: cannot open '%s' for writing\n", out_path.c_str());
    return 1;
  }
  file << "w1,w2,w3,w4,lx,ly,lz,sum_l2,mef,m_bell,s2_deficit,out_ppt_min_eig,"
          "out_concurrence,teleports\n";
  std::size_t rows = 0;
  for (const BellWeights& w : simplex_grid(grid_n)) {
    const PauliLambdas lam = lambdas_from_weights(w);
    const double s2 = sum_lambda_sq(lam);
    const DensityMatrix channel_state = bell_mixture(w);
    const DensityMatrix output = closed_form_max_entangled_output(lam);
    const double out_ppt = ppt_min_eigenvalue(output);

    file << format_sig12(w.w1) << ',' << format_sig12(w.w2) << ',' << format_sig12(w.w3) << ','
         << format_sig12(w.w4) << ',' << format_sig12(lam.lx) << ',' << format_sig12(lam.ly)
         << ',' << format_sig12(lam.lz) << ',' << format_sig12(s2) << ','
         << format_sig12(mef_bell_diagonal(w)) << ','
         << format_sig12(horodecki_m(channel_state)) << ','
         << format_sig12(two_e_violation(channel_state, tol).deficit) << ','
         << format_sig12(out_ppt) << ',' << format_sig12(concurrence(output)) << ','
         << (out_ppt < -tol ? 1 : 0) << '\n';
    ++rows;
  }
  file.flush();
  if (!file) {
    std::fprintf(stderr, "error: write to '%s' failed\n", out_path.c_str());
    return 1;
  }
  std::printf("wrote %zu rows to %s\n", rows, out_path.c_str());
  return 0;
}

int cmd_teleport(const BellWeights& weights, double alpha2, double phase, bool full_sim,
                 double tol) {
  const SchmidtState input = SchmidtState::from_alpha2(alpha2, phase);
  const PauliLambdas lam = lambdas_from_weights(weights);

  std::printf("channel weights  %s %s %s %s\n", format_sig12(weights.w1).c_str(),
              format_sig12(weights.w2).c_str(), format_sig12(weights.w3).c_str(),
              format_sig12(weights.w4).c_str());
  std::printf("lambda           (%s, %s, %s)\n", format_sig12(lam.lx).c_str(),
              format_sig12(lam.ly).c_str(), format_sig12(lam.lz).c_str());
  std::printf("input            alpha2=%s phase=%s\n", format_sig12(alpha2).c_str(),
              format_sig12(phase).c_str());

  const DensityMatrix output = closed_form_schmidt_output(input, lam);
  std::printf("closed-form output:\n");
  print_matrix(output.matrix());

  if (full_sim) {
    const DensityMatrix simulated = teleport_2q(schmidt_density(input), weights);
    std::printf("full-simulation output:\n");
    print_matrix(simulated.matrix());
    std::printf("max |closed-form - simulation| = %.3e\n",
                max_abs_diff(output.matrix(), simulated.matrix()));
  }

  print_criteria(evaluate_criteria(output, tol));
  return 0;
}

int cmd_channel(const BellWeights& weights, double tol) {
  const PauliLambdas lam = lambdas_from_weights(weights);
  const double s2 = sum_lambda_sq(lam);
  const DensityMatrix channel_state = bell_mixture(weights);
  const double channel_ppt = ppt_min_eigenvalue(channel_state);
  const double m = horodecki_m(channel_state);
  const TwoEResult two_e = two_e_violation(channel_state, tol);

  std::printf("weights              %s %s %s %s\n", format_sig12(weights.w1).c_str(),
              format_sig12(weights.w2).c_str(), format_sig12(weights.w3).c_str(),
              format_sig12(weights.w4).c_str());
  std::printf("lambda               (%s, %s, %s)\n", format_sig12(lam.lx).c_str(),
              format_sig12(lam.ly).c_str(), format_sig12(lam.lz).c_str());
  std::printf("sum_l2               %s\n", format_sig12(s2).c_str());
  std::printf("mef                  %s\n", format_sig12(mef_bell_diagonal(weights)).c_str());
  std::printf("horodecki_m          %s\n", format_sig12(m).c_str());
  std::printf("s2_deficit           %s\n", format_sig12(two_e.deficit).c_str());
  std::printf("channel_ppt_min_eig  %s (%s)\n", format_sig12(channel_ppt).c_str(),
              channel_ppt < -tol ? "entangled" : "separable");
  std::printf("teleports_threshold  %s\n", yes_no(s2 > 1.0 + tol));
  std::printf("teleports_bell       %s\n", yes_no(m > 1.0 + tol));
  std::printf("teleports_two_e      %s\n", yes_no(two_e.violates));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Teleportation analysis for Bell-mixture noisy channels"};
  app.require_subcommand(1);

  int grid_n = 12;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string weights_text;
  std::string out_path;
  double alpha2 = 0.5;
  double phase = 0.0;
  bool full_sim = false;

  CLI::App* verify = app.add_subcommand("verify", "Run the built-in claim suite");
  verify->add_option("--grid", grid_n, "Simplex grid resolution")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Seed for sampled claims");
  verify->add_option("--tol", tol, "Decision tolerance")->check(CLI::PositiveNumber);

  CLI::App* sweep = app.add_subcommand("sweep", "Tabulate the weight simplex to CSV");
  sweep->add_option("--grid", grid_n, "Simplex grid resolution")->check(CLI::PositiveNumber);
  sweep->add_option("--out", out_path, "Output CSV path")->required();
  sweep->add_option("--tol", tol, "Decision tolerance")->check(CLI::PositiveNumber);

  CLI::App* teleport = app.add_subcommand("teleport", "Teleport alpha|00>+beta|11> once");
  teleport->add_option("--weights", weights_text, "Channel weights w1,w2,w3,w4")->required();
  teleport->add_option("--alpha2", alpha2, "|alpha|^2 of the input state")
      ->check(CLI::Range(0.0, 1.0));
  teleport->add_option("--phase", phase, "Relative phase of beta (radians)");
  teleport->add_flag("--full-sim", full_sim, "Also run the 6-qubit protocol simulation");
  teleport->add_option("--tol", tol, "Decision tolerance")->check(CLI::PositiveNumber);

  CLI::App* channel = app.add_subcommand("channel", "Diagnose one channel state");
  channel->add_option("--weights", weights_text, "Channel weights w1,w2,w3,w4")->required();
  channel->add_option("--tol", tol, "Decision tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(grid_n, seed, tol);
    if (app.got_subcommand(sweep)) return cmd_sweep(grid_n, out_path, tol);

    std::string error;
    std::vector<double> w;
    if (!parse_weights(weights_text, w, error)) {
      std::fprintf(stderr, "error: %s\n", error.c_str());
      return 2;
    }
    const BellWeights weights(w[0], w[1], w[2], w[3]);
    if (app.got_subcommand(teleport)) return cmd_teleport(weights, alpha2, phase, full_sim, tol);
    if (app.got_subcommand(channel)) return cmd_channel(weights, tol);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
