#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "isac/beam_training.hpp"
#include "isac/channel.hpp"
#include "isac/config.hpp"
#include "isac/noise.hpp"

namespace isac {

/// Echo signals collected at the IRS sensing elements over one sweep, with
/// the known probing matrix X = sqrt(N P_t) alpha_g [phi(1) ... phi(L)].
/// sin_theta_bi is the known BS-IRS geometry the estimator is entitled to.
struct EchoBlock {
  Eigen::MatrixXcd y;  // M_s x L
  Eigen::MatrixXcd x;  // M x L
  double sigma2 = 0.0;
  double sin_theta_bi = 0.0;
};

EchoBlock simulate_echo_scan(const ChannelSet& ch, const Codebook& cb,
                             const SystemConfig& cfg, NoiseStream& noise);

/// |a_s^H(theta) Y X^H q*(theta)|^2 with q(theta) the reflect-side response
/// at spatial frequency sin(theta_BI) - sin(theta).
double mle_objective(double theta, const EchoBlock& block);

struct EstimationResult {
  double theta_hat = 0.0;
  std::complex<double> alpha_hat;
  double objective = 0.0;
  int grid_points = 0;
  bool refined = false;
};

inline constexpr int kDefaultGridPoints = 2048;
inline constexpr double kRefineTolRad = 1e-7;

/// Maximum-likelihood angle estimate: exhaustive search of the objective on
/// a uniform grid over [-pi/2, pi/2], then golden-section refinement inside
/// the bracketing interval down to kRefineTolRad. alpha_hat is the closed-
/// form gain estimate at theta_hat. Throws DegenerateBlock when ||Y||_F = 0.
EstimationResult estimate_angle(const EchoBlock& block,
                                int grid_points = kDefaultGridPoints);

struct MonteCarloResult {
  double rmse = 0.0;       // radians
  long long trials = 0;
  std::vector<double> errors;      // theta_IT - theta_hat, per trial
  std::vector<double> theta_hats;  // per trial
};

/// Fixed channels, noise redrawn per trial from (cfg.rng_seed, trial,
/// kEchoScanTag). Per-trial results land in index-addressed slots and are
/// reduced in index order, so the RMSE is bit-identical for any worker count.
MonteCarloResult run_monte_carlo_rmse(const SystemConfig& cfg, long long trials,
                                      int workers = 1,
                                      int grid_points = kDefaultGridPoints);

}  // namespace isac
