#include "isac/sensing.hpp"

#include <algorithm>
#include <mutex>
#include <cmath>
#include <numbers>
#include <thread>

#include "isac/array.hpp"
#include "isac/crb.hpp"
#include "isac/errors.hpp"

namespace isac {

using std::numbers::pi;

namespace {

// |a_s^H(theta) B q*(theta)|^2 with B = Y X^H precomputed.
double objective_from_b(double theta, const Eigen::MatrixXcd& b, double sin_theta_bi) {
  const Eigen::VectorXcd a = steering_vector(theta, static_cast<int>(b.rows()));
  const Eigen::VectorXcd q =
      steering_from_psi(sin_theta_bi - std::sin(theta), static_cast<int>(b.cols()));
  const std::complex<double> v = a.dot(b * q.conjugate());
  return std::norm(v);
}

}  // namespace

EchoBlock simulate_echo_scan(const ChannelSet& ch, const Codebook& cb,
                             const SystemConfig& cfg, NoiseStream& noise) {
  const int l = static_cast<int>(cb.beams.cols());
  const int ms = cfg.n_ses;
  EchoBlock block;
  block.sigma2 = cfg.noise_power;
  block.sin_theta_bi = std::sin(cfg.theta_bi);
  block.x = std::sqrt(cfg.n_bs_antennas * cfg.tx_power) * ch.alpha_g * cb.beams;

  const Eigen::VectorXcd a_s = steering_vector(cfg.theta_it, ms);
  const Eigen::VectorXcd q = steering_from_psi(ch.psi_it, cfg.n_res);
  // Column t: sqrt(N P_t) alpha_g alpha_s a_s (q^T phi(t)) + noise.
  const Eigen::RowVectorXcd beam_gains = q.transpose() * cb.beams;
  const std::complex<double> c1 =
      std::sqrt(cfg.n_bs_antennas * cfg.tx_power) * ch.alpha_g * ch.alpha_s;
  block.y.resize(ms, l);
  for (int t = 0; t < l; ++t)
    block.y.col(t) = c1 * beam_gains[t] * a_s + noise.vector(ms, cfg.noise_power);
  return block;
}

double mle_objective(double theta, const EchoBlock& block) {
  return objective_from_b(theta, block.y * block.x.adjoint(), block.sin_theta_bi);
}

EstimationResult estimate_angle(const EchoBlock& block, int grid_points) {
  if (grid_points < 3) throw InvalidValue("grid_points", "need at least 3 grid points");
  if (block.y.norm() == 0.0)
    throw DegenerateBlock("echo block is identically zero; the objective has no maximizer");

  const Eigen::MatrixXcd b = block.y * block.x.adjoint();
  const auto objective = [&](double theta) {
    return objective_from_b(theta, b, block.sin_theta_bi);
  };

  // Coarse exhaustive search.
  const double lo = -pi / 2, hi = pi / 2;
  const double step = (hi - lo) / (grid_points - 1);
  int best = 0;
  double best_val = -1.0;
  for (int i = 0; i < grid_points; ++i) {
    const double v = objective(lo + i * step);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }

  // Golden-section refinement inside the bracketing interval.
  double a = lo + std::max(best - 1, 0) * step;
  double c = lo + std::min(best + 1, grid_points - 1) * step;
  constexpr double invphi = 0.6180339887498949;
  double x1 = c - invphi * (c - a);
  double x2 = a + invphi * (c - a);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (c - a > kRefineTolRad) {
    if (f1 > f2) {
      c = x2;
      x2 = x1;
      f2 = f1;
      x1 = c - invphi * (c - a);
      f1 = objective(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (c - a);
      f2 = objective(x2);
    }
  }

  EstimationResult res;
  res.theta_hat = 0.5 * (a + c);
  res.grid_points = grid_points;
  res.refined = true;
  res.objective = objective(res.theta_hat);

  // Closed-form gain estimate at theta_hat:
  // vec(u)^H vec(Y) / ||vec(u)||^2 = (a_s^H Y X^H q*) / (M_s q^T X X^H q*).
  const int ms = static_cast<int>(block.y.rows());
  const Eigen::VectorXcd a_s = steering_vector(res.theta_hat, ms);
  const Eigen::VectorXcd q = steering_from_psi(
      block.sin_theta_bi - std::sin(res.theta_hat), static_cast<int>(block.x.rows()));
  const std::complex<double> num = a_s.dot(b * q.conjugate());
  const std::complex<double> den =
      (q.transpose() * (block.x * block.x.adjoint()) * q.conjugate()).value();
  res.alpha_hat = num / (static_cast<double>(ms) * den.real());
  return res;
}

MonteCarloResult run_monte_carlo_rmse(const SystemConfig& cfg, long long trials,
                                      int workers, int grid_points) {
  if (trials < 1) throw InvalidValue("trials", "need at least one trial");
  if (grid_points < 3) throw InvalidValue("grid_points", "need at least 3 grid points");
  const ChannelSet ch = build_channels(cfg);
  const Codebook cb = dft_codebook(cfg.n_res, cfg.codebook_size);

  // Shared noiseless signal; only the noise is redrawn per trial.
  const Eigen::MatrixXcd x =
      std::sqrt(cfg.n_bs_antennas * cfg.tx_power) * ch.alpha_g * cb.beams;
  const UMatrix um = u_matrix(cfg.theta_it, x, cfg.n_ses, std::sin(cfg.theta_bi));
  const Eigen::MatrixXcd y0 = ch.alpha_s * um.u;

  MonteCarloResult result;
  result.trials = trials;
  result.errors.resize(static_cast<std::size_t>(trials));
  result.theta_hats.resize(static_cast<std::size_t>(trials));

  const auto run_range = [&](long long begin, long long end) {
    EchoBlock block;
    block.x = x;
    block.sigma2 = cfg.noise_power;
    block.sin_theta_bi = std::sin(cfg.theta_bi);
    for (long long t = begin; t < end; ++t) {
      NoiseStream noise(cfg.rng_seed, static_cast<std::uint64_t>(t), kEchoScanTag);
      block.y = y0 + noise.matrix(cfg.n_ses, cfg.codebook_size, cfg.noise_power);
      const EstimationResult est = estimate_angle(block, grid_points);
      result.theta_hats[static_cast<std::size_t>(t)] = est.theta_hat;
      result.errors[static_cast<std::size_t>(t)] = cfg.theta_it - est.theta_hat;
    }
  };

  workers = std::max(1, workers);
  if (workers == 1 || trials == 1) {
    run_range(0, trials);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const long long chunk = (trials + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const long long begin = w * chunk;
      const long long end = std::min(trials, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        try {
          run_range(begin, end);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  // Index-ordered reduction: identical result for any worker count.
  double acc = 0.0;
  for (double e : result.errors) acc += e * e;
  result.rmse = std::sqrt(acc / static_cast<double>(trials));
  return result;
}

}  // namespace isac
