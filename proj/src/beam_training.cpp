#include "isac/beam_training.hpp"

#include <cmath>
#include <numbers>

#include "isac/array.hpp"
#include "isac/errors.hpp"

namespace isac {

using std::numbers::pi;

Codebook dft_codebook(int m, int l) {
  if (m < 1) throw InvalidSize("codebook needs at least one element per beam");
  if (l < m)
    throw InvalidSize("codebook size " + std::to_string(l) +
                      " smaller than array size " + std::to_string(m));
  Codebook cb;
  cb.psi_grid.resize(l);
  cb.beams.resize(m, l);
  for (int i = 0; i < l; ++i) {
    cb.psi_grid[i] = -1.0 + (2.0 * (i + 1) - 1.0) / l;
    cb.beams.col(i) = steering_from_psi(cb.psi_grid[i], m);
  }
  return cb;
}

double gain_ratio(double delta, int m) {
  const double denom = std::sin(pi * delta / 2.0);
  if (denom == 0.0) return static_cast<double>(m);
  return std::abs(std::sin(pi * m * delta / 2.0) / denom);
}

ScanObservation simulate_user_scan(const ChannelSet& ch, const Codebook& cb,
                                   const SystemConfig& cfg, NoiseStream& noise) {
  const int l = static_cast<int>(cb.beams.cols());
  const int k = cfg.symbols_per_beam;
  const std::complex<double> c0 = std::sqrt(cfg.n_bs_antennas * cfg.tx_power) *
                                  ch.alpha_g * std::conj(ch.alpha_h);

  // a_r^H(effective user direction) phi(t), one value per beam.
  const Eigen::VectorXcd a_eff = steering_from_psi(ch.psi_iu, cfg.n_res);
  const Eigen::VectorXcd beam_gains = cb.beams.transpose() * a_eff.conjugate();

  ScanObservation obs;
  obs.y_user.resize(static_cast<Eigen::Index>(l) * k);
  int best = 0;
  double best_metric = -1.0;
  for (int i = 0; i < l; ++i) {
    double metric = 0.0;
    for (int s = 0; s < k; ++s) {
      const std::complex<double> y = c0 * beam_gains[i] + noise.sample(cfg.noise_power);
      obs.y_user[static_cast<Eigen::Index>(i) * k + s] = y;
      metric += std::norm(y);
    }
    if (metric > best_metric) {  // ties keep the lowest index
      best_metric = metric;
      best = i;
    }
  }
  obs.best_index = best;
  obs.delta = std::abs(ch.psi_iu - cb.psi_grid[best]);
  return obs;
}

}  // namespace isac
