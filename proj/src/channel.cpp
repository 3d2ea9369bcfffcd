#include "isac/channel.hpp"

#include <cmath>
#include <numbers>

#include "isac/array.hpp"
#include "isac/errors.hpp"

namespace isac {

using std::numbers::pi;

std::complex<double> path_gain_one_way(double distance, double lambda) {
  const double magnitude = lambda / (4.0 * pi * distance);
  return std::polar(magnitude, 2.0 * pi * distance / lambda);
}

std::complex<double> path_gain_roundtrip(double distance, double lambda, double kappa) {
  const double magnitude =
      std::sqrt(lambda * lambda * kappa / (64.0 * pi * pi * pi * std::pow(distance, 4)));
  return std::polar(magnitude, 4.0 * pi * distance / lambda);
}

ChannelSet build_channels(const SystemConfig& cfg) {
  const double lambda = cfg.wavelength();
  ChannelSet ch;
  ch.alpha_g = path_gain_one_way(cfg.d_bs_irs, lambda);
  ch.alpha_h = path_gain_one_way(cfg.d_irs_user, lambda);
  ch.alpha_s = path_gain_roundtrip(cfg.d_irs_target, lambda, cfg.rcs);
  ch.psi_iu = std::sin(cfg.theta_iu) - std::sin(cfg.theta_bi);
  ch.psi_it = std::sin(cfg.theta_bi) - std::sin(cfg.theta_it);
  ch.g = ch.alpha_g * steering_vector(cfg.theta_bi, cfg.n_res) *
         steering_vector(cfg.vartheta_bi, cfg.n_bs_antennas).adjoint();
  ch.h_u = ch.alpha_h * steering_vector(cfg.theta_iu, cfg.n_res);
  ch.h_t = ch.alpha_s * steering_vector(cfg.theta_it, cfg.n_ses) *
           steering_vector(cfg.theta_it, cfg.n_res).adjoint();
  return ch;
}

Eigen::VectorXcd transmit_beamformer(const SystemConfig& cfg) {
  const int n = cfg.n_bs_antennas;
  return steering_vector(cfg.vartheta_bi, n) / std::sqrt(static_cast<double>(n));
}

}  // namespace isac
