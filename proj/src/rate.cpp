#include "isac/rate.hpp"

#include <cmath>

#include "isac/beam_training.hpp"
#include "isac/channel.hpp"
#include "isac/detail/gauss_legendre.hpp"
#include "isac/errors.hpp"

namespace isac {
namespace {

// N P_t |alpha_g|^2 |alpha_h|^2 / sigma^2; the gain_ratio^2 factor is applied
// by the caller.
double snr_scale(const SystemConfig& cfg) {
  const double lambda = cfg.wavelength();
  const double ag2 = std::norm(path_gain_one_way(cfg.d_bs_irs, lambda));
  const double ah2 = std::norm(path_gain_one_way(cfg.d_irs_user, lambda));
  return cfg.n_bs_antennas * cfg.tx_power * ag2 * ah2 / cfg.noise_power;
}

double capacity(const SystemConfig& cfg, double delta) {
  const double g = gain_ratio(delta, cfg.n_res);
  return std::log2(1.0 + snr_scale(cfg) * g * g);
}

}  // namespace

double stas_rate(const SystemConfig& cfg, double delta, double tau) {
  const double t = static_cast<double>(cfg.coherence_time);
  if (!(tau >= 0.0 && tau <= t))
    throw InvalidValue("tau", "scan time must lie in [0, coherence_time]");
  return (t - tau) / t * capacity(cfg, delta);
}

double otas_rate(const SystemConfig& cfg, double delta, double tau, double tau_s) {
  const double t = static_cast<double>(cfg.coherence_time);
  if (tau < 0.0 || tau_s < 0.0 || tau + tau_s > t)
    throw DurationOverflow("scan plus sensing time exceeds the coherence time");
  return (t - tau - tau_s) / t * capacity(cfg, delta);
}

double average_capacity_term(const SystemConfig& cfg, int l, int quad_order) {
  if (l < cfg.n_res) throw InvalidSize("codebook size smaller than the reflect array");
  const auto [nodes, weights] = detail::gauss_legendre(quad_order);
  // delta ~ U(0, 1/l): map [-1,1] onto [0, 1/l]; the leading l is the
  // uniform density.
  const double half = 0.5 / l;
  double acc = 0.0;
  for (int i = 0; i < quad_order; ++i) {
    const double delta = half * (nodes[i] + 1.0);
    acc += weights[i] * half * capacity(cfg, delta);
  }
  return l * acc;
}

double average_rate_over_delta(const SystemConfig& cfg, int l, int quad_order) {
  const double t = static_cast<double>(cfg.coherence_time);
  const double tau = static_cast<double>(cfg.symbols_per_beam) * l;
  if (!(tau >= 0.0 && tau <= t))
    throw InvalidValue("tau", "scan time must lie in [0, coherence_time]");
  return (t - tau) / t * average_capacity_term(cfg, l, quad_order);
}

double average_otas_rate_over_delta(const SystemConfig& cfg, int l, double tau_s,
                                    int quad_order) {
  const double t = static_cast<double>(cfg.coherence_time);
  const double tau = static_cast<double>(cfg.symbols_per_beam) * l;
  if (tau_s < 0.0 || tau + tau_s > t)
    throw DurationOverflow("scan plus sensing time exceeds the coherence time");
  return (t - tau - tau_s) / t * average_capacity_term(cfg, l, quad_order);
}

}  // namespace isac
