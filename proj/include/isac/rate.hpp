#pragma once

#include "isac/config.hpp"

namespace isac {

/// Achievable rate [bit/s/Hz] with simultaneous training and sensing:
/// (T - tau)/T * log2(1 + N P_t |a_g|^2 |a_h|^2 / sigma^2 * gain^2(delta)).
/// Throws InvalidValue unless 0 <= tau <= T.
double stas_rate(const SystemConfig& cfg, double delta, double tau);

/// Rate with a dedicated second scanning period of tau_s symbols:
/// same SNR term, prefactor (T - tau - tau_s)/T.
/// Throws DurationOverflow if tau + tau_s > T.
double otas_rate(const SystemConfig& cfg, double delta, double tau, double tau_s);

/// E_delta[log2(1 + snr * gain^2(delta))] for delta ~ U(0, 1/l), by Gauss-
/// Legendre quadrature. Shared by both protocol averages so their ratio is
/// exactly the ratio of time prefactors.
double average_capacity_term(const SystemConfig& cfg, int l, int quad_order = 64);

/// delta-averaged STAS rate at codebook size l (tau = K*l).
/// Throws InvalidSize if l < n_res.
double average_rate_over_delta(const SystemConfig& cfg, int l, int quad_order = 64);

/// delta-averaged OTAS rate at codebook size l (tau = K*l) and sensing
/// period tau_s. Throws DurationOverflow if tau + tau_s > T.
double average_otas_rate_over_delta(const SystemConfig& cfg, int l, double tau_s,
                                    int quad_order = 64);

}  // namespace isac
