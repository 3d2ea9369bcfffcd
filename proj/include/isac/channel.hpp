#pragma once

#include <Eigen/Dense>
#include <complex>

#include "isac/config.hpp"

namespace isac {

/// One-way LoS path gain: magnitude lambda/(4 pi d), phase 2 pi d / lambda.
std::complex<double> path_gain_one_way(double distance, double lambda);

/// Round-trip (reflector-target-reflector) path gain:
/// magnitude sqrt(lambda^2 kappa / (64 pi^3 d^4)), phase 4 pi d / lambda.
std::complex<double> path_gain_roundtrip(double distance, double lambda, double kappa);

/// The three LoS channels of a scenario plus their gains and the sin-domain
/// effective angles. Immutable after construction; shared read-only across
/// Monte Carlo workers.
struct ChannelSet {
  Eigen::MatrixXcd g;    // BS -> IRS REs, M x N, rank 1
  Eigen::VectorXcd h_u;  // IRS REs -> user, length M
  Eigen::MatrixXcd h_t;  // IRS REs -> target -> IRS SEs, M_s x M, rank 1
  std::complex<double> alpha_g;
  std::complex<double> alpha_h;
  std::complex<double> alpha_s;
  double psi_iu = 0.0;  // sin(theta_IU) - sin(theta_BI)
  double psi_it = 0.0;  // sin(theta_BI) - sin(theta_IT)
};

ChannelSet build_channels(const SystemConfig& cfg);

/// Unit-norm BS beamformer a_b(vartheta_BI)/sqrt(N); G*w = sqrt(N) alpha_g a_r(theta_BI).
Eigen::VectorXcd transmit_beamformer(const SystemConfig& cfg);

}  // namespace isac
