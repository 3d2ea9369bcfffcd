#pragma once

#include <Eigen/Dense>
#include <complex>

#include "isac/config.hpp"

namespace isac {

/// Noiseless echo template u(theta) = a_s(theta) q^T(theta) X and its angle
/// derivative by the product rule (exact chain-rule signs, so both match
/// central finite differences elementwise).
struct UMatrix {
  Eigen::MatrixXcd u;      // M_s x L
  Eigen::MatrixXcd u_dot;  // M_s x L
};

UMatrix u_matrix(double theta, const Eigen::MatrixXcd& x, int n_ses,
                 double sin_theta_bi);

/// 3x3 Fisher information for (theta, Re alpha_s, Im alpha_s):
///   F_tt  = 2|a_s|^2/s2 * tr(du du^H)
///   F_ta  = 2/s2 * Re{conj(a_s) tr(u du^H) [1, j]}
///   F_aa  = 2/s2 * tr(u u^H) I_2
Eigen::Matrix3d fisher_matrix(double theta, std::complex<double> alpha_s,
                              const Eigen::MatrixXcd& x, double sigma2,
                              int n_ses, double sin_theta_bi);

enum class CrbMethod { general, simplified, closed_form };

struct CrbResult {
  double crb = 0.0;   // rad^2
  double rcrb = 0.0;  // rad
  CrbMethod method = CrbMethod::general;
};

/// Schur complement of the gain block: 1 / (F_tt - |F_ta|^2 / F_aa), with the
/// 2x2 gain block inverted analytically (it is a scalar times I_2). Throws
/// SingularInformation when the complement is <= 1e-300.
CrbResult crb_general(const Eigen::Matrix3d& fim);

/// The equivalent trace form sigma^2 / (2|a_s|^2 (tr(du du^H) -
/// |tr(u du^H)|^2 / tr(u u^H))), as an independent algebraic route.
CrbResult crb_trace_form(double theta, std::complex<double> alpha_s,
                         const Eigen::MatrixXcd& x, double sigma2, int n_ses,
                         double sin_theta_bi);

/// Protocol-simplified bound sigma^2 / (2 L N P_t |a_s|^2 |a_g|^2
/// (M ||da_s||^2 + M_s ||dq||^2)), norms evaluated from the derivative
/// vectors. Valid because the DFT probing covariance is a scaled identity.
CrbResult crb_simplified(const SystemConfig& cfg, double theta);

/// Fully reduced form 6 sigma^2 / (L N P_t |a_s|^2 |a_g|^2 pi^2 cos^2(theta)
/// M M_s (M^2 + M_s^2 - 2)), using ||zeta .* a||^2 = m(m^2-1)/12.
CrbResult crb_closed_form(const SystemConfig& cfg, double theta);

}  // namespace isac
