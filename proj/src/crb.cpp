#include "isac/crb.hpp"

#include <cmath>
#include <numbers>

#include "isac/array.hpp"
#include "isac/beam_training.hpp"
#include "isac/channel.hpp"
#include "isac/errors.hpp"

namespace isac {

using std::numbers::pi;

namespace {
constexpr double kSingularThreshold = 1e-300;
}

UMatrix u_matrix(double theta, const Eigen::MatrixXcd& x, int n_ses,
                 double sin_theta_bi) {
  const int m = static_cast<int>(x.rows());
  const Eigen::VectorXcd a = steering_vector(theta, n_ses);
  const Eigen::VectorXcd q = steering_from_psi(sin_theta_bi - std::sin(theta), m);

  const std::complex<double> jpc(0.0, pi * std::cos(theta));
  const Eigen::VectorXcd a_dot =
      jpc * zeta_diagonal(n_ses).cast<std::complex<double>>().cwiseProduct(a);
  // d/dtheta of the reflect-side frequency sin_theta_bi - sin(theta) brings
  // a -cos(theta) by the chain rule.
  const Eigen::VectorXcd q_dot =
      -jpc * zeta_diagonal(m).cast<std::complex<double>>().cwiseProduct(q);

  UMatrix um;
  um.u = a * (q.transpose() * x);
  um.u_dot = a_dot * (q.transpose() * x) + a * (q_dot.transpose() * x);
  return um;
}

Eigen::Matrix3d fisher_matrix(double theta, std::complex<double> alpha_s,
                              const Eigen::MatrixXcd& x, double sigma2, int n_ses,
                              double sin_theta_bi) {
  if (!(sigma2 > 0.0)) throw InvalidValue("sigma2", "noise power must be positive");
  const UMatrix um = u_matrix(theta, x, n_ses, sin_theta_bi);

  const double tr_dd = (um.u_dot * um.u_dot.adjoint()).trace().real();
  const std::complex<double> tr_ud = (um.u * um.u_dot.adjoint()).trace();
  const double tr_uu = (um.u * um.u.adjoint()).trace().real();

  const double s = 2.0 / sigma2;
  const std::complex<double> cross = std::conj(alpha_s) * tr_ud;

  Eigen::Matrix3d f;
  f(0, 0) = s * std::norm(alpha_s) * tr_dd;
  f(0, 1) = s * cross.real();
  f(0, 2) = s * (cross * std::complex<double>(0.0, 1.0)).real();
  f(1, 0) = f(0, 1);
  f(2, 0) = f(0, 2);
  f(1, 1) = s * tr_uu;
  f(2, 2) = s * tr_uu;
  f(1, 2) = 0.0;
  f(2, 1) = 0.0;
  return f;
}

CrbResult crb_general(const Eigen::Matrix3d& fim) {
  // The gain block is a scalar times I_2; invert it analytically.
  const double gain_info = fim(1, 1);
  if (gain_info <= kSingularThreshold)
    throw SingularInformation("gain block of the information matrix is singular");
  const double schur =
      fim(0, 0) - (fim(0, 1) * fim(0, 1) + fim(0, 2) * fim(0, 2)) / gain_info;
  if (schur <= kSingularThreshold)
    throw SingularInformation("no information about the angle remains after "
                              "profiling out the complex gain");
  return {1.0 / schur, std::sqrt(1.0 / schur), CrbMethod::general};
}

CrbResult crb_trace_form(double theta, std::complex<double> alpha_s,
                         const Eigen::MatrixXcd& x, double sigma2, int n_ses,
                         double sin_theta_bi) {
  const UMatrix um = u_matrix(theta, x, n_ses, sin_theta_bi);
  const double tr_dd = (um.u_dot * um.u_dot.adjoint()).trace().real();
  const std::complex<double> tr_ud = (um.u * um.u_dot.adjoint()).trace();
  const double tr_uu = (um.u * um.u.adjoint()).trace().real();
  const double denom = 2.0 * std::norm(alpha_s) * (tr_dd - std::norm(tr_ud) / tr_uu);
  if (denom <= kSingularThreshold)
    throw SingularInformation("angle information vanished in the trace form");
  const double crb = sigma2 / denom;
  return {crb, std::sqrt(crb), CrbMethod::general};
}

CrbResult crb_simplified(const SystemConfig& cfg, double theta) {
  if (!(std::abs(theta) < pi / 2))
    throw SingularInformation("bound diverges at endfire (|theta| = pi/2)");
  const double lambda = cfg.wavelength();
  const double ag2 = std::norm(path_gain_one_way(cfg.d_bs_irs, lambda));
  const double as2 = std::norm(path_gain_roundtrip(cfg.d_irs_target, lambda, cfg.rcs));

  const double da_norm2 = steering_derivative(theta, cfg.n_ses).squaredNorm();
  const Eigen::VectorXcd q =
      steering_from_psi(std::sin(cfg.theta_bi) - std::sin(theta), cfg.n_res);
  const Eigen::VectorXcd q_dot =
      std::complex<double>(0.0, -pi * std::cos(theta)) *
      zeta_diagonal(cfg.n_res).cast<std::complex<double>>().cwiseProduct(q);
  const double dq_norm2 = q_dot.squaredNorm();

  const double denom = 2.0 * cfg.codebook_size * cfg.n_bs_antennas * cfg.tx_power *
                       as2 * ag2 * (cfg.n_res * da_norm2 + cfg.n_ses * dq_norm2);
  if (denom <= kSingularThreshold)
    throw SingularInformation("angle information vanished in the simplified form");
  const double crb = cfg.noise_power / denom;
  return {crb, std::sqrt(crb), CrbMethod::simplified};
}

CrbResult crb_closed_form(const SystemConfig& cfg, double theta) {
  if (!(std::abs(theta) < pi / 2))
    throw SingularInformation("bound diverges at endfire (|theta| = pi/2)");
  const double lambda = cfg.wavelength();
  const double ag2 = std::norm(path_gain_one_way(cfg.d_bs_irs, lambda));
  const double as2 = std::norm(path_gain_roundtrip(cfg.d_irs_target, lambda, cfg.rcs));
  const double m = cfg.n_res;
  const double ms = cfg.n_ses;
  const double c = std::cos(theta);
  const double denom = cfg.codebook_size * cfg.n_bs_antennas * cfg.tx_power * as2 *
                       ag2 * pi * pi * c * c * m * ms * (m * m + ms * ms - 2.0);
  if (denom <= kSingularThreshold)
    throw SingularInformation("angle information vanished in the closed form");
  const double crb = 6.0 * cfg.noise_power / denom;
  return {crb, std::sqrt(crb), CrbMethod::closed_form};
}

}  // namespace isac
