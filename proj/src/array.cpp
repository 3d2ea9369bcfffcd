#include "isac/array.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "isac/errors.hpp"

namespace isac {

using std::numbers::pi;

Eigen::VectorXcd steering_from_psi(double psi, int m) {
  Eigen::VectorXcd v(m);
  const double base = -(m - 1) / 2.0;
  for (int k = 0; k < m; ++k) v[k] = std::polar(1.0, pi * psi * (base + k));
  return v;
}

Eigen::VectorXcd steering_vector(double theta, int m) {
  if (!(theta >= -pi / 2 && theta <= pi / 2))
    throw InvalidAngle("steering angle outside [-pi/2, pi/2]");
  return steering_from_psi(std::sin(theta), m);
}

Eigen::VectorXd zeta_diagonal(int m) {
  Eigen::VectorXd z(m);
  for (int k = 0; k < m; ++k) z[k] = -(m - 1) / 2.0 + k;
  return z;
}

Eigen::VectorXcd steering_derivative(double theta, int m) {
  const std::complex<double> scale(0.0, pi * std::cos(theta));
  return scale * zeta_diagonal(m).cast<std::complex<double>>().cwiseProduct(
                     steering_vector(theta, m));
}

}  // namespace isac
