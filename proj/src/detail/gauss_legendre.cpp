#include "isac/detail/gauss_legendre.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace isac::detail {

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("quadrature order must be positive");
  Eigen::VectorXd x(n), w(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
  return {x, w};
}

}  // namespace isac::detail
