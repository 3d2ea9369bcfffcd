#pragma once

#include <Eigen/Dense>

namespace isac {

/// Half-wavelength ULA response, centered reference point: element k
/// (0-based) has phase pi*sin(theta)*(-(m-1)/2 + k). Unit-modulus entries,
/// squared norm m. Throws InvalidAngle outside [-pi/2, pi/2].
Eigen::VectorXcd steering_vector(double theta, int m);

/// Same response parameterized by the spatial frequency psi = a difference
/// of sines, |psi| <= 2. Agrees with steering_vector(asin(psi), m) whenever
/// |psi| <= 1; well-defined beyond that, where asin is not.
Eigen::VectorXcd steering_from_psi(double psi, int m);

/// Centered element-index diagonal: -(m-1)/2, -(m-3)/2, ..., (m-1)/2.
/// Zero trace; sum of squares m*(m*m-1)/12.
Eigen::VectorXd zeta_diagonal(int m);

/// Angle derivative of steering_vector: j*pi*cos(theta) * zeta .* a(theta).
/// Squared norm pi^2 cos^2(theta) m (m^2-1) / 12.
Eigen::VectorXcd steering_derivative(double theta, int m);

}  // namespace isac
