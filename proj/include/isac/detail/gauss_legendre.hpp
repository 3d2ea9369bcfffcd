#pragma once

#include <Eigen/Dense>
#include <utility>

namespace isac::detail {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1]
/// (Newton iteration on the Legendre recurrence).
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int n);

}  // namespace isac::detail
