#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace isac {

/// Stream tags keep the user-scan and echo-scan noise independent within a
/// trial while staying reproducible.
inline constexpr std::uint64_t kUserScanTag = 1;
inline constexpr std::uint64_t kEchoScanTag = 2;

/// Deterministic circularly-symmetric complex Gaussian stream. The state is
/// a pure function of (seed, trial, tag), so trials are reproducible and
/// independent of execution order or worker count. Real and imaginary parts
/// are independent N(0, sigma2/2): Box-Muller over a splitmix64 sequence,
/// not std::normal_distribution, whose output is implementation-defined.
class NoiseStream {
 public:
  NoiseStream(std::uint64_t seed, std::uint64_t trial, std::uint64_t tag);

  /// One CN(0, sigma2) sample. sigma2 == 0 yields exactly zero and consumes
  /// no state (noise injection disabled).
  std::complex<double> sample(double sigma2);

  Eigen::VectorXcd vector(int n, double sigma2);
  Eigen::MatrixXcd matrix(int rows, int cols, double sigma2);

 private:
  double uniform_open01();  // in (0, 1]
  std::uint64_t state_;

  std::uint64_t next_raw();
};

}  // namespace isac
