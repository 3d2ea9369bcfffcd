#include "isac/noise.hpp"

#include <cmath>
#include <numbers>

namespace isac {
namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

NoiseStream::NoiseStream(std::uint64_t seed, std::uint64_t trial, std::uint64_t tag) {
  // Fold the three key words through the mixer so nearby (seed, trial)
  // pairs land on unrelated states.
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  s ^= trial * 0xD1342543DE82EF95ULL;
  std::uint64_t b = splitmix64(s);
  s ^= tag * 0xDABA0B6EB09322E3ULL;
  std::uint64_t c = splitmix64(s);
  state_ = a ^ (b + 0x9E3779B97F4A7C15ULL) ^ (c << 1);
}

std::uint64_t NoiseStream::next_raw() { return splitmix64(state_); }

double NoiseStream::uniform_open01() {
  // 53 uniform bits mapped to (0, 1]; the offset keeps log() finite.
  return (static_cast<double>(next_raw() >> 11) + 1.0) * 0x1.0p-53;
}

std::complex<double> NoiseStream::sample(double sigma2) {
  if (sigma2 == 0.0) return {0.0, 0.0};
  const double u1 = uniform_open01();
  const double u2 = uniform_open01();
  const double r = std::sqrt(-std::log(u1) * sigma2);  // 2 * (sigma2/2) under the root
  const double phase = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(phase), r * std::sin(phase)};
}

Eigen::VectorXcd NoiseStream::vector(int n, double sigma2) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = sample(sigma2);
  return v;
}

Eigen::MatrixXcd NoiseStream::matrix(int rows, int cols, double sigma2) {
  Eigen::MatrixXcd m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = sample(sigma2);
  return m;
}

}  // namespace isac
