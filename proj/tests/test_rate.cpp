#include <doctest.h>

#include <cmath>
#include <numbers>

#include "isac/beam_training.hpp"
#include "isac/channel.hpp"
#include "isac/errors.hpp"
#include "isac/rate.hpp"
#include "test_support.hpp"

using namespace isac;
using std::numbers::pi;

TEST_CASE("rate vanishes when scanning consumes the whole coherence block") {
  const SystemConfig cfg = test::reference_config();
  CHECK(stas_rate(cfg, 0.0, 1000.0) == 0.0);
  CHECK(otas_rate(cfg, 0.0, 500.0, 500.0) == 0.0);
}

TEST_CASE("reference scenario aligned rate: frozen regression value") {
  const SystemConfig cfg = test::reference_config();

  // Independent evaluation from first principles, kept apart from the
  // library's code path.
  const double lambda = 299792458.0 / 28e9;
  const double ag2 = std::pow(lambda / (4 * pi * 30.0), 2);
  const double ah2 = std::pow(lambda / (4 * pi * 10.0), 2);
  const double snr = 64 * 0.1 * ag2 * ah2 / 1e-15 * 64.0 * 64.0;
  const double oracle = (1000.0 - 64.0) / 1000.0 * std::log2(1.0 + snr);

  const double lib = stas_rate(cfg, 0.0, 64.0);
  CHECK(lib == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(lib == doctest::Approx(6.806090206434595).epsilon(1e-12));
}

TEST_CASE("rate falls to zero with transmit power") {
  SystemConfig cfg = test::reference_config();
  double prev = stas_rate(cfg, 0.0, 64.0);
  for (double p : {1e-2, 1e-4, 1e-8, 1e-12}) {
    cfg.tx_power = p;
    const double r = stas_rate(cfg, 0.0, 64.0);
    CHECK(r < prev);
    prev = r;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("orthogonal protocol degenerates to the simultaneous one at tau_s = 0") {
  const SystemConfig cfg = test::reference_config();
  for (double delta : {0.0, 0.005, 1.0 / 64}) {
    CHECK(otas_rate(cfg, delta, 64.0, 0.0) ==
          doctest::Approx(stas_rate(cfg, delta, 64.0)).epsilon(1e-15));
  }
}

TEST_CASE("orthogonal protocol pays exactly the extra scanning prefactor") {
  const SystemConfig cfg = test::reference_config();
  const double ratio = otas_rate(cfg, 0.003, 64.0, 64.0) / stas_rate(cfg, 0.003, 64.0);
  CHECK(ratio == doctest::Approx(872.0 / 936.0).epsilon(1e-12));
}

TEST_CASE("durations beyond the coherence time overflow") {
  const SystemConfig cfg = test::reference_config();
  CHECK_THROWS_AS(otas_rate(cfg, 0.0, 600.0, 600.0), DurationOverflow);
  CHECK_THROWS_AS(stas_rate(cfg, 0.0, 1200.0), InvalidValue);
}

TEST_CASE("single-element reflect array makes the average trivial") {
  // gain_ratio(delta, 1) == 1 for every delta, so averaging changes nothing
  SystemConfig cfg = test::reference_config();
  cfg.n_res = 1;
  for (int l : {1, 64}) {
    const double tau = double(cfg.symbols_per_beam) * l;
    CHECK(average_rate_over_delta(cfg, l) ==
          doctest::Approx(stas_rate(cfg, 0.37 / l, tau)).epsilon(1e-12));
  }
}

TEST_CASE("delta-averaged rate is bracketed by the endpoint rates") {
  const SystemConfig cfg = test::reference_config();
  const double avg = average_rate_over_delta(cfg, 64);
  CHECK(avg > stas_rate(cfg, 1.0 / 64, 64.0));
  CHECK(avg < stas_rate(cfg, 0.0, 64.0));
}

TEST_CASE("quadrature agrees with a brute-force trapezoid to 1e-8") {
  const SystemConfig cfg = test::reference_config();
  for (int l : {64, 128}) {
    const int n = 1000000;
    const double width = 1.0 / l;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double delta = width * i / n;
      const double w = (i == 0 || i == n) ? 0.5 : 1.0;
      acc += w * stas_rate(cfg, delta, double(cfg.symbols_per_beam) * l);
    }
    const double trapezoid = acc / n;  // l * integral, with l * (width/n) = 1/n
    CHECK(average_rate_over_delta(cfg, l) ==
          doctest::Approx(trapezoid).epsilon(1e-8));
  }
}

TEST_CASE("quadrature order doubling leaves the average unchanged") {
  const SystemConfig cfg = test::reference_config();
  for (int l : {64, 256}) {
    const double a = average_rate_over_delta(cfg, l, 64);
    const double b = average_rate_over_delta(cfg, l, 128);
    CHECK(a == doctest::Approx(b).epsilon(1e-8));
  }
}

TEST_CASE("aligned rate strictly decreases as scanning grows") {
  const SystemConfig cfg = test::reference_config();
  double prev = 1e300;
  for (int l : {64, 128, 256, 512}) {
    const double r = stas_rate(cfg, 0.0, double(cfg.symbols_per_beam) * l);
    CHECK(r < prev);
    prev = r;
  }
}

TEST_CASE("simultaneous protocol dominates whenever sensing takes extra time") {
  const SystemConfig cfg = test::reference_config();
  for (double tau : {64.0, 128.0, 400.0})
    for (double tau_s : {1.0, 64.0, 300.0})
      CHECK(stas_rate(cfg, 0.004, tau) > otas_rate(cfg, 0.004, tau, tau_s));
}

TEST_CASE("averages of both protocols keep the exact prefactor ratio") {
  const SystemConfig cfg = test::reference_config();
  for (int l : {64, 128, 256}) {
    const double tau = double(cfg.symbols_per_beam) * l;
    const double stas = average_rate_over_delta(cfg, l);
    const double otas = average_otas_rate_over_delta(cfg, l, tau);
    CHECK(stas / otas ==
          doctest::Approx((1000.0 - tau) / (1000.0 - 2 * tau)).epsilon(1e-12));
  }
}
