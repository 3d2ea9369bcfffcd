#include <doctest.h>

#include <cmath>
#include <string>

#include "isac/config.hpp"
#include "isac/errors.hpp"
#include "isac/units.hpp"
#include "test_support.hpp"

using namespace isac;

TEST_CASE("dbm conversions hit the defining anchors") {
  CHECK(dbm_to_watts(0.0) == doctest::Approx(1e-3).epsilon(1e-14));
  CHECK(dbm_to_watts(20.0) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(test::rel_err(dbm_to_watts(-120.0), 1e-15) < 1e-14);
}

TEST_CASE("dbm round trip is exact across the operating range") {
  for (double dbm = -200.0; dbm <= 60.0; dbm += 3.7)
    CHECK(watts_to_dbm(dbm_to_watts(dbm)) == doctest::Approx(dbm).epsilon(1e-12));
}

TEST_CASE("dbsm conversion") {
  CHECK(dbsm_to_sqm(0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(dbsm_to_sqm(10.0) == doctest::Approx(10.0).epsilon(1e-14));
  // 10^0.7
  CHECK(dbsm_to_sqm(7.0) == doctest::Approx(5.011872336272722).epsilon(1e-12));
}

TEST_CASE("wavelength uses the exact speed of light") {
  CHECK(wavelength(299792458.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(wavelength(2.0 * 299792458.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(wavelength(28e9) == doctest::Approx(0.010706873500000).epsilon(1e-9));
}

TEST_CASE("wavelength is strictly decreasing in frequency") {
  double prev = wavelength(1e9);
  for (double f = 2e9; f < 100e9; f += 3.1e9) {
    const double w = wavelength(f);
    CHECK(w < prev);
    prev = w;
  }
}

TEST_CASE("reference scenario parses to the expected values") {
  const SystemConfig cfg = test::reference_config();
  CHECK(cfg.n_bs_antennas == 64);
  CHECK(cfg.n_res == 64);
  CHECK(cfg.n_ses == 8);
  CHECK(cfg.codebook_size == 64);
  CHECK(cfg.symbols_per_beam == 1);
  CHECK(cfg.coherence_time == 1000);
  CHECK(cfg.scan_time() == 64);
  CHECK(cfg.otas_sense_time == 64);
  CHECK(cfg.tx_power == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(test::rel_err(cfg.noise_power, 1e-15) < 1e-14);
  CHECK(cfg.carrier_freq == doctest::Approx(28e9).epsilon(1e-14));
  CHECK(cfg.theta_bi == doctest::Approx(deg_to_rad(-30)).epsilon(1e-15));
  CHECK(cfg.theta_it == doctest::Approx(deg_to_rad(40)).epsilon(1e-15));
  CHECK(cfg.theta_iu == 0.0);
  CHECK(cfg.rcs == doctest::Approx(5.011872336272722).epsilon(1e-12));
  CHECK(cfg.rng_seed == 1);
  CHECK(cfg.mc_trials == 1000);
}

TEST_CASE("codebook smaller than the reflect array is rejected by name") {
  std::string text(test::kReferenceScenario);
  const auto pos = text.find("codebook_size = 64");
  text.replace(pos, std::string("codebook_size = 64").size(), "codebook_size = 32");
  CHECK_THROWS_AS(parse_config(text), InvariantViolation);
  try {
    parse_config(text);
  } catch (const InvariantViolation& e) {
    CHECK(e.key() == "codebook_size");
  }
}

TEST_CASE("missing required key is reported by name") {
  std::string text(test::kReferenceScenario);
  const auto pos = text.find("rcs_dbsm = 7");
  text.replace(pos, std::string("rcs_dbsm = 7").size(), "");
  CHECK_THROWS_AS(parse_config(text), MissingKey);
  try {
    parse_config(text);
  } catch (const MissingKey& e) {
    CHECK(e.key() == "rcs_dbsm");
  }
}

TEST_CASE("unknown and malformed keys are rejected") {
  CHECK_THROWS_AS(parse_config("bogus_key = 1\n"), InvalidValue);
  CHECK_THROWS_AS(parse_config("n_res 64\n"), InvalidValue);
  std::string text(test::kReferenceScenario);
  CHECK_THROWS_AS(parse_config(text + "\nn_res = 64\n"), InvalidValue);  // duplicate
}

TEST_CASE("non-numeric and out-of-range values are rejected by name") {
  std::string text(test::kReferenceScenario);
  auto replaced = [&](const std::string& from, const std::string& to) {
    std::string t = text;
    t.replace(t.find(from), from.size(), to);
    return t;
  };
  CHECK_THROWS_AS(parse_config(replaced("n_res = 64", "n_res = sixty")), InvalidValue);
  CHECK_THROWS_AS(parse_config(replaced("n_res = 64", "n_res = -4")), InvalidValue);
  CHECK_THROWS_AS(parse_config(replaced("d_irs_user_m = 10", "d_irs_user_m = 0")), InvalidValue);
  CHECK_THROWS_AS(parse_config(replaced("theta_it_deg = 40", "theta_it_deg = 95")), InvalidValue);
}

TEST_CASE("sensing period defaults to the scan time when absent") {
  std::string text(test::kReferenceScenario);
  const std::string line = "otas_sense_time_symbols = 64";
  text.replace(text.find(line), line.size(), "");
  const SystemConfig cfg = parse_config(text);
  CHECK(cfg.otas_sense_time == cfg.scan_time());
}

TEST_CASE("durations longer than the coherence time are rejected") {
  std::string text(test::kReferenceScenario);
  const std::string line = "coherence_time_symbols = 1000";
  text.replace(text.find(line), line.size(), "coherence_time_symbols = 128");
  CHECK_THROWS_AS(parse_config(text), InvariantViolation);  // 64 + 64 not < 128
}

TEST_CASE("comments and blank lines are ignored") {
  const SystemConfig a = test::reference_config();
  std::string text(test::kReferenceScenario);
  text += "\n# trailing comment\n\n";
  const SystemConfig b = parse_config(text);
  CHECK(a.rcs == b.rcs);
  CHECK(a.theta_bi == b.theta_bi);
}

TEST_CASE("serialization round-trips through the parser") {
  const SystemConfig a = test::reference_config();
  const SystemConfig b = parse_config(serialize_config(a));
  CHECK(b.tx_power == doctest::Approx(a.tx_power).epsilon(1e-12));
  CHECK(b.noise_power == doctest::Approx(a.noise_power).epsilon(1e-12));
  CHECK(b.theta_it == doctest::Approx(a.theta_it).epsilon(1e-12));
  CHECK(b.rcs == doctest::Approx(a.rcs).epsilon(1e-12));
  CHECK(b.codebook_size == a.codebook_size);
  CHECK(b.rng_seed == a.rng_seed);
}
