#include "isac/config.hpp"

#include <array>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "isac/errors.hpp"
#include "isac/units.hpp"

namespace isac {
namespace {

constexpr std::array<const char*, 20> kKeys = {
    "n_bs_antennas",       "n_res",
    "n_ses",               "codebook_size",
    "symbols_per_beam",    "tx_power_dbm",
    "noise_power_dbm",     "carrier_freq_ghz",
    "coherence_time_symbols", "otas_sense_time_symbols",
    "d_bs_irs_m",          "d_irs_user_m",
    "d_irs_target_m",      "theta_bi_deg",
    "vartheta_bi_deg",     "theta_it_deg",
    "theta_iu_deg",        "rcs_dbsm",
    "rng_seed",            "mc_trials",
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

const std::string& require(const KeyValueMap& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw MissingKey(key);
  return it->second;
}

double to_double(const KeyValueMap& kv, const std::string& key) {
  const std::string& raw = require(kv, key);
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(raw.c_str(), &end);
  if (end == raw.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v))
    throw InvalidValue(key, "expected a finite number, got '" + raw + "'");
  return v;
}

long long to_integer(const KeyValueMap& kv, const std::string& key) {
  const double v = to_double(kv, key);
  if (v != std::floor(v) || std::abs(v) > 9e18)
    throw InvalidValue(key, "expected an integer, got '" + require(kv, key) + "'");
  return static_cast<long long>(v);
}

int to_positive_int(const KeyValueMap& kv, const std::string& key) {
  const long long v = to_integer(kv, key);
  if (v <= 0 || v > std::numeric_limits<int>::max())
    throw InvalidValue(key, "expected a positive integer");
  return static_cast<int>(v);
}

double to_positive(const KeyValueMap& kv, const std::string& key) {
  const double v = to_double(kv, key);
  if (v <= 0.0) throw InvalidValue(key, "expected a positive value");
  return v;
}

double to_angle_rad(const KeyValueMap& kv, const std::string& key) {
  const double deg = to_double(kv, key);
  if (!(deg > -90.0 && deg < 90.0))
    throw InvalidValue(key, "angle must lie in (-90, 90) degrees");
  return deg_to_rad(deg);
}

std::uint64_t to_u64(const KeyValueMap& kv, const std::string& key) {
  const std::string& raw = require(kv, key);
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw.c_str(), &end, 10);
  if (end == raw.c_str() || *end != '\0' || errno == ERANGE || raw.find('-') != std::string::npos)
    throw InvalidValue(key, "expected an unsigned 64-bit integer, got '" + raw + "'");
  return v;
}

}  // namespace

bool is_config_key(const std::string& key) {
  for (const char* k : kKeys)
    if (key == k) return true;
  return false;
}

KeyValueMap parse_key_values(std::string_view text) {
  KeyValueMap kv;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw InvalidValue("line " + std::to_string(line_no), "expected 'key = value'");
    const std::string key = trim(std::string_view(stripped).substr(0, eq));
    const std::string value = trim(std::string_view(stripped).substr(eq + 1));
    if (!is_config_key(key)) throw InvalidValue(key, "unknown key");
    if (kv.count(key)) throw InvalidValue(key, "duplicate key");
    if (value.empty()) throw InvalidValue(key, "empty value");
    kv[key] = value;
  }
  return kv;
}

double SystemConfig::wavelength() const { return isac::wavelength(carrier_freq); }

void SystemConfig::validate() const {
  if (n_bs_antennas <= 0) throw InvariantViolation("n_bs_antennas", "must be positive");
  if (n_res <= 0) throw InvariantViolation("n_res", "must be positive");
  if (n_ses <= 0) throw InvariantViolation("n_ses", "must be positive");
  if (symbols_per_beam <= 0) throw InvariantViolation("symbols_per_beam", "must be positive");
  if (codebook_size < n_res)
    throw InvariantViolation("codebook_size",
                             "codebook must have at least as many beams as reflecting elements");
  if (tx_power <= 0.0) throw InvariantViolation("tx_power_dbm", "transmit power must be positive");
  if (noise_power <= 0.0) throw InvariantViolation("noise_power_dbm", "noise power must be positive");
  if (carrier_freq <= 0.0) throw InvariantViolation("carrier_freq_ghz", "carrier must be positive");
  if (d_bs_irs <= 0.0) throw InvariantViolation("d_bs_irs_m", "distance must be positive");
  if (d_irs_user <= 0.0) throw InvariantViolation("d_irs_user_m", "distance must be positive");
  if (d_irs_target <= 0.0) throw InvariantViolation("d_irs_target_m", "distance must be positive");
  if (rcs <= 0.0) throw InvariantViolation("rcs_dbsm", "radar cross section must be positive");
  if (mc_trials <= 0) throw InvariantViolation("mc_trials", "must be positive");
  if (otas_sense_time < 0) throw InvariantViolation("otas_sense_time_symbols", "must be nonnegative");
  const double half_pi = M_PI / 2.0;
  for (const auto& [name, value] :
       {std::pair<const char*, double>{"theta_bi_deg", theta_bi},
        {"vartheta_bi_deg", vartheta_bi},
        {"theta_it_deg", theta_it},
        {"theta_iu_deg", theta_iu}}) {
    if (!(value > -half_pi && value < half_pi))
      throw InvariantViolation(name, "angle must lie strictly inside (-pi/2, pi/2)");
  }
  if (scan_time() + otas_sense_time >= coherence_time)
    throw InvariantViolation("coherence_time_symbols",
                             "scan time plus sensing time must be shorter than the coherence time");
}

SystemConfig build_config(const KeyValueMap& kv) {
  SystemConfig cfg;
  cfg.n_bs_antennas = to_positive_int(kv, "n_bs_antennas");
  cfg.n_res = to_positive_int(kv, "n_res");
  cfg.n_ses = to_positive_int(kv, "n_ses");
  cfg.codebook_size = to_positive_int(kv, "codebook_size");
  cfg.symbols_per_beam = to_positive_int(kv, "symbols_per_beam");
  cfg.tx_power = dbm_to_watts(to_double(kv, "tx_power_dbm"));
  cfg.noise_power = dbm_to_watts(to_double(kv, "noise_power_dbm"));
  cfg.carrier_freq = to_positive(kv, "carrier_freq_ghz") * 1e9;
  cfg.coherence_time = to_integer(kv, "coherence_time_symbols");
  cfg.d_bs_irs = to_positive(kv, "d_bs_irs_m");
  cfg.d_irs_user = to_positive(kv, "d_irs_user_m");
  cfg.d_irs_target = to_positive(kv, "d_irs_target_m");
  cfg.theta_bi = to_angle_rad(kv, "theta_bi_deg");
  cfg.vartheta_bi = kv.count("vartheta_bi_deg") ? to_angle_rad(kv, "vartheta_bi_deg") : 0.0;
  cfg.theta_it = to_angle_rad(kv, "theta_it_deg");
  cfg.theta_iu = to_angle_rad(kv, "theta_iu_deg");
  cfg.rcs = dbsm_to_sqm(to_double(kv, "rcs_dbsm"));
  cfg.rng_seed = to_u64(kv, "rng_seed");
  cfg.mc_trials = to_integer(kv, "mc_trials");
  cfg.otas_sense_time =
      kv.count("otas_sense_time_symbols") ? to_integer(kv, "otas_sense_time_symbols") : cfg.scan_time();
  cfg.validate();
  return cfg;
}

SystemConfig parse_config(std::string_view text) { return build_config(parse_key_values(text)); }

SystemConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidValue(path, "cannot open scenario file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const SystemConfig& cfg) {
  std::ostringstream out;
  out.precision(15);
  out << "n_bs_antennas = " << cfg.n_bs_antennas << '\n'
      << "n_res = " << cfg.n_res << '\n'
      << "n_ses = " << cfg.n_ses << '\n'
      << "codebook_size = " << cfg.codebook_size << '\n'
      << "symbols_per_beam = " << cfg.symbols_per_beam << '\n'
      << "tx_power_dbm = " << watts_to_dbm(cfg.tx_power) << '\n'
      << "noise_power_dbm = " << watts_to_dbm(cfg.noise_power) << '\n'
      << "carrier_freq_ghz = " << cfg.carrier_freq / 1e9 << '\n'
      << "coherence_time_symbols = " << cfg.coherence_time << '\n'
      << "otas_sense_time_symbols = " << cfg.otas_sense_time << '\n'
      << "d_bs_irs_m = " << cfg.d_bs_irs << '\n'
      << "d_irs_user_m = " << cfg.d_irs_user << '\n'
      << "d_irs_target_m = " << cfg.d_irs_target << '\n'
      << "theta_bi_deg = " << rad_to_deg(cfg.theta_bi) << '\n'
      << "vartheta_bi_deg = " << rad_to_deg(cfg.vartheta_bi) << '\n'
      << "theta_it_deg = " << rad_to_deg(cfg.theta_it) << '\n'
      << "theta_iu_deg = " << rad_to_deg(cfg.theta_iu) << '\n'
      << "rcs_dbsm = " << sqm_to_dbsm(cfg.rcs) << '\n'
      << "rng_seed = " << cfg.rng_seed << '\n'
      << "mc_trials = " << cfg.mc_trials << '\n';
  return out.str();
}

}  // namespace isac
