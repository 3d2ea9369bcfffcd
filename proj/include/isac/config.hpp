#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace isac {

/// All physical and protocol parameters of one scenario, in linear SI units
/// (watts, hertz, meters, radians, square meters). Immutable by convention
/// after construction; safe to share read-only across worker threads.
struct SystemConfig {
  int n_bs_antennas = 0;      // N, BS transmit antennas
  int n_res = 0;              // M, IRS reflecting elements
  int n_ses = 0;              // M_s, IRS sensing elements
  int codebook_size = 0;      // L, scanning beams
  int symbols_per_beam = 0;   // K
  double tx_power = 0.0;      // P_t [W]
  double noise_power = 0.0;   // sigma^2 [W]
  double carrier_freq = 0.0;  // f_c [Hz]
  long long coherence_time = 0;   // T [symbols]
  long long otas_sense_time = 0;  // tau_s [symbols]
  double d_bs_irs = 0.0;      // [m]
  double d_irs_user = 0.0;    // [m]
  double d_irs_target = 0.0;  // [m]
  double theta_bi = 0.0;      // AoA at the IRS from the BS [rad]
  double vartheta_bi = 0.0;   // AoD at the BS [rad]
  double theta_it = 0.0;      // IRS-target angle [rad]
  double theta_iu = 0.0;      // IRS-user angle [rad]
  double rcs = 0.0;           // kappa [m^2]
  std::uint64_t rng_seed = 0;
  long long mc_trials = 0;

  /// Beam scanning duration tau = K * L, always derived.
  long long scan_time() const {
    return static_cast<long long>(symbols_per_beam) * codebook_size;
  }

  double wavelength() const;

  /// Throws InvariantViolation naming the offending key.
  void validate() const;
};

/// Flat `key = value` document, '#' comments, unknown keys rejected.
using KeyValueMap = std::map<std::string, std::string>;

/// Tokenizes a scenario document. Throws InvalidValue on malformed lines or
/// duplicate/unknown keys. Does not validate values.
KeyValueMap parse_key_values(std::string_view text);

/// Builds a validated SystemConfig from a tokenized document. dB-form inputs
/// are converted to linear units here; degrees to radians.
SystemConfig build_config(const KeyValueMap& kv);

/// parse_key_values + build_config.
SystemConfig parse_config(std::string_view text);

SystemConfig parse_config_file(const std::string& path);

/// Serializes a config back to the scenario-file grammar (resolved values,
/// one `key = value` per line, deterministic key order).
std::string serialize_config(const SystemConfig& cfg);

/// True for keys accepted by the scenario-file grammar.
bool is_config_key(const std::string& key);

}  // namespace isac
