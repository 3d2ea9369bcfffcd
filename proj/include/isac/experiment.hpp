#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isac/config.hpp"

namespace isac {

/// One-axis sweep definition over a scenario-file key.
struct SweepAxis {
  enum class Scale { linear, log, doubling };
  std::string key;
  double start = 0.0;
  double stop = 0.0;
  int points = 0;
  Scale scale = Scale::linear;

  std::vector<double> values() const;
};

struct ExperimentSpec {
  enum class Figure { fig3, fig4, fig5, custom_sweep };
  Figure figure = Figure::custom_sweep;
  std::string config_path;
  SystemConfig config;  // resolved, overrides already applied
  KeyValueMap raw_keys;  // tokenized file + overrides, for per-point rebuilds
  std::string output_dir;
  int workers = 1;
  std::vector<std::string> overrides;        // literal key=value strings
  std::vector<double> theta_set_deg = {};    // fig3 curves; empty -> config angle
  std::optional<SweepAxis> sweep;            // custom_sweep only
  bool dump_errors = false;                  // per-trial CSVs alongside fig3
};

/// Writes rmse/rcrb rows over the transmit-power grid {0,5,...,30} dBm for
/// each angle in theta_set. Rows are flushed as they complete. Returns the
/// CSV path.
std::string run_fig3(const ExperimentSpec& spec);

/// Closed-form rate and rcrb rows over the codebook doubling grid
/// {M, 2M, 4M, 8M} (tau = K*L).
std::string run_fig4(const ExperimentSpec& spec);

/// STAS vs OTAS delta-averaged rates against rcrb over the same doubling
/// grid with tau_s = tau; sweep points whose durations exceed the coherence
/// time are skipped with a warning row.
std::string run_fig5(const ExperimentSpec& spec);

/// Generic one-axis sweep emitting every metric per row.
std::string run_custom_sweep(const ExperimentSpec& spec);

/// Dispatch on spec.figure.
std::string run_experiment(const ExperimentSpec& spec);

/// Git-style content hash (SHA-1 over a "blob <len>\0" header plus payload).
std::string content_hash(const std::string& payload);

}  // namespace isac
