#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "isac/config.hpp"
#include "isac/errors.hpp"
#include "isac/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitRuntimeError = 3;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::istringstream in(s);
  for (std::string item; std::getline(in, item, sep);) parts.push_back(item);
  return parts;
}

isac::SweepAxis parse_sweep(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 5)
    throw isac::InvalidValue("sweep", "expected key:start:stop:points:scale");
  isac::SweepAxis axis;
  axis.key = parts[0];
  try {
    axis.start = std::stod(parts[1]);
    axis.stop = std::stod(parts[2]);
    axis.points = std::stoi(parts[3]);
  } catch (const std::exception&) {
    throw isac::InvalidValue("sweep", "non-numeric axis bounds in '" + text + "'");
  }
  if (parts[4] == "linear")
    axis.scale = isac::SweepAxis::Scale::linear;
  else if (parts[4] == "log")
    axis.scale = isac::SweepAxis::Scale::log;
  else if (parts[4] == "doubling")
    axis.scale = isac::SweepAxis::Scale::doubling;
  else
    throw isac::InvalidValue("sweep", "scale must be linear, log, or doubling");
  return axis;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw isac::InvalidValue(path, "cannot open scenario file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IRS-aided mmWave ISAC beam-scanning simulator"};
  app.require_subcommand(1);

  std::string config_path, out_dir, sweep_text, theta_set_text;
  std::vector<std::string> overrides;
  unsigned long long seed = 0;
  long long trials = 0;
  int workers = 1;
  bool seed_given = false, trials_given = false, dump_errors = false;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Scenario file")->required();
    sub->add_option("--out", out_dir, "Output directory")->required();
    sub->add_option("--seed", seed, "Override rng_seed")->each([&](const std::string&) {
      seed_given = true;
    });
    sub->add_option("--trials", trials, "Override mc_trials")->each([&](const std::string&) {
      trials_given = true;
    });
    sub->add_option("--workers", workers, "Monte Carlo worker threads");
    sub->add_option("--set", overrides, "Override a scenario key (key=value)");
  };

  CLI::App* fig3 = app.add_subcommand("fig3", "RMSE and RCRB versus transmit power");
  CLI::App* fig4 = app.add_subcommand("fig4", "Achievable rate and RCRB versus scan time");
  CLI::App* fig5 = app.add_subcommand("fig5", "STAS and OTAS rates versus RCRB");
  CLI::App* sweep = app.add_subcommand("sweep", "Generic one-axis sweep");
  for (CLI::App* sub : {fig3, fig4, fig5, sweep}) add_common(sub);
  fig3->add_option("--theta-set", theta_set_text, "Comma-separated target angles [deg]");
  fig3->add_flag("--dump-errors", dump_errors, "Write per-trial error CSVs");
  sweep->add_option("--sweep", sweep_text, "Axis as key:start:stop:points:scale")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    isac::ExperimentSpec spec;
    spec.config_path = config_path;
    spec.output_dir = out_dir;
    spec.workers = workers;
    spec.dump_errors = dump_errors;

    spec.raw_keys = isac::parse_key_values(read_file(config_path));
    if (seed_given) {
      spec.raw_keys["rng_seed"] = std::to_string(seed);
      spec.overrides.push_back("rng_seed=" + std::to_string(seed));
    }
    if (trials_given) {
      spec.raw_keys["mc_trials"] = std::to_string(trials);
      spec.overrides.push_back("mc_trials=" + std::to_string(trials));
    }
    for (const std::string& kv : overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw isac::InvalidValue(kv, "expected key=value");
      const std::string key = kv.substr(0, eq);
      if (!isac::is_config_key(key)) throw isac::InvalidValue(key, "unknown key");
      spec.raw_keys[key] = kv.substr(eq + 1);
      spec.overrides.push_back(kv);
    }
    spec.config = isac::build_config(spec.raw_keys);

    if (fig3->parsed()) {
      spec.figure = isac::ExperimentSpec::Figure::fig3;
      if (!theta_set_text.empty())
        for (const std::string& t : split(theta_set_text, ','))
          spec.theta_set_deg.push_back(std::stod(t));
    } else if (fig4->parsed()) {
      spec.figure = isac::ExperimentSpec::Figure::fig4;
    } else if (fig5->parsed()) {
      spec.figure = isac::ExperimentSpec::Figure::fig5;
    } else {
      spec.figure = isac::ExperimentSpec::Figure::custom_sweep;
      spec.sweep = parse_sweep(sweep_text);
      if (!isac::is_config_key(spec.sweep->key))
        throw isac::UnknownSweepKey(spec.sweep->key);
    }

    const std::string csv = isac::run_experiment(spec);
    std::cout << csv << '\n';
    return kExitOk;
  } catch (const isac::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}
