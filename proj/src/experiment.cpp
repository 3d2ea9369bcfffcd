#include "isac/experiment.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "isac/crb.hpp"
#include "isac/detail/sha1.hpp"
#include "isac/errors.hpp"
#include "isac/rate.hpp"
#include "isac/sensing.hpp"
#include "isac/units.hpp"

namespace fs = std::filesystem;

namespace isac {
namespace {

// 12 significant digits, '.' decimal separator, locale-independent.
std::string fmt(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string fmt(long long v) { return std::to_string(v); }

class CsvWriter {
 public:
  CsvWriter(const fs::path& path, const ExperimentSpec& spec,
            const std::string& experiment, const std::string& header) {
    out_.open(path);
    if (!out_) throw Error("cannot open output file " + path.string());
    const std::string resolved = serialize_config(spec.config);
    out_ << "# isac-beamscan " << experiment << '\n';
    out_ << "# spec_hash = " << content_hash(resolved + describe(spec)) << '\n';
    for (const std::string& line : split_lines(resolved)) out_ << "# " << line << '\n';
    out_ << header << '\n';
    out_.flush();
  }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
    out_.flush();  // partial results survive interruption
  }

  void warning(const std::string& message) {
    out_ << "# warning: " << message << '\n';
    out_.flush();
  }

 private:
  static std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) lines.push_back(line);
    return lines;
  }

  static std::string describe(const ExperimentSpec& spec) {
    std::ostringstream os;
    os << "workers=" << spec.workers;
    for (const auto& o : spec.overrides) os << " set:" << o;
    if (spec.sweep)
      os << " sweep:" << spec.sweep->key << ':' << spec.sweep->start << ':'
         << spec.sweep->stop << ':' << spec.sweep->points;
    for (double t : spec.theta_set_deg) os << " theta:" << t;
    return os.str();
  }

  std::ofstream out_;
};

SystemConfig with_override(const KeyValueMap& raw, const std::string& key,
                           const std::string& value) {
  KeyValueMap kv = raw;
  kv[key] = value;
  return build_config(kv);
}

void write_manifest(const ExperimentSpec& spec, const std::string& experiment,
                    const std::string& csv_path) {
  std::ofstream out(fs::path(spec.output_dir) / "run.manifest");
  const std::string resolved = serialize_config(spec.config);
  out << "experiment = " << experiment << '\n'
      << "config_path = " << spec.config_path << '\n'
      << "output_csv = " << csv_path << '\n'
      << "workers = " << spec.workers << '\n'
      << "spec_hash = " << content_hash(resolved) << '\n';
  for (const auto& o : spec.overrides) out << "override = " << o << '\n';
  out << "# resolved scenario\n" << resolved;
}

std::vector<int> codebook_doubling_grid(const SystemConfig& cfg) {
  return {cfg.n_res, 2 * cfg.n_res, 4 * cfg.n_res, 8 * cfg.n_res};
}

void ensure_output_dir(const ExperimentSpec& spec) {
  std::error_code ec;
  fs::create_directories(spec.output_dir, ec);
  if (ec) throw Error("cannot create output directory " + spec.output_dir);
}

void dump_trial_errors(const ExperimentSpec& spec, const MonteCarloResult& mc,
                       double pt_dbm, double theta_deg) {
  std::ostringstream name;
  name << "errors_pt" << fmt(pt_dbm) << "dbm_theta" << fmt(theta_deg) << "deg.csv";
  std::ofstream out(fs::path(spec.output_dir) / name.str());
  out << "trial,theta_hat_rad,error_rad\n";
  for (long long t = 0; t < mc.trials; ++t)
    out << t << ',' << fmt(mc.theta_hats[static_cast<std::size_t>(t)]) << ','
        << fmt(mc.errors[static_cast<std::size_t>(t)]) << '\n';
}

}  // namespace

std::vector<double> SweepAxis::values() const {
  if (points < 1) throw InvalidValue("sweep", "need at least one sweep point");
  std::vector<double> vals;
  vals.reserve(points);
  switch (scale) {
    case Scale::linear:
      for (int i = 0; i < points; ++i)
        vals.push_back(points == 1 ? start
                                   : start + (stop - start) * i / (points - 1));
      break;
    case Scale::log: {
      if (start <= 0.0 || stop <= 0.0)
        throw InvalidValue("sweep", "log scale needs positive endpoints");
      for (int i = 0; i < points; ++i)
        vals.push_back(points == 1 ? start
                                   : start * std::pow(stop / start,
                                                      static_cast<double>(i) / (points - 1)));
      break;
    }
    case Scale::doubling:
      for (int i = 0; i < points; ++i) vals.push_back(start * std::pow(2.0, i));
      break;
  }
  return vals;
}

std::string content_hash(const std::string& payload) {
  std::string blob = "blob " + std::to_string(payload.size());
  blob.push_back('\0');
  blob += payload;
  return detail::sha1_hex(blob);
}

std::string run_fig3(const ExperimentSpec& spec) {
  ensure_output_dir(spec);
  const fs::path csv_path = fs::path(spec.output_dir) / "fig3_rmse_vs_power.csv";
  CsvWriter csv(csv_path, spec, "fig3", "pt_dbm,theta_deg,rmse_rad,rcrb_rad,trials");

  const std::vector<double> power_grid = {0, 5, 10, 15, 20, 25, 30};
  std::vector<double> thetas = spec.theta_set_deg;
  if (thetas.empty()) thetas.push_back(rad_to_deg(spec.config.theta_it));

  for (double theta_deg : thetas) {
    for (double pt_dbm : power_grid) {
      KeyValueMap kv = spec.raw_keys;
      kv["tx_power_dbm"] = fmt(pt_dbm);
      kv["theta_it_deg"] = fmt(theta_deg);
      const SystemConfig cfg = build_config(kv);
      const MonteCarloResult mc =
          run_monte_carlo_rmse(cfg, cfg.mc_trials, spec.workers);
      const CrbResult bound = crb_simplified(cfg, cfg.theta_it);
      csv.row({fmt(pt_dbm), fmt(theta_deg), fmt(mc.rmse), fmt(bound.rcrb),
               fmt(mc.trials)});
      if (spec.dump_errors) dump_trial_errors(spec, mc, pt_dbm, theta_deg);
    }
  }
  write_manifest(spec, "fig3", csv_path.string());
  return csv_path.string();
}

std::string run_fig4(const ExperimentSpec& spec) {
  ensure_output_dir(spec);
  const fs::path csv_path = fs::path(spec.output_dir) / "fig4_rate_vs_scan_time.csv";
  CsvWriter csv(csv_path, spec, "fig4",
                "tau_symbols,rate_delta0,rate_deltamax,rate_avg,rcrb_rad");

  for (int l : codebook_doubling_grid(spec.config)) {
    KeyValueMap kv = spec.raw_keys;
    kv["codebook_size"] = std::to_string(l);
    SystemConfig cfg;
    try {
      cfg = build_config(kv);
    } catch (const InvariantViolation& e) {
      csv.warning("skipping codebook_size=" + std::to_string(l) + ": " + e.what());
      continue;
    }
    const double tau = static_cast<double>(cfg.scan_time());
    csv.row({fmt(tau), fmt(stas_rate(cfg, 0.0, tau)),
             fmt(stas_rate(cfg, 1.0 / l, tau)), fmt(average_rate_over_delta(cfg, l)),
             fmt(crb_simplified(cfg, cfg.theta_it).rcrb)});
  }
  write_manifest(spec, "fig4", csv_path.string());
  return csv_path.string();
}

std::string run_fig5(const ExperimentSpec& spec) {
  ensure_output_dir(spec);
  const fs::path csv_path = fs::path(spec.output_dir) / "fig5_rate_vs_rcrb.csv";
  CsvWriter csv(csv_path, spec, "fig5", "rcrb_rad,rate_stas_avg,rate_otas_avg");

  // Larger tau gives a smaller bound, so the doubling grid already emits
  // rows sorted by rcrb descending.
  for (int l : codebook_doubling_grid(spec.config)) {
    KeyValueMap kv = spec.raw_keys;
    kv["codebook_size"] = std::to_string(l);
    kv["otas_sense_time_symbols"] =
        std::to_string(static_cast<long long>(spec.config.symbols_per_beam) * l);
    SystemConfig cfg;
    try {
      cfg = build_config(kv);
    } catch (const InvariantViolation& e) {
      csv.warning("skipping codebook_size=" + std::to_string(l) + ": " + e.what());
      continue;
    }
    const double tau = static_cast<double>(cfg.scan_time());
    try {
      const double stas = average_rate_over_delta(cfg, l);
      const double otas = average_otas_rate_over_delta(cfg, l, tau);
      csv.row({fmt(crb_simplified(cfg, cfg.theta_it).rcrb), fmt(stas), fmt(otas)});
    } catch (const DurationOverflow& e) {
      csv.warning("skipping codebook_size=" + std::to_string(l) + ": " + e.what());
    }
  }
  write_manifest(spec, "fig5", csv_path.string());
  return csv_path.string();
}

std::string run_custom_sweep(const ExperimentSpec& spec) {
  if (!spec.sweep) throw InvalidValue("sweep", "custom sweep needs an axis definition");
  if (!is_config_key(spec.sweep->key)) throw UnknownSweepKey(spec.sweep->key);
  ensure_output_dir(spec);
  const fs::path csv_path = fs::path(spec.output_dir) / "sweep.csv";
  CsvWriter csv(csv_path, spec, "sweep",
                "sweep_value,rmse_rad,rcrb_rad,rate_bpshz_delta0,rate_bpshz_deltamax,"
                "rate_bpshz_avg,rate_otas_bpshz,trials");

  for (double value : spec.sweep->values()) {
    SystemConfig cfg;
    try {
      cfg = with_override(spec.raw_keys, spec.sweep->key, fmt(value));
    } catch (const ConfigError& e) {
      csv.warning("skipping " + spec.sweep->key + "=" + fmt(value) + ": " + e.what());
      continue;
    }
    const int l = cfg.codebook_size;
    const double tau = static_cast<double>(cfg.scan_time());
    const MonteCarloResult mc = run_monte_carlo_rmse(cfg, cfg.mc_trials, spec.workers);
    double otas = std::nan("");
    try {
      otas = average_otas_rate_over_delta(cfg, l, static_cast<double>(cfg.otas_sense_time));
    } catch (const DurationOverflow&) {
      csv.warning("otas rate undefined at " + spec.sweep->key + "=" + fmt(value));
    }
    csv.row({fmt(value), fmt(mc.rmse), fmt(crb_simplified(cfg, cfg.theta_it).rcrb),
             fmt(stas_rate(cfg, 0.0, tau)), fmt(stas_rate(cfg, 1.0 / l, tau)),
             fmt(average_rate_over_delta(cfg, l)), fmt(otas), fmt(mc.trials)});
  }
  write_manifest(spec, "sweep", csv_path.string());
  return csv_path.string();
}

std::string run_experiment(const ExperimentSpec& spec) {
  switch (spec.figure) {
    case ExperimentSpec::Figure::fig3:
      return run_fig3(spec);
    case ExperimentSpec::Figure::fig4:
      return run_fig4(spec);
    case ExperimentSpec::Figure::fig5:
      return run_fig5(spec);
    case ExperimentSpec::Figure::custom_sweep:
      return run_custom_sweep(spec);
  }
  throw Error("unknown experiment kind");
}

}  // namespace isac
