#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "isac/detail/sha1.hpp"
#include "isac/errors.hpp"
#include "isac/experiment.hpp"
#include "test_support.hpp"

using namespace isac;
namespace fs = std::filesystem;

namespace {

struct Csv {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Csv read_csv(const std::string& path) {
  Csv csv;
  std::ifstream in(path);
  REQUIRE(in.good());
  bool header_seen = false;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      csv.comments.push_back(line);
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    if (!header_seen) {
      csv.header = cells;
      header_seen = true;
    } else {
      std::vector<double> row;
      for (const auto& c : cells) row.push_back(std::stod(c));
      csv.rows.push_back(row);
    }
  }
  return csv;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ExperimentSpec make_spec(const std::string& subdir) {
  ExperimentSpec spec;
  spec.raw_keys = parse_key_values(test::kReferenceScenario);
  spec.raw_keys["mc_trials"] = "8";  // keep the suite fast
  spec.config = build_config(spec.raw_keys);
  spec.config_path = "<inline>";
  spec.output_dir = (fs::temp_directory_path() / "isac_beamscan_tests" / subdir).string();
  fs::remove_all(spec.output_dir);
  return spec;
}

}  // namespace

TEST_CASE("sha1 matches the published test vectors") {
  CHECK(detail::sha1_hex("abc") == "a9993e364706816aba3e25717850c26c9cd0d89d");
  CHECK(detail::sha1_hex("") == "da39a3ee5e6b4b0d3255bfef95601890afd80709");
  CHECK(detail::sha1_hex("The quick brown fox jumps over the lazy dog") ==
        "2fd4e1c67a2d28fced849ee1bb76e7391b93eb12");
  // git-style blob hash of "hello\n"
  CHECK(content_hash("hello\n") == "ce013625030ba8dba906f756967f9e9ca394464a");
}

TEST_CASE("scan-time table holds the stated shapes") {
  ExperimentSpec spec = make_spec("fig4");
  spec.figure = ExperimentSpec::Figure::fig4;
  const Csv csv = read_csv(run_fig4(spec));

  REQUIRE(csv.rows.size() == 4);
  REQUIRE(csv.header == std::vector<std::string>{"tau_symbols", "rate_delta0",
                                                 "rate_deltamax", "rate_avg",
                                                 "rcrb_rad"});
  for (std::size_t i = 1; i < csv.rows.size(); ++i) {
    CHECK(csv.rows[i][0] == 2 * csv.rows[i - 1][0]);     // tau doubles
    CHECK(csv.rows[i][1] < csv.rows[i - 1][1]);          // aligned rate falls
    CHECK(csv.rows[i][4] < csv.rows[i - 1][4]);          // bound falls
    // each tau doubling halves the squared bound
    const double ratio = csv.rows[i][4] / csv.rows[i - 1][4];
    CHECK(test::rel_err(ratio * ratio, 0.5) < 1e-9);
  }
}

TEST_CASE("protocol table: dominance, exact prefactor ratio, ordering, skipped point") {
  ExperimentSpec spec = make_spec("fig5");
  spec.figure = ExperimentSpec::Figure::fig5;
  const Csv csv = read_csv(run_fig5(spec));

  // L = 512 would need 1024 scanning symbols of a 1000-symbol block
  REQUIRE(csv.rows.size() == 3);
  bool warned = false;
  for (const auto& c : csv.comments)
    if (c.find("warning") != std::string::npos && c.find("512") != std::string::npos)
      warned = true;
  CHECK(warned);

  const double t = 1000.0;
  double tau = 64.0;
  for (std::size_t i = 0; i < csv.rows.size(); ++i, tau *= 2) {
    CHECK(csv.rows[i][1] > csv.rows[i][2]);  // STAS above OTAS everywhere
    CHECK(test::rel_err(csv.rows[i][1] / csv.rows[i][2], (t - tau) / (t - 2 * tau)) <
          1e-12);
    if (i > 0) CHECK(csv.rows[i][0] < csv.rows[i - 1][0]);  // rcrb descending
  }
}

TEST_CASE("power table carries rmse, bound, and trial count per row") {
  ExperimentSpec spec = make_spec("fig3");
  spec.figure = ExperimentSpec::Figure::fig3;
  spec.dump_errors = true;
  const Csv csv = read_csv(run_fig3(spec));

  REQUIRE(csv.rows.size() == 7);
  for (const auto& row : csv.rows) {
    CHECK(row[1] == 40.0);
    CHECK(row[2] > 0.0);
    CHECK(row[3] > 0.0);
    CHECK(row[4] == 8.0);
  }
  // bound scales as 1/sqrt(power): 30 dBm = 20 dBm / sqrt(10)
  CHECK(test::rel_err(csv.rows[6][3], csv.rows[4][3] / std::sqrt(10.0)) < 1e-9);

  // per-trial dumps exist and have one line per trial plus a header
  const std::string dump =
      read_file((fs::path(spec.output_dir) / "errors_pt20dbm_theta40deg.csv").string());
  CHECK(dump.find("trial,theta_hat_rad,error_rad") == 0);
  int lines = 0;
  for (char ch : dump)
    if (ch == '\n') ++lines;
  CHECK(lines == 9);
}

TEST_CASE("sensing-array sweep lowers the bound") {
  ExperimentSpec spec = make_spec("sweep_ms");
  spec.figure = ExperimentSpec::Figure::custom_sweep;
  spec.sweep = SweepAxis{"n_ses", 4.0, 16.0, 3, SweepAxis::Scale::doubling};
  const Csv csv = read_csv(run_custom_sweep(spec));

  REQUIRE(csv.rows.size() == 3);
  CHECK(csv.rows[0][0] == 4.0);
  CHECK(csv.rows[1][0] == 8.0);
  CHECK(csv.rows[2][0] == 16.0);
  CHECK(csv.rows[1][2] < csv.rows[0][2]);
  CHECK(csv.rows[2][2] < csv.rows[1][2]);
}

TEST_CASE("target-distance sweep scales the bound by the fourth power") {
  ExperimentSpec spec = make_spec("sweep_dit");
  spec.figure = ExperimentSpec::Figure::custom_sweep;
  spec.sweep = SweepAxis{"d_irs_target_m", 5.0, 10.0, 2, SweepAxis::Scale::linear};
  const Csv csv = read_csv(run_custom_sweep(spec));
  REQUIRE(csv.rows.size() == 2);
  const double crb_ratio =
      (csv.rows[1][2] * csv.rows[1][2]) / (csv.rows[0][2] * csv.rows[0][2]);
  CHECK(test::rel_err(crb_ratio, 16.0) < 1e-9);
}

TEST_CASE("single-point sweep reproduces the defaults") {
  ExperimentSpec spec = make_spec("sweep_one");
  spec.figure = ExperimentSpec::Figure::custom_sweep;
  spec.sweep = SweepAxis{"codebook_size", 64.0, 64.0, 1, SweepAxis::Scale::linear};
  const Csv csv = read_csv(run_custom_sweep(spec));
  REQUIRE(csv.rows.size() == 1);
  CHECK(csv.rows[0][0] == 64.0);
  CHECK(csv.rows[0][7] == 8.0);  // trials recorded
}

TEST_CASE("unknown sweep keys are rejected") {
  ExperimentSpec spec = make_spec("sweep_bad");
  spec.figure = ExperimentSpec::Figure::custom_sweep;
  spec.sweep = SweepAxis{"bogus", 0.0, 1.0, 2, SweepAxis::Scale::linear};
  CHECK_THROWS_AS(run_custom_sweep(spec), UnknownSweepKey);
}

TEST_CASE("reruns produce byte-identical tables") {
  ExperimentSpec spec = make_spec("repro_a");
  spec.figure = ExperimentSpec::Figure::fig3;
  const std::string a = read_file(run_fig3(spec));
  ExperimentSpec spec_b = make_spec("repro_b");
  spec_b.figure = ExperimentSpec::Figure::fig3;
  const std::string b = read_file(run_fig3(spec_b));
  CHECK(a == b);
  CHECK(!a.empty());
}

TEST_CASE("tables carry the resolved scenario and its content hash") {
  ExperimentSpec spec = make_spec("hash");
  spec.figure = ExperimentSpec::Figure::fig4;
  const Csv csv = read_csv(run_fig4(spec));
  bool has_hash = false, has_scenario = false;
  for (const auto& c : csv.comments) {
    if (c.find("spec_hash = ") != std::string::npos) has_hash = true;
    if (c.find("n_bs_antennas = 64") != std::string::npos) has_scenario = true;
  }
  CHECK(has_hash);
  CHECK(has_scenario);
  CHECK(fs::exists(fs::path(spec.output_dir) / "run.manifest"));
}
