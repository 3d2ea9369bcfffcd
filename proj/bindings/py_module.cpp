#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isac/array.hpp"
#include "isac/beam_training.hpp"
#include "isac/channel.hpp"
#include "isac/config.hpp"
#include "isac/crb.hpp"
#include "isac/errors.hpp"
#include "isac/experiment.hpp"
#include "isac/noise.hpp"
#include "isac/rate.hpp"
#include "isac/sensing.hpp"
#include "isac/units.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "IRS-aided mmWave ISAC beam-scanning simulator (C++ core)";

  // Base first: translators run newest-first, so ConfigError wins for
  // configuration failures.
  py::register_exception<isac::Error>(m, "SimulationError", PyExc_RuntimeError);
  py::register_exception<isac::ConfigError>(m, "ConfigError", PyExc_ValueError);

  // units
  m.def("dbm_to_watts", &isac::dbm_to_watts, py::arg("dbm"));
  m.def("watts_to_dbm", &isac::watts_to_dbm, py::arg("watts"));
  m.def("dbsm_to_sqm", &isac::dbsm_to_sqm, py::arg("dbsm"));
  m.def("wavelength", &isac::wavelength, py::arg("carrier_freq_hz"));

  // config
  py::class_<isac::SystemConfig>(m, "SystemConfig")
      .def(py::init<>())
      .def_readwrite("n_bs_antennas", &isac::SystemConfig::n_bs_antennas)
      .def_readwrite("n_res", &isac::SystemConfig::n_res)
      .def_readwrite("n_ses", &isac::SystemConfig::n_ses)
      .def_readwrite("codebook_size", &isac::SystemConfig::codebook_size)
      .def_readwrite("symbols_per_beam", &isac::SystemConfig::symbols_per_beam)
      .def_readwrite("tx_power", &isac::SystemConfig::tx_power)
      .def_readwrite("noise_power", &isac::SystemConfig::noise_power)
      .def_readwrite("carrier_freq", &isac::SystemConfig::carrier_freq)
      .def_readwrite("coherence_time", &isac::SystemConfig::coherence_time)
      .def_readwrite("otas_sense_time", &isac::SystemConfig::otas_sense_time)
      .def_readwrite("d_bs_irs", &isac::SystemConfig::d_bs_irs)
      .def_readwrite("d_irs_user", &isac::SystemConfig::d_irs_user)
      .def_readwrite("d_irs_target", &isac::SystemConfig::d_irs_target)
      .def_readwrite("theta_bi", &isac::SystemConfig::theta_bi)
      .def_readwrite("vartheta_bi", &isac::SystemConfig::vartheta_bi)
      .def_readwrite("theta_it", &isac::SystemConfig::theta_it)
      .def_readwrite("theta_iu", &isac::SystemConfig::theta_iu)
      .def_readwrite("rcs", &isac::SystemConfig::rcs)
      .def_readwrite("rng_seed", &isac::SystemConfig::rng_seed)
      .def_readwrite("mc_trials", &isac::SystemConfig::mc_trials)
      .def("scan_time", &isac::SystemConfig::scan_time)
      .def("wavelength", &isac::SystemConfig::wavelength)
      .def("validate", &isac::SystemConfig::validate);
  m.def("parse_config", [](const std::string& text) { return isac::parse_config(text); },
        py::arg("text"));
  m.def("parse_config_file", &isac::parse_config_file, py::arg("path"));
  m.def("serialize_config", &isac::serialize_config, py::arg("config"));

  // array geometry
  m.def("steering_vector", &isac::steering_vector, py::arg("theta"), py::arg("m"));
  m.def("steering_from_psi", &isac::steering_from_psi, py::arg("psi"), py::arg("m"));
  m.def("zeta_diagonal", &isac::zeta_diagonal, py::arg("m"));
  m.def("steering_derivative", &isac::steering_derivative, py::arg("theta"), py::arg("m"));

  // channels
  m.def("path_gain_one_way", &isac::path_gain_one_way, py::arg("distance"), py::arg("lambda_"));
  m.def("path_gain_roundtrip", &isac::path_gain_roundtrip, py::arg("distance"),
        py::arg("lambda_"), py::arg("kappa"));
  py::class_<isac::ChannelSet>(m, "ChannelSet")
      .def_readonly("g", &isac::ChannelSet::g)
      .def_readonly("h_u", &isac::ChannelSet::h_u)
      .def_readonly("h_t", &isac::ChannelSet::h_t)
      .def_readonly("alpha_g", &isac::ChannelSet::alpha_g)
      .def_readonly("alpha_h", &isac::ChannelSet::alpha_h)
      .def_readonly("alpha_s", &isac::ChannelSet::alpha_s)
      .def_readonly("psi_iu", &isac::ChannelSet::psi_iu)
      .def_readonly("psi_it", &isac::ChannelSet::psi_it);
  m.def("build_channels", &isac::build_channels, py::arg("config"));
  m.def("transmit_beamformer", &isac::transmit_beamformer, py::arg("config"));

  // noise
  py::class_<isac::NoiseStream>(m, "NoiseStream")
      .def(py::init<std::uint64_t, std::uint64_t, std::uint64_t>(), py::arg("seed"),
           py::arg("trial"), py::arg("tag"))
      .def("sample", &isac::NoiseStream::sample, py::arg("sigma2"))
      .def("vector", &isac::NoiseStream::vector, py::arg("n"), py::arg("sigma2"))
      .def("matrix", &isac::NoiseStream::matrix, py::arg("rows"), py::arg("cols"),
           py::arg("sigma2"));
  m.attr("USER_SCAN_TAG") = isac::kUserScanTag;
  m.attr("ECHO_SCAN_TAG") = isac::kEchoScanTag;

  // beam training
  py::class_<isac::Codebook>(m, "Codebook")
      .def_readonly("beams", &isac::Codebook::beams)
      .def_readonly("psi_grid", &isac::Codebook::psi_grid);
  m.def("dft_codebook", &isac::dft_codebook, py::arg("m"), py::arg("l"));
  py::class_<isac::ScanObservation>(m, "ScanObservation")
      .def_readonly("y_user", &isac::ScanObservation::y_user)
      .def_readonly("best_index", &isac::ScanObservation::best_index)
      .def_readonly("delta", &isac::ScanObservation::delta);
  m.def("simulate_user_scan", &isac::simulate_user_scan, py::arg("channels"),
        py::arg("codebook"), py::arg("config"), py::arg("noise"));
  m.def("gain_ratio", &isac::gain_ratio, py::arg("delta"), py::arg("m"));

  // rates
  m.def("stas_rate", &isac::stas_rate, py::arg("config"), py::arg("delta"), py::arg("tau"));
  m.def("otas_rate", &isac::otas_rate, py::arg("config"), py::arg("delta"), py::arg("tau"),
        py::arg("tau_s"));
  m.def("average_rate_over_delta", &isac::average_rate_over_delta, py::arg("config"),
        py::arg("l"), py::arg("quad_order") = 64);
  m.def("average_otas_rate_over_delta", &isac::average_otas_rate_over_delta,
        py::arg("config"), py::arg("l"), py::arg("tau_s"), py::arg("quad_order") = 64);

  // sensing
  py::class_<isac::EchoBlock>(m, "EchoBlock")
      .def(py::init<>())
      .def_readwrite("y", &isac::EchoBlock::y)
      .def_readwrite("x", &isac::EchoBlock::x)
      .def_readwrite("sigma2", &isac::EchoBlock::sigma2)
      .def_readwrite("sin_theta_bi", &isac::EchoBlock::sin_theta_bi);
  m.def("simulate_echo_scan", &isac::simulate_echo_scan, py::arg("channels"),
        py::arg("codebook"), py::arg("config"), py::arg("noise"));
  m.def("mle_objective", &isac::mle_objective, py::arg("theta"), py::arg("block"));
  py::class_<isac::EstimationResult>(m, "EstimationResult")
      .def_readonly("theta_hat", &isac::EstimationResult::theta_hat)
      .def_readonly("alpha_hat", &isac::EstimationResult::alpha_hat)
      .def_readonly("objective", &isac::EstimationResult::objective)
      .def_readonly("grid_points", &isac::EstimationResult::grid_points)
      .def_readonly("refined", &isac::EstimationResult::refined);
  m.def("estimate_angle", &isac::estimate_angle, py::arg("block"),
        py::arg("grid_points") = isac::kDefaultGridPoints);
  py::class_<isac::MonteCarloResult>(m, "MonteCarloResult")
      .def_readonly("rmse", &isac::MonteCarloResult::rmse)
      .def_readonly("trials", &isac::MonteCarloResult::trials)
      .def_readonly("errors", &isac::MonteCarloResult::errors)
      .def_readonly("theta_hats", &isac::MonteCarloResult::theta_hats);
  m.def("run_monte_carlo_rmse", &isac::run_monte_carlo_rmse, py::arg("config"),
        py::arg("trials"), py::arg("workers") = 1,
        py::arg("grid_points") = isac::kDefaultGridPoints,
        py::call_guard<py::gil_scoped_release>());

  // crb
  m.def(
      "u_matrix",
      [](double theta, const Eigen::MatrixXcd& x, int n_ses, double sin_theta_bi) {
        const isac::UMatrix um = isac::u_matrix(theta, x, n_ses, sin_theta_bi);
        return py::make_tuple(um.u, um.u_dot);
      },
      py::arg("theta"), py::arg("x"), py::arg("n_ses"), py::arg("sin_theta_bi"));
  m.def("fisher_matrix", &isac::fisher_matrix, py::arg("theta"), py::arg("alpha_s"),
        py::arg("x"), py::arg("sigma2"), py::arg("n_ses"), py::arg("sin_theta_bi"));
  py::enum_<isac::CrbMethod>(m, "CrbMethod")
      .value("general", isac::CrbMethod::general)
      .value("simplified", isac::CrbMethod::simplified)
      .value("closed_form", isac::CrbMethod::closed_form);
  py::class_<isac::CrbResult>(m, "CrbResult")
      .def_readonly("crb", &isac::CrbResult::crb)
      .def_readonly("rcrb", &isac::CrbResult::rcrb)
      .def_readonly("method", &isac::CrbResult::method);
  m.def("crb_general", &isac::crb_general, py::arg("fim"));
  m.def("crb_trace_form", &isac::crb_trace_form, py::arg("theta"), py::arg("alpha_s"),
        py::arg("x"), py::arg("sigma2"), py::arg("n_ses"), py::arg("sin_theta_bi"));
  m.def("crb_simplified", &isac::crb_simplified, py::arg("config"), py::arg("theta"));
  m.def("crb_closed_form", &isac::crb_closed_form, py::arg("config"), py::arg("theta"));
}
