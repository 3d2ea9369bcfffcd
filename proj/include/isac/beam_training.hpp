#pragma once

#include <Eigen/Dense>

#include "isac/channel.hpp"
#include "isac/config.hpp"
#include "isac/noise.hpp"

namespace isac {

/// DFT scanning codebook: column i (0-based) is the unit-modulus beam at
/// spatial frequency psi_grid[i] = -1 + (2(i+1)-1)/L. For L >= M the beam
/// outer products sum to L * I_M.
struct Codebook {
  Eigen::MatrixXcd beams;    // M x L
  Eigen::VectorXd psi_grid;  // length L
};

/// Throws InvalidSize if l < m.
Codebook dft_codebook(int m, int l);

/// Downlink reception at the user over one full sweep.
struct ScanObservation {
  Eigen::VectorXcd y_user;  // L*K samples, beam-major
  int best_index = 0;       // 0-based beam index maximizing the energy metric
  double delta = 0.0;       // |psi_iu - psi_grid[best_index]|
};

/// One beam-scanning phase at the user: K unit symbols per beam with
/// independent noise, energy metric summed over the K samples, argmax ties
/// broken toward the lowest index. delta is computed from the simulator-side
/// ground truth psi_iu.
ScanObservation simulate_user_scan(const ChannelSet& ch, const Codebook& cb,
                                   const SystemConfig& cfg, NoiseStream& noise);

/// Array gain ratio |sin(pi m delta / 2) / sin(pi delta / 2)|, with the
/// removable singularity at delta = 0 taken as m. Peaks at m, first zero at
/// 2/m, monotone decreasing in between.
double gain_ratio(double delta, int m);

}  // namespace isac
