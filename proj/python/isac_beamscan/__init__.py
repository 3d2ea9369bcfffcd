"""IRS-aided mmWave ISAC beam-scanning simulator.

Thin Python layer over the C++ core: scenario parsing, steering/channel
construction, DFT-codebook beam training, echo simulation with maximum-
likelihood angle estimation, Cramer-Rao bounds, and achievable-rate
expressions for the simultaneous and orthogonal training-and-sensing
protocols.
"""

from ._core import (  # noqa: F401
    ChannelSet,
    Codebook,
    ConfigError,
    CrbMethod,
    CrbResult,
    EchoBlock,
    EstimationResult,
    MonteCarloResult,
    NoiseStream,
    ScanObservation,
    SimulationError,
    SystemConfig,
    ECHO_SCAN_TAG,
    USER_SCAN_TAG,
    average_otas_rate_over_delta,
    average_rate_over_delta,
    build_channels,
    crb_closed_form,
    crb_general,
    crb_simplified,
    crb_trace_form,
    dbm_to_watts,
    dbsm_to_sqm,
    dft_codebook,
    estimate_angle,
    fisher_matrix,
    gain_ratio,
    mle_objective,
    otas_rate,
    parse_config,
    parse_config_file,
    path_gain_one_way,
    path_gain_roundtrip,
    run_monte_carlo_rmse,
    serialize_config,
    simulate_echo_scan,
    simulate_user_scan,
    stas_rate,
    steering_derivative,
    steering_from_psi,
    steering_vector,
    transmit_beamformer,
    u_matrix,
    watts_to_dbm,
    wavelength,
    zeta_diagonal,
)

__version__ = "0.1.0"
