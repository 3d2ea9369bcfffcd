#pragma once

#include <cmath>

namespace isac {

/// Speed of light, exact SI value. Not 3e8: keeps wavelengths reproducible.
inline constexpr double kSpeedOfLight = 299'792'458.0;

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

inline double dbsm_to_sqm(double dbsm) { return std::pow(10.0, dbsm / 10.0); }

inline double sqm_to_dbsm(double sqm) { return 10.0 * std::log10(sqm); }

/// Carrier wavelength in meters for a carrier frequency in hertz.
inline double wavelength(double carrier_freq_hz) { return kSpeedOfLight / carrier_freq_hz; }

inline double deg_to_rad(double deg) { return deg * (M_PI / 180.0); }

inline double rad_to_deg(double rad) { return rad * (180.0 / M_PI); }

}  // namespace isac
