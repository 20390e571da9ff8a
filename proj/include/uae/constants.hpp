#pragma once

#include <numbers>

namespace uae {

/// CODATA 2018 values in SI units. planck and boltzmann are exact by definition.
struct PhysicalConstants {
    double reduced_planck;    // J s
    double planck;            // J s
    double boltzmann;         // J/K
    double atomic_mass_unit;  // kg
    double speed_of_light;    // m/s
};

inline constexpr PhysicalConstants kSI{
    6.62607015e-34 / (2.0 * std::numbers::pi),
    6.62607015e-34,
    1.380649e-23,
    1.66053906660e-27,
    299792458.0,
};

inline constexpr double kHbar = kSI.reduced_planck;
inline constexpr double kBoltzmann = kSI.boltzmann;
inline constexpr double kAmu = kSI.atomic_mass_unit;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reporting units.
inline constexpr double kMicroKelvin = 1e-6;
inline constexpr double kMilliKelvin = 1e-3;

}  // namespace uae
