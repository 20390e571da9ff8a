#include <cmath>
#include <numbers>

#include "uae/constants.hpp"
#include "uae/errors.hpp"
#include "uae/friction.hpp"

namespace uae::friction {

namespace {

struct LineSums {
    double potential_per_intensity;  // J per W/m^2, negative when attractive
    double scatter_per_intensity;    // 1/s per W/m^2
};

// Rotating-wave two-level response summed over the fine-structure doublet.
LineSums dipole_response(double wavelength, const MixtureSpec& mixture)
{
    const double c = kSI.speed_of_light;
    const double omega_laser = kTwoPi * c / wavelength;
    LineSums sums{0.0, 0.0};
    for (const auto& line : {mixture.d1, mixture.d2}) {
        const double omega_line = kTwoPi * c / line.wavelength;
        const double detuning = omega_laser - omega_line;
        const double prefactor = 3.0 * std::numbers::pi * c * c / (2.0 * std::pow(omega_line, 3));
        const double ratio = line.linewidth / detuning;
        sums.potential_per_intensity += line.weight * prefactor * ratio;
        sums.scatter_per_intensity += line.weight * prefactor / kHbar * ratio * ratio;
    }
    return sums;
}

}  // namespace

double rayleigh_range(const TweezerSpec& tweezer)
{
    return std::numbers::pi * tweezer.waist * tweezer.waist / tweezer.wavelength;
}

TweezerTrap tweezer_trap(const TweezerSpec& tweezer, const MixtureSpec& mixture)
{
    if (!(tweezer.waist > 0.0) || !(tweezer.power > 0.0) || !(tweezer.wavelength > 0.0))
        throw DomainError("tweezer_trap: waist, power and wavelength must be positive");
    if (!(tweezer.wavelength > mixture.d1.wavelength && tweezer.wavelength > mixture.d2.wavelength))
        throw DomainError("tweezer_trap: wavelength is not red-detuned from both fluid transitions");

    const auto response = dipole_response(tweezer.wavelength, mixture);
    const double peak_intensity =
        2.0 * tweezer.power / (std::numbers::pi * tweezer.waist * tweezer.waist);
    const double depth = -response.potential_per_intensity * peak_intensity;
    const double z_r = rayleigh_range(tweezer);
    const double m = mixture.fluid_mass;
    return TweezerTrap{
        depth,
        std::sqrt(4.0 * depth / (m * tweezer.waist * tweezer.waist)),
        std::sqrt(2.0 * depth / (m * z_r * z_r)),
        response.scatter_per_intensity * peak_intensity,
    };
}

double power_for_axial_frequency(const TweezerSpec& tweezer, const MixtureSpec& mixture,
                                 double axial_omega)
{
    if (!(axial_omega > 0.0))
        throw DomainError("power_for_axial_frequency: frequency must be positive");
    const double reference = tweezer_trap(tweezer, mixture).axial_frequency;
    const double scale = axial_omega / reference;
    return tweezer.power * scale * scale;
}

}  // namespace uae::friction
