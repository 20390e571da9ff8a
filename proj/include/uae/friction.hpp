#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>

namespace uae::friction {

/// One optical transition of the working-fluid atom. `weight` is its share of
/// the ground-state oscillator strength for linearly polarised light.
struct AtomicLine {
    double wavelength;  // m
    double linewidth;   // rad/s
    double weight;
};

struct MixtureSpec {
    double fluid_mass;  // kg
    double bath_mass;   // kg
    AtomicLine d1;
    AtomicLine d2;
    /// Wavelength at which the bath species feels no dipole force.
    double selective_wavelength;  // m

    double reduced_mass() const { return fluid_mass * bath_mass / (fluid_mass + bath_mass); }

    /// 41K working fluid in a 87Rb bath.
    static MixtureSpec potassium41_rubidium87();
};

struct BathSpec {
    double atom_number = 1e6;
    double mean_trap_frequency = 0.0;  // rad/s
    double temperature = 0.0;          // K
    /// Per-axis trap frequencies; the mean frequency is used on all axes if unset.
    std::optional<std::array<double, 3>> axis_frequencies;

    double axis_frequency(std::size_t axis) const;
    /// Bath after its trap is scaled by `frequency_scale`, thermalised at `new_temperature`.
    BathSpec rescaled(double frequency_scale, double new_temperature) const;
};

struct TweezerSpec {
    double waist;       // m, 1/e^2 intensity radius
    double power;       // W
    double wavelength;  // m
};

using Widths = std::array<double, 3>;  // m, (x, y, z)

/// Which mass divides the three-body coefficient 4 pi hbar a^4 / m.
enum class AlphaMass { bath, fluid, reduced };

struct FrictionLedger {
    double scattering_length = 0.0;       // m
    double elastic_rate = 0.0;            // 1/s, averaged over the contact
    double three_body_coefficient = 0.0;  // m^6/s
    double loss_exponent = 0.0;           // integral of alpha n^2 dt
    double survival = 1.0;
    double contact_time = 0.0;            // s
};

/// Number of elastic collisions demanded for thermalisation, as a power law in
/// the bath temperature: required * (T / reference_temperature)^(-temperature_exponent).
struct CollisionModel {
    double collisions_required = 4.0;
    double temperature_exponent = 0.0;
    double reference_temperature = 1.1e-6;  // K

    double at(double temperature) const;
};

Widths thermal_cloud_widths(const BathSpec& bath, double bath_mass);
double bath_peak_density(const BathSpec& bath, double bath_mass);

/// Position spread of the trapped atom in a harmonic well at temperature T:
/// sqrt(hbar / (2 m omega) coth(hbar omega / 2 k_B T)). Radial axes use
/// omega * radial_over_axial.
Widths fluid_widths(double axial_omega, double temperature, double mass, double radial_over_axial);

/// Mean relative thermal speed sqrt(8 k_B T / (pi mu)).
double mean_relative_speed(double temperature, const MixtureSpec& mixture);

/// Single-atom elastic rate from the Gaussian overlap of the atom with the
/// bath cloud:
///   4 pi a^2 v N_bath prod_i [2 pi (s_i,fluid^2 + s_i,bath^2)]^(-1/2)
double elastic_collision_rate(double scattering_length, const MixtureSpec& mixture,
                              const BathSpec& bath, const Widths& fluid);

/// Scattering length at which `collisions` elastic events occur in `stroke_time`.
double required_scattering_length(double stroke_time, const MixtureSpec& mixture,
                                  const BathSpec& bath, const Widths& fluid,
                                  double collisions = 4.0);

double alpha_mass(AlphaMass choice, const MixtureSpec& mixture);
double three_body_coefficient(double scattering_length, double mass);

/// exp(-alpha n^2 t): solution of dn/dt = -alpha n n_bath^2 at constant bath density.
double survival_probability(double scattering_length, double bath_density, double contact_time,
                            double mass);

/// Bath and atom configuration at one instant of a contact stroke.
struct ContactSample {
    double time;  // s, from stroke start
    BathSpec bath;
    Widths fluid;
};

/// Friction of one bath-contact stroke with a time-dependent bath. The
/// scattering length is held fixed and chosen so the time-integrated elastic
/// rate gives the required number of collisions; the survival integrates
/// alpha n_bath(t)^2 over the same samples (trapezoid).
FrictionLedger contact_friction(std::span<const ContactSample> samples,
                                const MixtureSpec& mixture, const CollisionModel& collisions,
                                AlphaMass mass_choice = AlphaMass::bath);

struct TweezerTrap {
    double depth;                // J
    double radial_frequency;     // rad/s
    double axial_frequency;      // rad/s
    double photon_scatter_rate;  // 1/s at the trap centre
};

/// Gaussian-beam dipole trap for the fluid atom using the rotating-wave
/// two-line polarisability. Throws DomainError for blue detuning.
TweezerTrap tweezer_trap(const TweezerSpec& tweezer, const MixtureSpec& mixture);

double rayleigh_range(const TweezerSpec& tweezer);

/// Beam power at which the tweezer's axial frequency equals `axial_omega`.
double power_for_axial_frequency(const TweezerSpec& tweezer, const MixtureSpec& mixture,
                                 double axial_omega);

}  // namespace uae::friction
