#include "uae/friction.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "uae/constants.hpp"
#include "uae/errors.hpp"

namespace uae::friction {

namespace {
constexpr double kPi = std::numbers::pi;
}

MixtureSpec MixtureSpec::potassium41_rubidium87()
{
    return MixtureSpec{
        40.96182576 * kAmu,
        86.909180527 * kAmu,
        {770.108e-9, kTwoPi * 5.956e6, 1.0 / 3.0},
        {766.701e-9, kTwoPi * 6.035e6, 2.0 / 3.0},
        789.82e-9,
    };
}

double BathSpec::axis_frequency(std::size_t axis) const
{
    if (axis_frequencies)
        return (*axis_frequencies).at(axis);
    return mean_trap_frequency;
}

BathSpec BathSpec::rescaled(double frequency_scale, double new_temperature) const
{
    BathSpec b = *this;
    b.mean_trap_frequency *= frequency_scale;
    if (b.axis_frequencies)
        for (auto& w : *b.axis_frequencies)
            w *= frequency_scale;
    b.temperature = new_temperature;
    return b;
}

double CollisionModel::at(double temperature) const
{
    if (temperature_exponent == 0.0)
        return collisions_required;
    return collisions_required * std::pow(temperature / reference_temperature, -temperature_exponent);
}

Widths thermal_cloud_widths(const BathSpec& bath, double bath_mass)
{
    if (!(bath.temperature > 0.0) || !(bath_mass > 0.0))
        throw DomainError("thermal_cloud_widths: temperature and mass must be positive");
    Widths w{};
    for (std::size_t i = 0; i < 3; ++i) {
        const double omega = bath.axis_frequency(i);
        if (!(omega > 0.0))
            throw DomainError("thermal_cloud_widths: trap frequency must be positive");
        w[i] = std::sqrt(kBoltzmann * bath.temperature / (bath_mass * omega * omega));
    }
    return w;
}

double bath_peak_density(const BathSpec& bath, double bath_mass)
{
    const auto w = thermal_cloud_widths(bath, bath_mass);
    return bath.atom_number / (std::pow(kTwoPi, 1.5) * w[0] * w[1] * w[2]);
}

Widths fluid_widths(double axial_omega, double temperature, double mass, double radial_over_axial)
{
    const auto spread = [&](double omega) {
        const double x = kHbar * omega / (2.0 * kBoltzmann * temperature);
        return std::sqrt(kHbar / (2.0 * mass * omega) / std::tanh(x));
    };
    const double radial = spread(axial_omega * radial_over_axial);
    return {radial, radial, spread(axial_omega)};
}

double mean_relative_speed(double temperature, const MixtureSpec& mixture)
{
    return std::sqrt(8.0 * kBoltzmann * temperature / (kPi * mixture.reduced_mass()));
}

double elastic_collision_rate(double scattering_length, const MixtureSpec& mixture,
                              const BathSpec& bath, const Widths& fluid)
{
    if (scattering_length < 0.0)
        throw DomainError("elastic_collision_rate: scattering length must be non-negative");
    const auto cloud = thermal_cloud_widths(bath, mixture.bath_mass);
    double overlap = bath.atom_number;
    for (std::size_t i = 0; i < 3; ++i)
        overlap /= std::sqrt(kTwoPi * (fluid[i] * fluid[i] + cloud[i] * cloud[i]));
    const double cross_section = 4.0 * kPi * scattering_length * scattering_length;
    return cross_section * mean_relative_speed(bath.temperature, mixture) * overlap;
}

double required_scattering_length(double stroke_time, const MixtureSpec& mixture,
                                  const BathSpec& bath, const Widths& fluid, double collisions)
{
    if (!(stroke_time > 0.0) || !(collisions > 0.0))
        throw DomainError("required_scattering_length: stroke time and collisions must be positive");
    const double unit_rate = elastic_collision_rate(1.0, mixture, bath, fluid);
    return std::sqrt(collisions / (stroke_time * unit_rate));
}

double alpha_mass(AlphaMass choice, const MixtureSpec& mixture)
{
    switch (choice) {
    case AlphaMass::bath: return mixture.bath_mass;
    case AlphaMass::fluid: return mixture.fluid_mass;
    case AlphaMass::reduced: return mixture.reduced_mass();
    }
    return mixture.bath_mass;
}

double three_body_coefficient(double scattering_length, double mass)
{
    const double a2 = scattering_length * scattering_length;
    return 4.0 * kPi * kHbar * a2 * a2 / mass;
}

double survival_probability(double scattering_length, double bath_density, double contact_time,
                            double mass)
{
    if (scattering_length < 0.0 || bath_density < 0.0 || contact_time < 0.0 || !(mass > 0.0))
        throw DomainError("survival_probability: arguments must be non-negative");
    const double alpha = three_body_coefficient(scattering_length, mass);
    return std::exp(-alpha * bath_density * bath_density * contact_time);
}

FrictionLedger contact_friction(std::span<const ContactSample> samples,
                                const MixtureSpec& mixture, const CollisionModel& collisions,
                                AlphaMass mass_choice)
{
    if (samples.size() < 2)
        throw DomainError("contact_friction: need at least two samples");
    const double duration = samples.back().time - samples.front().time;
    if (!(duration > 0.0))
        throw DomainError("contact_friction: contact time must be positive");

    double rate_integral = 0.0;     // at a = 1 m
    double density_sq_integral = 0.0;
    double temperature_integral = 0.0;
    double prev_rate = 0.0, prev_n2 = 0.0, prev_t = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto& s = samples[k];
        const double rate = elastic_collision_rate(1.0, mixture, s.bath, s.fluid);
        const double n = bath_peak_density(s.bath, mixture.bath_mass);
        if (k > 0) {
            const double dt = s.time - samples[k - 1].time;
            rate_integral += 0.5 * dt * (rate + prev_rate);
            density_sq_integral += 0.5 * dt * (n * n + prev_n2);
            temperature_integral += 0.5 * dt * (s.bath.temperature + prev_t);
        }
        prev_rate = rate;
        prev_n2 = n * n;
        prev_t = s.bath.temperature;
    }

    const double needed = collisions.at(temperature_integral / duration);
    FrictionLedger f;
    f.contact_time = duration;
    f.scattering_length = std::sqrt(needed / rate_integral);
    f.elastic_rate = needed / duration;
    f.three_body_coefficient =
        three_body_coefficient(f.scattering_length, alpha_mass(mass_choice, mixture));
    f.loss_exponent = f.three_body_coefficient * density_sq_integral;
    f.survival = std::exp(-f.loss_exponent);
    return f;
}

}  // namespace uae::friction
