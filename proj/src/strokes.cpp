#include "uae/strokes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uae/errors.hpp"

namespace uae::stroke {

using thermo::OscillatorState;

std::string_view to_string(StrokeKind kind)
{
    switch (kind) {
    case StrokeKind::adiabatic: return "adiabatic";
    case StrokeKind::isothermal: return "isothermal";
    case StrokeKind::isochoric: return "isochoric";
    case StrokeKind::isobaric: return "isobaric";
    }
    return "unknown";
}

double StrokeResult::energy_change() const
{
    return thermo::mean_energy(final()) - thermo::mean_energy(initial());
}

namespace {

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(what) + " must be positive");
}

double uniform_time(double duration, std::size_t k, std::size_t steps)
{
    return k == steps ? duration
                      : duration * static_cast<double>(k) / static_cast<double>(steps);
}

}  // namespace

StrokeResult adiabatic_stroke(const OscillatorState& initial, const RampSchedule& ramp)
{
    if (!ramp.valid)
        throw DomainError("adiabatic_stroke: ramp inverts the trap or fails its validity check");
    if (std::abs(initial.omega() - ramp.start_omega) > 1e-12 * ramp.start_omega)
        throw DomainError("adiabatic_stroke: initial frequency does not match ramp start");

    StrokeResult r;
    r.kind = StrokeKind::adiabatic;
    r.duration = ramp.duration;
    r.bath_contact = false;
    r.times.reserve(ramp.samples.size());
    r.trajectory.reserve(ramp.samples.size());
    for (const auto& s : ramp.samples) {
        r.times.push_back(s.time);
        r.trajectory.push_back(initial.with_frozen_populations(s.omega));
    }
    r.work_on_fluid = r.energy_change();
    r.heat_into_fluid = 0.0;
    r.entropy_change = 0.0;
    return r;
}

StrokeResult isothermal_stroke(double temperature, double start_omega, double end_omega,
                               double duration, std::size_t steps)
{
    require_positive(temperature, "isothermal_stroke: temperature");
    require_positive(start_omega, "isothermal_stroke: start_omega");
    require_positive(end_omega, "isothermal_stroke: end_omega");
    require_positive(duration, "isothermal_stroke: duration");
    if (steps < 128)
        throw DomainError("isothermal_stroke: at least 128 steps required");

    StrokeResult r;
    r.kind = StrokeKind::isothermal;
    r.duration = duration;
    r.bath_contact = true;
    r.times.reserve(steps + 1);
    r.trajectory.reserve(steps + 1);

    const double log_start = std::log(start_omega);
    const double h = (std::log(end_omega) - log_start) / static_cast<double>(steps);
    for (std::size_t k = 0; k <= steps; ++k) {
        const double omega = k == 0       ? start_omega
                             : k == steps ? end_omega
                                          : std::exp(log_start + static_cast<double>(k) * h);
        r.times.push_back(uniform_time(duration, k, steps));
        r.trajectory.push_back(OscillatorState::thermal(omega, temperature));
    }

    // dW = sum_n P_n dE_n = <E> d(ln omega) along a thermal path. Integrated
    // upward in omega so reversed strokes cancel exactly.
    const double lo = std::min(start_omega, end_omega);
    const double hi = std::max(start_omega, end_omega);
    const double log_lo = std::log(lo);
    const double dh = (std::log(hi) - log_lo) / static_cast<double>(steps);
    const auto energy = [&](double k) {
        const double omega = k == 0.0                          ? lo
                             : k == static_cast<double>(steps) ? hi
                                                               : std::exp(log_lo + k * dh);
        return thermo::mean_energy(OscillatorState::thermal(omega, temperature));
    };
    double work = 0.0;
    double e_prev = energy(0.0);
    for (std::size_t k = 1; k <= steps; ++k) {
        const double kk = static_cast<double>(k);
        const double e = energy(kk);
        work += dh / 6.0 * (e_prev + 4.0 * energy(kk - 0.5) + e);
        e_prev = e;
    }
    if (end_omega < start_omega)
        work = -work;

    r.entropy_change = thermo::entropy(r.final()) - thermo::entropy(r.initial());
    r.work_on_fluid = work;
    r.heat_into_fluid = temperature * r.entropy_change;
    return r;
}

StrokeResult isochoric_stroke(double omega, double start_temperature, double end_temperature,
                              double duration, double bath_start_omega,
                              const RampOptions& bath_ramp)
{
    require_positive(omega, "isochoric_stroke: omega");
    require_positive(start_temperature, "isochoric_stroke: start_temperature");
    require_positive(end_temperature, "isochoric_stroke: end_temperature");
    require_positive(duration, "isochoric_stroke: duration");
    require_positive(bath_start_omega, "isochoric_stroke: bath_start_omega");

    const double bath_end_omega = bath_start_omega * (end_temperature / start_temperature);
    const auto ramp = superadiabatic_ramp(bath_start_omega, bath_end_omega, duration, bath_ramp);
    if (!ramp.valid)
        throw DomainError("isochoric_stroke: bath ramp of " + std::to_string(duration)
                          + " s inverts the bath trap");

    StrokeResult r;
    r.kind = StrokeKind::isochoric;
    r.duration = duration;
    r.bath_contact = true;
    r.times.reserve(ramp.samples.size());
    r.trajectory.reserve(ramp.samples.size());
    const std::size_t last = ramp.samples.size() - 1;
    for (std::size_t k = 0; k <= last; ++k) {
        const auto& s = ramp.samples[k];
        double t_bath = start_temperature * (s.omega / bath_start_omega);
        if (k == 0)
            t_bath = start_temperature;
        else if (k == last)
            t_bath = end_temperature;
        r.times.push_back(s.time);
        r.trajectory.push_back(OscillatorState::thermal(omega, t_bath));
    }

    r.work_on_fluid = 0.0;
    r.heat_into_fluid = r.energy_change();
    r.entropy_change = thermo::entropy(r.final()) - thermo::entropy(r.initial());
    return r;
}

StrokeResult isobaric_stroke(const OscillatorState& start, double end_omega, double duration,
                             std::size_t steps, double mass)
{
    if (!start.is_thermal())
        throw DomainError("isobaric_stroke: start state must be thermal");
    require_positive(end_omega, "isobaric_stroke: end_omega");
    require_positive(duration, "isobaric_stroke: duration");
    require_positive(mass, "isobaric_stroke: mass");
    if (steps < 64)
        throw DomainError("isobaric_stroke: at least 64 steps required");

    const double pressure = thermo::quantum_pressure(start, mass);
    const double start_omega = start.omega();
    const double t0 = *start.temperature();
    const double log_start = std::log(start_omega);
    const double h = (std::log(end_omega) - log_start) / static_cast<double>(steps);

    StrokeResult r;
    r.kind = StrokeKind::isobaric;
    r.duration = duration;
    r.bath_contact = true;
    r.trajectory.reserve(steps + 1);
    r.trajectory.push_back(start);
    std::vector<double> temps{t0};
    temps.reserve(steps + 1);
    for (std::size_t k = 1; k <= steps; ++k) {
        const double w = k == steps ? end_omega : std::exp(log_start + static_cast<double>(k) * h);
        const double t = thermo::isobaric_temperature(pressure, w, mass);
        temps.push_back(t);
        r.trajectory.push_back(OscillatorState::thermal(w, t));
    }

    // Bath temperature is ramped linearly in time.
    const double span = temps.back() - t0;
    r.times.reserve(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) {
        if (k == steps)
            r.times.push_back(duration);
        else if (span != 0.0)
            r.times.push_back(duration * (temps[k] - t0) / span);
        else
            r.times.push_back(uniform_time(duration, k, steps));
    }

    const double a_start = thermo::harmonic_length(start_omega, mass);
    const double a_end = thermo::harmonic_length(end_omega, mass);
    r.work_on_fluid = -pressure * (a_end - a_start);
    r.heat_into_fluid = r.energy_change() - r.work_on_fluid;
    r.entropy_change = thermo::entropy(r.final()) - thermo::entropy(r.initial());
    return r;
}

}  // namespace uae::stroke
