#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "uae/oscillator.hpp"
#include "uae/ramp.hpp"

namespace uae::stroke {

enum class StrokeKind { adiabatic, isothermal, isochoric, isobaric };

std::string_view to_string(StrokeKind kind);

/// One transformation of the working fluid.
///
/// Sign convention: work_on_fluid > 0 is work done on the atom,
/// heat_into_fluid > 0 is heat absorbed from the bath. `times` and
/// `trajectory` are aligned sample by sample; the first and last entries are
/// the stroke endpoints.
struct StrokeResult {
    StrokeKind kind = StrokeKind::adiabatic;
    double duration = 0.0;
    double work_on_fluid = 0.0;
    double heat_into_fluid = 0.0;
    double entropy_change = 0.0;
    std::vector<double> times;
    std::vector<thermo::OscillatorState> trajectory;
    bool bath_contact = false;

    const thermo::OscillatorState& initial() const { return trajectory.front(); }
    const thermo::OscillatorState& final() const { return trajectory.back(); }
    double energy_change() const;
};

inline constexpr std::size_t kDefaultSteps = 512;

/// Decoupled from the bath; populations frozen along a valid ramp.
StrokeResult adiabatic_stroke(const thermo::OscillatorState& initial, const RampSchedule& ramp);

/// Quasi-static frequency sweep at fixed bath temperature. The frequency
/// path is geometric in omega; work is integrated with composite Simpson
/// over ln(omega), heat is T times the entropy change.
StrokeResult isothermal_stroke(double temperature, double start_omega, double end_omega,
                               double duration, std::size_t steps = kDefaultSteps);

/// Fixed trap frequency while the bath is heated or cooled by a super-adiabatic
/// ramp of its own trap, so the bath temperature tracks
/// T(t) = start_temperature * omega_bath(t) / bath_start_omega.
StrokeResult isochoric_stroke(double omega, double start_temperature, double end_temperature,
                              double duration, double bath_start_omega,
                              const RampOptions& bath_ramp = {});

/// Constant-pressure expansion or compression. Along a geometric omega path
/// the temperature follows isobaric_temperature; samples are time-stamped so
/// that the bath temperature changes linearly in time.
StrokeResult isobaric_stroke(const thermo::OscillatorState& start, double end_omega,
                             double duration, std::size_t steps, double mass);

}  // namespace uae::stroke
