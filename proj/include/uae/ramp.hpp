#pragma once

#include <cstddef>
#include <vector>

namespace uae::stroke {

enum class RampValidity {
    positivity,  // omega(t)^2 > 0 at every sample (no trap inversion)
    fidelity,    // positivity, plus ground-state infidelity of the sampled ramp below a threshold
};

struct RampOptions {
    std::size_t steps = 512;
    RampValidity criterion = RampValidity::positivity;
    double fidelity_threshold = 1e-6;
};

struct RampSample {
    double time;           // s
    double omega_squared;  // rad^2/s^2, may be negative for an inverted trap
    double omega;          // sqrt(max(omega_squared, 0))
    double b;              // Ermakov scaling factor
    double b_dot;          // 1/s
    double b_ddot;         // 1/s^2
};

/// Time-sampled trap-frequency schedule that carries a harmonic state
/// self-similarly from start_omega to end_omega.
struct RampSchedule {
    double duration = 0.0;
    double start_omega = 0.0;
    double end_omega = 0.0;
    std::vector<RampSample> samples;
    bool valid = false;
    double min_omega_squared = 0.0;
};

/// Quintic scaling ansatz b(t) = 1 + (gamma - 1)(10 s^3 - 15 s^4 + 6 s^5),
/// s = t / duration, gamma = sqrt(start_omega / end_omega), and
/// omega(t)^2 = start_omega^2 / b^4 - b'' / b. The schedule is returned even
/// if the trap inverts; `valid` reports it.
RampSchedule superadiabatic_ramp(double start_omega, double end_omega, double duration,
                                 const RampOptions& options = {});
RampSchedule superadiabatic_ramp(double start_omega, double end_omega, double duration,
                                 std::size_t steps);

/// Ground-state infidelity 1 - |<target|psi(t_f)>|^2 after driving the
/// Ermakov equation with the sampled omega^2 (linear between samples).
double ramp_infidelity(const RampSchedule& ramp);

struct MinTimeOptions {
    double tolerance = 1e-6;  // s
    RampOptions ramp{};
};

/// Shortest duration (bisected to `tolerance`) whose ramp is valid. Returns 0
/// when the frequencies are equal.
double min_ramp_time(double start_omega, double end_omega, const MinTimeOptions& options = {});

}  // namespace uae::stroke
