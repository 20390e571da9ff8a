#include "uae/ramp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uae/errors.hpp"

namespace uae::stroke {

namespace {

struct Scaling {
    double b, b_dot, b_ddot;
};

// s in [0, 1]; derivatives are with respect to physical time.
Scaling quintic_scaling(double gamma, double s, double duration)
{
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double p = s3 * (10.0 - 15.0 * s + 6.0 * s2);
    const double dp = s2 * (30.0 - 60.0 * s + 30.0 * s2);
    const double ddp = s * (60.0 - 180.0 * s + 120.0 * s2);
    const double g = gamma - 1.0;
    return {1.0 + g * p, g * dp / duration, g * ddp / (duration * duration)};
}

bool positive_everywhere(const RampSchedule& r)
{
    return r.min_omega_squared > 0.0;
}

}  // namespace

RampSchedule superadiabatic_ramp(double start_omega, double end_omega, double duration,
                                 const RampOptions& options)
{
    if (!(start_omega > 0.0) || !(end_omega > 0.0))
        throw DomainError("superadiabatic_ramp: frequencies must be positive");
    if (!(duration > 0.0))
        throw DomainError("superadiabatic_ramp: duration must be positive");
    if (options.steps < 64)
        throw DomainError("superadiabatic_ramp: at least 64 steps required");

    RampSchedule r;
    r.duration = duration;
    r.start_omega = start_omega;
    r.end_omega = end_omega;
    r.samples.reserve(options.steps + 1);
    r.min_omega_squared = std::numeric_limits<double>::infinity();

    const double gamma = std::sqrt(start_omega / end_omega);
    const double w0sq = start_omega * start_omega;
    for (std::size_t k = 0; k <= options.steps; ++k) {
        const double s = static_cast<double>(k) / static_cast<double>(options.steps);
        const auto sc = quintic_scaling(gamma, s, duration);
        const double b2 = sc.b * sc.b;
        const double wsq = w0sq / (b2 * b2) - sc.b_ddot / sc.b;
        r.min_omega_squared = std::min(r.min_omega_squared, wsq);
        r.samples.push_back({s * duration, wsq, std::sqrt(std::max(wsq, 0.0)), sc.b, sc.b_dot,
                             sc.b_ddot});
    }
    // Pin the endpoints to the requested frequencies; the analytic values
    // differ only by rounding.
    r.samples.front().time = 0.0;
    r.samples.back().time = duration;
    r.samples.front().omega = start_omega;
    r.samples.back().omega = end_omega;

    r.valid = positive_everywhere(r);
    if (r.valid && options.criterion == RampValidity::fidelity)
        r.valid = ramp_infidelity(r) <= options.fidelity_threshold;
    return r;
}

RampSchedule superadiabatic_ramp(double start_omega, double end_omega, double duration,
                                 std::size_t steps)
{
    RampOptions opt;
    opt.steps = steps;
    return superadiabatic_ramp(start_omega, end_omega, duration, opt);
}

double ramp_infidelity(const RampSchedule& ramp)
{
    const auto& s = ramp.samples;
    if (s.size() < 2)
        return 0.0;
    const double w0sq = ramp.start_omega * ramp.start_omega;
    constexpr int kSub = 8;

    // y = (b, b_dot); b_ddot = w0^2 / b^3 - w(t)^2 b
    double b = 1.0;
    double v = 0.0;
    auto accel = [w0sq](double bb, double wsq) { return w0sq / (bb * bb * bb) - wsq * bb; };
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
        const double dt = (s[k + 1].time - s[k].time) / kSub;
        for (int j = 0; j < kSub; ++j) {
            const double f0 = static_cast<double>(j) / kSub;
            const double fm = (j + 0.5) / kSub;
            const double f1 = static_cast<double>(j + 1) / kSub;
            const auto lerp = [&](double f) {
                return s[k].omega_squared + f * (s[k + 1].omega_squared - s[k].omega_squared);
            };
            const double w_a = lerp(f0), w_m = lerp(fm), w_b = lerp(f1);
            const double k1b = v, k1v = accel(b, w_a);
            const double k2b = v + 0.5 * dt * k1v, k2v = accel(b + 0.5 * dt * k1b, w_m);
            const double k3b = v + 0.5 * dt * k2v, k3v = accel(b + 0.5 * dt * k2b, w_m);
            const double k4b = v + dt * k3v, k4v = accel(b + dt * k3b, w_b);
            b += dt / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
            v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        }
    }
    // Gaussian overlap of the scaled ground state (b, b_dot) with the target
    // ground state of width gamma, both in units of the initial length.
    const double gamma = std::sqrt(ramp.start_omega / ramp.end_omega);
    const double re_a = 1.0 / (b * b);
    const double im_a = -v / (ramp.start_omega * b);
    const double re_t = 1.0 / (gamma * gamma);
    const double fidelity =
        2.0 * std::sqrt(re_a * re_t) / std::hypot(re_a + re_t, im_a);
    return std::max(0.0, 1.0 - fidelity);
}

double min_ramp_time(double start_omega, double end_omega, const MinTimeOptions& options)
{
    if (!(start_omega > 0.0) || !(end_omega > 0.0))
        throw DomainError("min_ramp_time: frequencies must be positive");
    if (!(options.tolerance > 0.0))
        throw DomainError("min_ramp_time: tolerance must be positive");
    if (start_omega == end_omega)
        return 0.0;

    const auto valid = [&](double t) {
        return superadiabatic_ramp(start_omega, end_omega, t, options.ramp).valid;
    };

    double lo = 0.0;
    double hi = 1.0 / start_omega;
    int guard = 0;
    while (!valid(hi)) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 200)
            throw DomainError("min_ramp_time: no valid duration found");
    }
    while (hi - lo > options.tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (valid(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace uae::stroke
