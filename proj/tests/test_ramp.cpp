#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "support/oracles.hpp"
#include "uae/constants.hpp"
#include "uae/errors.hpp"
#include "uae/ramp.hpp"

using namespace uae;
using namespace uae::stroke;

namespace {

/// Continuous-time threshold: smallest tf with w0^2 > b^3 b'' for all s.
double analytic_min_time(double w0, double wf)
{
    const double gm1 = std::sqrt(w0 / wf) - 1;
    double worst = 0;
    for (int i = 0; i <= 200000; ++i) {
        const double s = i / 200000.0;
        const double b = 1 + gm1 * s * s * s * (10 + s * (-15 + 6 * s));
        const double p2 = s * (60 + s * (-180 + 120 * s));
        worst = std::max(worst, b * b * b * gm1 * p2);
    }
    return std::sqrt(worst) / w0;
}

/// Linear interpolation of the sampled omega^2.
double sampled_omega_sq(const RampSchedule& r, double t)
{
    const auto& s = r.samples;
    const double h = r.duration / static_cast<double>(s.size() - 1);
    const auto k = std::min(static_cast<std::size_t>(t / h), s.size() - 2);
    const double f = (t - s[k].time) / (s[k + 1].time - s[k].time);
    return s[k].omega_squared + f * (s[k + 1].omega_squared - s[k].omega_squared);
}

}  // namespace

TEST_CASE("ramp samples follow the scaling ansatz")
{
    const double w0 = kTwoPi * 2e3, wf = kTwoPi * 500;
    const double tf = 0.5e-3;
    const auto r = superadiabatic_ramp(w0, wf, tf, 512);
    const oracle::Quintic q{w0, wf, tf};
    REQUIRE(r.samples.size() == 513);
    CHECK(r.valid);
    for (const auto& s : r.samples) {
        CHECK(std::abs(s.b - q.b(s.time)) < 1e-12);
        CHECK(std::abs(s.omega_squared - q.omega_sq(s.time)) < 1e-9 * w0 * w0);
    }
    CHECK(r.samples.front().omega == w0);
    CHECK(r.samples.back().omega == wf);
    CHECK(r.samples.front().time == 0.0);
    CHECK(r.samples.back().time == tf);
    CHECK(r.samples.back().b == doctest::Approx(q.gamma()).epsilon(1e-14));
}

TEST_CASE("Ermakov dynamics reach the target state")
{
    oracle::Gen g(2024);
    for (int i = 0; i < 50; ++i) {
        const double w0 = g.log_uniform(kTwoPi * 100, kTwoPi * 1e5);
        const double ratio = g.log_uniform(0.1, 10);
        const double wf = w0 * ratio;
        const double tmin = min_ramp_time(w0, wf);
        const double tf = tmin * g.uniform(1.0, 4.0) + 1e-6;
        CAPTURE(w0);
        CAPTURE(ratio);
        CAPTURE(tf);
        const auto r = superadiabatic_ramp(w0, wf, tf, 512);
        REQUIRE(r.valid);
        CHECK(std::abs(r.samples.front().omega - w0) <= 1e-9 * w0);
        CHECK(std::abs(r.samples.back().omega - wf) <= 1e-9 * wf);
        const oracle::Quintic q{w0, wf, tf};
        const auto end = oracle::integrate_ermakov(w0, tf, [&](double t) { return q.omega_sq(t); }, 20000);
        CHECK(std::abs(end[0] - q.gamma()) < 1e-6 * q.gamma());
        CHECK(std::abs(end[1]) * tf < 1e-6);
    }
}

TEST_CASE("sampled schedule drives the Ermakov equation to the target")
{
    const double w0 = kTwoPi * 2e3, wf = kTwoPi * 500;
    const double tf = 0.3e-3;
    const auto r = superadiabatic_ramp(w0, wf, tf, 8192);
    const double gamma = std::sqrt(w0 / wf);
    const auto end = oracle::integrate_ermakov(w0, tf, [&](double t) { return sampled_omega_sq(r, t); }, 32768);
    CHECK(std::abs(end[0] - gamma) < 1e-5);
    CHECK(std::abs(end[1]) * tf < 1e-5);
    CHECK(ramp_infidelity(r) < 1e-6);
}

TEST_CASE("equal frequencies give a constant ramp")
{
    const double w = kTwoPi * 3e3;
    const auto r = superadiabatic_ramp(w, w, 1e-4, 128);
    CHECK(r.valid);
    for (const auto& s : r.samples) {
        CHECK(s.omega == doctest::Approx(w).epsilon(1e-15));
        CHECK(s.b == 1.0);
    }
    CHECK(min_ramp_time(w, w) == 0.0);
}

TEST_CASE("short ramps invert the trap")
{
    const double w0 = kTwoPi * 2e3;
    const auto r = superadiabatic_ramp(w0, w0 / 4, 0.05e-3, 512);
    CHECK_FALSE(r.valid);
    CHECK(r.min_omega_squared < 0);
}

TEST_CASE("minimum ramp time")
{
    const double w0 = kTwoPi * 2e3;
    const double t = min_ramp_time(w0, w0 / 4);
    CHECK(t > 0.1e-3);
    CHECK(t < 1e-3);
    CHECK(superadiabatic_ramp(w0, w0 / 4, t).valid);
    CHECK_FALSE(superadiabatic_ramp(w0, w0 / 4, t - 2e-6).valid);

    MinTimeOptions fine;
    fine.tolerance = 1e-12;
    const double precise = min_ramp_time(w0, w0 / 4, fine);
    CHECK(std::abs(precise - analytic_min_time(w0, w0 / 4)) < 1e-5 * precise);

    SUBCASE("compression mirrors decompression")
    {
        const double tc = min_ramp_time(w0 / 4, w0, fine);
        CHECK(std::abs(tc - analytic_min_time(w0 / 4, w0)) < 1e-5 * tc);
    }
    SUBCASE("time scales as 1/omega0")
    {
        for (double scale : {0.1, 0.5, 3.0, 20.0}) {
            const double ts = min_ramp_time(w0 * scale, w0 * scale / 4, fine);
            CHECK(std::abs(ts * scale / precise - 1) < 1e-3);
        }
    }
}

TEST_CASE("fidelity criterion is never looser than positivity")
{
    const double w0 = kTwoPi * 2e3;
    MinTimeOptions pos;
    MinTimeOptions fid;
    fid.ramp.criterion = RampValidity::fidelity;
    fid.ramp.fidelity_threshold = 1e-4;
    for (double ratio : {0.25, 0.5, 2.0, 4.0})
        CHECK(min_ramp_time(w0, w0 * ratio, fid) >= min_ramp_time(w0, w0 * ratio, pos) - pos.tolerance);
}

TEST_CASE("ramp preconditions")
{
    CHECK_THROWS_AS(superadiabatic_ramp(0.0, 1e3, 1e-3), DomainError);
    CHECK_THROWS_AS(superadiabatic_ramp(1e3, -1e3, 1e-3), DomainError);
    CHECK_THROWS_AS(superadiabatic_ramp(1e3, 1e3, 0.0), DomainError);
    CHECK_THROWS_AS(superadiabatic_ramp(1e3, 2e3, 1e-3, 16), DomainError);
}
