#include <doctest.h>

#include <cmath>
#include <numeric>

#include "support/oracles.hpp"
#include "uae/constants.hpp"
#include "uae/errors.hpp"
#include "uae/oscillator.hpp"

using namespace uae;
using namespace uae::thermo;

namespace {

const double kMassK41 = 40.96182576 * kAmu;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("closed forms agree with direct Boltzmann sums")
{
    for (double beta : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0}) {
        CAPTURE(beta);
        const auto s = oracle::thermal_series(beta);
        CHECK(rel(partition_function(beta), s.z) < 1e-10);
        CHECK(rel(mean_energy_quanta(beta), s.mean_quanta) < 1e-10);
        CHECK(std::abs(entropy_kb(beta) - s.entropy_kb) < 1e-10 * std::max(1.0, s.entropy_kb));
    }
}

TEST_CASE("partition function examples")
{
    CHECK(partition_function(std::log(2.0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    // high temperature: Z -> 1/beta
    CHECK(partition_function(1e-4) * 1e-4 == doctest::Approx(1.0).epsilon(1e-8));
    CHECK_THROWS_AS(partition_function(0.0), DomainError);
    CHECK_THROWS_AS(partition_function(-1.0), DomainError);
}

TEST_CASE("level cutoff bounds the neglected tail")
{
    for (double beta : {1e-3, 0.02, 0.3, 1.0, 7.0, 50.0}) {
        CAPTURE(beta);
        const auto n = required_cutoff(beta);
        CHECK(n >= kMinLevels);
        const double q = std::exp(-beta);
        CHECK(std::pow(q, static_cast<double>(n)) / (1 - q) < kTailBound);
        if (n > kMinLevels)
            CHECK(std::pow(q, static_cast<double>(n - 1)) / (1 - q) >= kTailBound);
    }
    CHECK_THROWS_AS(thermal_populations(0.01, 100), DomainError);
}

TEST_CASE("thermal state populations are normalised Boltzmann weights")
{
    const double omega = kTwoPi * 20e3;
    const auto st = OscillatorState::thermal(omega, 1.1e-6);
    const auto p = st.populations();
    const double sum = std::accumulate(p.begin(), p.end(), 0.0);
    CHECK(std::abs(sum - 1.0) < 1e-12);
    const double beta = *st.beta();
    for (std::size_t n = 1; n < 20; ++n)
        CHECK(p[n] / p[n - 1] == doctest::Approx(std::exp(-beta)).epsilon(1e-12));
}

TEST_CASE("state observables match closed forms")
{
    oracle::Gen g(11);
    for (int i = 0; i < 100; ++i) {
        const double omega = g.log_uniform(kTwoPi * 100, kTwoPi * 1e6);
        const double t = g.log_uniform(1e-8, 1e-4);
        const double beta = beta_of(omega, t);
        if (beta < 1e-3 || beta > 200)
            continue;
        CAPTURE(omega);
        CAPTURE(t);
        const auto st = OscillatorState::thermal(omega, t);
        CHECK(rel(mean_energy(st), kHbar * omega * mean_energy_quanta(beta)) < 1e-10);
        CHECK(std::abs(entropy(st) / kBoltzmann - entropy_kb(beta)) < 1e-9);
        CHECK(rel(quantum_pressure(st, kMassK41), quantum_pressure(omega, t, kMassK41)) < 1e-10);
    }
}

TEST_CASE("pressure equals minus the population-weighted level slope")
{
    for (double beta : {0.05, 0.3, 1.0, 3.0, 10.0}) {
        const double omega = kTwoPi * 25e3;
        const double t = temperature_of(omega, beta);
        const auto s = oracle::thermal_series(beta);
        const double fd = oracle::pressure_fd(s.p, omega, kMassK41);
        CHECK(rel(quantum_pressure(omega, t, kMassK41), fd) < 1e-6);
    }
}

TEST_CASE("zero-temperature pressure floor")
{
    const double omega = kTwoPi * 10e3;
    const double floor = zero_point_pressure(omega, kMassK41);
    CHECK(rel(floor, std::sqrt(kHbar * kMassK41 * omega * omega * omega)) < 1e-15);
    CHECK(rel(quantum_pressure(omega, 1e-12, kMassK41), floor) < 1e-12);
    CHECK_THROWS_AS(isobaric_temperature(floor, omega, kMassK41), DomainError);
    CHECK_THROWS_AS(isobaric_temperature(0.5 * floor, omega, kMassK41), DomainError);
}

TEST_CASE("isobaric temperature inverts the pressure")
{
    oracle::Gen g(3);
    for (int i = 0; i < 200; ++i) {
        const double beta = g.log_uniform(0.1, 10.0);
        const double omega = g.log_uniform(kTwoPi * 1e3, kTwoPi * 1e5);
        const double t = temperature_of(omega, beta);
        const double p = quantum_pressure(omega, t, kMassK41);
        const double t2 = isobaric_temperature(p, omega, kMassK41);
        CHECK(rel(quantum_pressure(omega, t2, kMassK41), p) < 1e-9);
        CHECK(rel(t2, t) < 1e-9);
    }
}

TEST_CASE("at fixed pressure a looser trap holds a hotter atom")
{
    // Pi ~ sqrt(m omega) 2 k_B T at high T, so T scales as omega^(-1/2).
    const double omega = kTwoPi * 20e3;
    const double p = quantum_pressure(omega, 5e-6, kMassK41);
    double prev = isobaric_temperature(p, omega, kMassK41);
    for (double f : {0.9, 0.7, 0.5, 0.3}) {
        const double t = isobaric_temperature(p, omega * f, kMassK41);
        CHECK(t > prev);
        prev = t;
    }
}

TEST_CASE("frozen populations rescale the temperature")
{
    const auto st = OscillatorState::thermal(kTwoPi * 40e3, 2e-6);
    const auto moved = st.with_frozen_populations(kTwoPi * 10e3);
    REQUIRE(moved.temperature());
    CHECK(*moved.temperature() == doctest::Approx(0.5e-6).epsilon(1e-14));
    CHECK(*moved.beta() == doctest::Approx(*st.beta()).epsilon(1e-14));
    CHECK(entropy(moved) == entropy(st));
    CHECK(mean_energy(moved) == doctest::Approx(0.25 * mean_energy(st)).epsilon(1e-14));
}

TEST_CASE("arbitrary populations are validated")
{
    CHECK_NOTHROW(OscillatorState::from_populations(1e4, {0.5, 0.25, 0.25}));
    CHECK_THROWS_AS(OscillatorState::from_populations(1e4, {0.5, 0.25}), DomainError);
    CHECK_THROWS_AS(OscillatorState::from_populations(1e4, {1.5, -0.5}), DomainError);
    const auto st = OscillatorState::from_populations(1e4, {0.5, 0.5});
    CHECK_FALSE(st.is_thermal());
    CHECK(entropy(st) / kBoltzmann == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(mean_energy(st) == doctest::Approx(kHbar * 1e4).epsilon(1e-14));
}

TEST_CASE("domain errors on non-physical input")
{
    CHECK_THROWS_AS(OscillatorState::thermal(0.0, 1e-6), DomainError);
    CHECK_THROWS_AS(OscillatorState::thermal(1e4, 0.0), DomainError);
    CHECK_THROWS_AS(OscillatorState::thermal(1e4, -1e-6), DomainError);
    CHECK_THROWS_AS(beta_of(1e4, std::nan("")), DomainError);
}
