#include "uae/oscillator.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "uae/constants.hpp"
#include "uae/errors.hpp"

namespace uae::thermo {

namespace {

// Guards against absurd level counts at very high temperature.
constexpr std::size_t kMaxLevels = std::size_t{1} << 22;

void require_positive_beta(double beta, const char* where)
{
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw DomainError(std::string(where) + ": beta must be positive and finite, got "
                          + std::to_string(beta));
}

}  // namespace

double beta_of(double omega, double temperature)
{
    if (!(omega > 0.0) || !(temperature > 0.0))
        throw DomainError("beta_of: omega and temperature must be positive");
    return kHbar * omega / (kBoltzmann * temperature);
}

double temperature_of(double omega, double beta)
{
    require_positive_beta(beta, "temperature_of");
    return kHbar * omega / (kBoltzmann * beta);
}

double partition_function(double beta)
{
    require_positive_beta(beta, "partition_function");
    return std::exp(-0.5 * beta) / -std::expm1(-beta);
}

std::size_t required_cutoff(double beta)
{
    require_positive_beta(beta, "required_cutoff");
    // exp(-N beta) < tail * (1 - exp(-beta))
    const double bound = std::log(kTailBound) + std::log(-std::expm1(-beta));
    const double n = std::floor(-bound / beta) + 1.0;
    if (n > static_cast<double>(kMaxLevels))
        throw DomainError("required_cutoff: temperature too high, more than "
                          + std::to_string(kMaxLevels) + " levels needed");
    return std::max(kMinLevels, static_cast<std::size_t>(n));
}

std::vector<double> thermal_populations(double beta, std::size_t cutoff)
{
    require_positive_beta(beta, "thermal_populations");
    if (cutoff < 1)
        throw DomainError("thermal_populations: cutoff must be at least 1");
    const double ground = -std::expm1(-beta);
    const double tail = std::exp(-static_cast<double>(cutoff) * beta);
    if (tail >= kTailBound * ground)
        throw DomainError("thermal_populations: cutoff " + std::to_string(cutoff)
                          + " truncates more than 1e-12 of the Boltzmann weight (need "
                          + std::to_string(required_cutoff(beta)) + ")");

    std::vector<double> p(cutoff);
    for (std::size_t n = 0; n < cutoff; ++n)
        p[n] = std::exp(-static_cast<double>(n) * beta) * ground;
    const double norm = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto& x : p)
        x /= norm;
    return p;
}

double mean_energy_quanta(double beta)
{
    require_positive_beta(beta, "mean_energy_quanta");
    return 0.5 + 1.0 / std::expm1(beta);
}

double entropy_kb(double beta)
{
    require_positive_beta(beta, "entropy_kb");
    return beta / std::expm1(beta) - std::log(-std::expm1(-beta));
}

double pressure_factor(double beta)
{
    require_positive_beta(beta, "pressure_factor");
    // sinh(b) / (cosh(b) - 1) == coth(b / 2), which does not overflow.
    return 1.0 / std::tanh(0.5 * beta);
}

// --- OscillatorState ---------------------------------------------------------

OscillatorState::OscillatorState(double omega, std::optional<double> temperature,
                                 std::shared_ptr<const std::vector<double>> populations)
    : omega_(omega), temperature_(temperature), populations_(std::move(populations))
{
    if (!(omega_ > 0.0) || !std::isfinite(omega_))
        throw DomainError("OscillatorState: omega must be positive");
    if (temperature_ && !(*temperature_ > 0.0))
        throw DomainError("OscillatorState: temperature must be positive");
    if (!populations_ || populations_->empty())
        throw DomainError("OscillatorState: empty population list");
    double sum = 0.0;
    for (double p : *populations_) {
        if (!(p >= 0.0))
            throw DomainError("OscillatorState: negative population");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw DomainError("OscillatorState: populations sum to " + std::to_string(sum));
}

OscillatorState OscillatorState::thermal(double omega, double temperature)
{
    return thermal(omega, temperature, required_cutoff(beta_of(omega, temperature)));
}

OscillatorState OscillatorState::thermal(double omega, double temperature, std::size_t cutoff)
{
    const double beta = beta_of(omega, temperature);
    return OscillatorState(omega, temperature,
                           std::make_shared<const std::vector<double>>(
                               thermal_populations(beta, cutoff)));
}

OscillatorState OscillatorState::from_populations(double omega, std::vector<double> populations)
{
    return OscillatorState(omega, std::nullopt,
                           std::make_shared<const std::vector<double>>(std::move(populations)));
}

OscillatorState OscillatorState::with_frozen_populations(double new_omega) const
{
    std::optional<double> t;
    if (temperature_)
        t = *temperature_ * (new_omega / omega_);
    return OscillatorState(new_omega, t, populations_);
}

std::optional<double> OscillatorState::beta() const
{
    if (!temperature_)
        return std::nullopt;
    return beta_of(omega_, *temperature_);
}

// --- observables -------------------------------------------------------------

double mean_energy(const OscillatorState& state)
{
    double quanta = 0.0;
    const auto p = state.populations();
    for (std::size_t n = 0; n < p.size(); ++n)
        quanta += p[n] * (static_cast<double>(n) + 0.5);
    return kHbar * state.omega() * quanta;
}

double entropy(const OscillatorState& state)
{
    double s = 0.0;
    for (double p : state.populations())
        if (p > 0.0)
            s -= p * std::log(p);
    return kBoltzmann * s;
}

double harmonic_length(double omega, double mass)
{
    return std::sqrt(kHbar / (mass * omega));
}

double zero_point_pressure(double omega, double mass)
{
    return std::sqrt(kHbar * mass * omega * omega * omega);
}

double quantum_pressure(double omega, double temperature, double mass)
{
    if (!(mass > 0.0))
        throw DomainError("quantum_pressure: mass must be positive");
    return zero_point_pressure(omega, mass) * pressure_factor(beta_of(omega, temperature));
}

double quantum_pressure(const OscillatorState& state, double mass)
{
    if (!state.is_thermal())
        throw DomainError("quantum_pressure: state is not thermal");
    return quantum_pressure(state.omega(), *state.temperature(), mass);
}

double isobaric_temperature(double pressure, double omega, double mass)
{
    if (!(omega > 0.0) || !(mass > 0.0))
        throw DomainError("isobaric_temperature: omega and mass must be positive");
    const double floor = zero_point_pressure(omega, mass);
    if (!(pressure > floor))
        throw DomainError("isobaric_temperature: pressure " + std::to_string(pressure)
                          + " N is at or below the zero-point floor "
                          + std::to_string(floor) + " N");
    // beta = ln((P + f) / (P - f))
    const double beta = std::log1p(2.0 * floor / (pressure - floor));
    if (!(beta > 0.0))
        throw DomainError("isobaric_temperature: temperature diverges");
    return kHbar * omega / (kBoltzmann * beta);
}

ThermoSnapshot snapshot(const OscillatorState& state, double mass)
{
    return {
        mean_energy(state),
        entropy(state),
        quantum_pressure(state, mass),
        harmonic_length(state.omega(), mass),
    };
}

}  // namespace uae::thermo
