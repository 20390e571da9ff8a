#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace uae::thermo {

/// Largest tolerated Boltzmann weight left outside the level cutoff.
inline constexpr double kTailBound = 1e-12;
inline constexpr std::size_t kMinLevels = 64;

/// beta = hbar * omega / (k_B * T)
double beta_of(double omega, double temperature);
double temperature_of(double omega, double beta);

/// Z for E_n = hbar omega (n + 1/2), summed over all levels.
double partition_function(double beta);

/// Smallest N with exp(-N beta) / (1 - exp(-beta)) < kTailBound, never below
/// kMinLevels.
std::size_t required_cutoff(double beta);

/// Boltzmann populations over `cutoff` levels, renormalised to sum to one.
/// Throws DomainError if `cutoff` leaves more than kTailBound of weight out.
std::vector<double> thermal_populations(double beta, std::size_t cutoff);

// Closed forms, dimensionless.
double mean_energy_quanta(double beta);  // <E> / (hbar omega)
double entropy_kb(double beta);          // S / k_B
double pressure_factor(double beta);     // sinh(beta) / (cosh(beta) - 1)

/// Level populations of the working fluid at a given trap frequency.
///
/// A state is either thermal (Boltzmann at `temperature`) or carries an
/// arbitrary distribution with no temperature. Adiabatic evolution keeps a
/// thermal state thermal, so in practice every state the engine produces has
/// a temperature. The population buffer is shared between copies.
class OscillatorState {
  public:
    static OscillatorState thermal(double omega, double temperature);
    static OscillatorState thermal(double omega, double temperature, std::size_t cutoff);
    static OscillatorState from_populations(double omega, std::vector<double> populations);

    /// Same populations at a new trap frequency. The temperature, when
    /// present, is rescaled by new_omega / omega so beta is unchanged.
    [[nodiscard]] OscillatorState with_frozen_populations(double new_omega) const;

    double omega() const { return omega_; }
    std::optional<double> temperature() const { return temperature_; }
    std::optional<double> beta() const;
    bool is_thermal() const { return temperature_.has_value(); }
    std::span<const double> populations() const { return *populations_; }
    std::size_t level_cutoff() const { return populations_->size(); }

  private:
    OscillatorState(double omega, std::optional<double> temperature,
                    std::shared_ptr<const std::vector<double>> populations);

    double omega_;
    std::optional<double> temperature_;
    std::shared_ptr<const std::vector<double>> populations_;
};

struct ThermoSnapshot {
    double mean_energy;      // J
    double entropy;          // J/K
    double pressure;         // N
    double harmonic_length;  // m
};

/// sum_n P_n hbar omega (n + 1/2)
double mean_energy(const OscillatorState& state);
/// -k_B sum_n P_n ln P_n
double entropy(const OscillatorState& state);

double harmonic_length(double omega, double mass);
/// sqrt(hbar m omega^3): the pressure of the ground state.
double zero_point_pressure(double omega, double mass);

/// Generalised force conjugate to the oscillator length,
/// -sum_n P_n dE_n/da_ho = sqrt(hbar m omega^3) sinh(beta) / (cosh(beta) - 1).
double quantum_pressure(const OscillatorState& state, double mass);
/// Same quantity from (omega, T) without building populations.
double quantum_pressure(double omega, double temperature, double mass);

/// Temperature that holds `pressure` at trap frequency `omega`; inverse of
/// quantum_pressure at fixed omega.
double isobaric_temperature(double pressure, double omega, double mass);

ThermoSnapshot snapshot(const OscillatorState& state, double mass);

}  // namespace uae::thermo
