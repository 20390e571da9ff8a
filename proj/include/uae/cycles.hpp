#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "uae/friction.hpp"
#include "uae/ramp.hpp"
#include "uae/strokes.hpp"

namespace uae::cycles {

enum class Engine { QCE, QOE, QDE };

std::string_view to_string(Engine engine);
std::optional<Engine> engine_from_string(std::string_view name);

struct NumericsSpec {
    std::size_t steps_per_stroke = stroke::kDefaultSteps;
    stroke::RampOptions ramp{};
    double min_time_tolerance = 1e-6;  // s
    friction::CollisionModel collisions{};
    friction::AlphaMass alpha_mass = friction::AlphaMass::bath;
};

/// Full description of one engine cycle.
///
/// The ratio fields are read per engine:
///   QCE  temperature_ratio = T2/T1, expansion_ratio = w_B/w_A
///   QOE  temperature_ratio = T_B/T_A, frequency_ratio = w_D/w_A
///   QDE  expansion_ratio = w_A/w_B, frequency_ratio = w_D/w_A
/// The bath temperature is taken from start_temperature; bath.mean_trap_frequency
/// is the bath trap at stage A.
struct CycleSpec {
    Engine engine = Engine::QCE;
    double start_temperature = 1.1e-6;  // K
    std::optional<double> start_omega;  // rad/s; default 2 k_B T_A / hbar
    double temperature_ratio = 0.25;
    double expansion_ratio = 0.5;
    double frequency_ratio = 0.25;
    double contact_stroke_time = 1e-3;  // s
    friction::BathSpec bath{};
    friction::MixtureSpec mixture = friction::MixtureSpec::potassium41_rubidium87();
    friction::TweezerSpec tweezer{};
    NumericsSpec numerics{};

    double omega_a() const;

    /// Benchmark configuration: T_A = 1.1 uK, 1e6 bath atoms at 2 pi x 2 kHz,
    /// 1 ms contact strokes, 7 mW / 1 um tweezer, eta_max = 0.75.
    static CycleSpec reference(Engine engine);
};

/// A stroke as placed in the cycle, with the bath trace and friction.
struct StrokeRecord {
    stroke::StrokeResult stroke;
    double start_time = 0.0;          // s, within the cycle
    std::vector<double> bath_omega;   // rad/s, aligned with stroke.times
    std::optional<friction::FrictionLedger> friction;
};

struct CycleResult {
    Engine engine = Engine::QCE;
    std::vector<StrokeRecord> strokes;
    double net_work_extracted = 0.0;  // J, -sum of work on the fluid
    double heat_in = 0.0;             // J, sum of positive stroke heats
    double cycle_time = 0.0;          // s
    double eta_max = 0.0;
    double survival = 1.0;
    double eta_real = 0.0;
    double power = 0.0;               // J/s
    double hot_temperature = 0.0;     // K, fluid temperature at B
    double cold_temperature = 0.0;    // K, fluid temperature at D
    double energy_ratio = 0.0;        // <E>(D) / <E>(B)
    double eta_at_max_power = 0.0;
    double curzon_ahlborn = 0.0;
    double atom_bath_rate = 0.0;      // 1/s, slowest contact stroke
    double photon_rate = 0.0;         // 1/s, at the tightest tweezer setting

    double power_kb_mk_per_s() const;
};

CycleResult run_qce(const CycleSpec& spec);
CycleResult run_qoe(const CycleSpec& spec);
CycleResult run_qde(const CycleSpec& spec);
CycleResult run_cycle(const CycleSpec& spec);

/// eta = 1 - r [x^(3/2) - 1] / [3 (x^(1/2) - 1)], x = w_A/w_B, r = w_D/w_A.
/// Continuous at x = 1 where it equals the Otto value 1 - r.
double qde_efficiency(double expansion_ratio, double frequency_ratio);

/// Expansion ratio x > 1 at which qde_efficiency(x, frequency_ratio) = eta_target.
double solve_qde_expansion_ratio(double eta_target, double frequency_ratio);

double efficiency_at_max_power(double gamma);
double curzon_ahlborn(double t_cold, double t_hot);
double real_efficiency(double eta_max, double survival);

}  // namespace uae::cycles
