#include "uae/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "uae/constants.hpp"
#include "uae/errors.hpp"

namespace uae::cycles {

using stroke::StrokeResult;
using thermo::OscillatorState;

std::string_view to_string(Engine engine)
{
    switch (engine) {
    case Engine::QCE: return "QCE";
    case Engine::QOE: return "QOE";
    case Engine::QDE: return "QDE";
    }
    return "unknown";
}

std::optional<Engine> engine_from_string(std::string_view name)
{
    if (name == "QCE")
        return Engine::QCE;
    if (name == "QOE")
        return Engine::QOE;
    if (name == "QDE")
        return Engine::QDE;
    return std::nullopt;
}

double CycleSpec::omega_a() const
{
    if (start_omega)
        return *start_omega;
    return 2.0 * kBoltzmann * start_temperature / kHbar;
}

CycleSpec CycleSpec::reference(Engine engine)
{
    CycleSpec s;
    s.engine = engine;
    s.start_temperature = 1.1e-6;
    s.contact_stroke_time = 1e-3;
    s.bath.atom_number = 1e6;
    s.bath.mean_trap_frequency = kTwoPi * 2e3;
    s.bath.temperature = s.start_temperature;
    s.tweezer = {1e-6, 7e-3, s.mixture.selective_wavelength};
    switch (engine) {
    case Engine::QCE:
        s.temperature_ratio = 0.25;
        s.expansion_ratio = 0.5;
        break;
    case Engine::QOE:
        s.temperature_ratio = 2.0;
        s.frequency_ratio = 0.25;
        break;
    case Engine::QDE:
        s.frequency_ratio = 0.9 * 0.25;
        s.expansion_ratio = solve_qde_expansion_ratio(0.75, s.frequency_ratio);
        break;
    }
    return s;
}

double CycleResult::power_kb_mk_per_s() const
{
    return power / kBoltzmann / kMilliKelvin;
}

// --- closed forms ------------------------------------------------------------

double qde_efficiency(double expansion_ratio, double frequency_ratio)
{
    if (!(expansion_ratio > 0.0))
        throw DomainError("qde_efficiency: expansion ratio must be positive");
    // [x^(3/2) - 1] / [3 (x^(1/2) - 1)] = (y^2 + y + 1) / 3 with y = sqrt(x)
    const double y = std::sqrt(expansion_ratio);
    return 1.0 - frequency_ratio * (y * y + y + 1.0) / 3.0;
}

double solve_qde_expansion_ratio(double eta_target, double frequency_ratio)
{
    if (!(eta_target > 0.0 && eta_target < 1.0))
        throw DomainError("solve_qde_expansion_ratio: eta_target must lie in (0, 1)");
    if (!(frequency_ratio > 0.0 && frequency_ratio < 1.0))
        throw DomainError("solve_qde_expansion_ratio: frequency ratio must lie in (0, 1)");
    double lo = 1.0;
    double hi = 100.0;
    const auto f = [&](double x) { return qde_efficiency(x, frequency_ratio) - eta_target; };
    if (!(f(lo) > 0.0) || !(f(hi) <= 0.0))
        throw DomainError("solve_qde_expansion_ratio: no root in (1, 100] for eta "
                          + std::to_string(eta_target) + ", ratio "
                          + std::to_string(frequency_ratio));
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double efficiency_at_max_power(double gamma)
{
    if (!(gamma >= 0.0))
        throw DomainError("efficiency_at_max_power: gamma must be non-negative");
    return 1.0 - (gamma + std::sqrt(4.0 * gamma * (1.0 + gamma))) / (2.0 + gamma);
}

double curzon_ahlborn(double t_cold, double t_hot)
{
    if (!(t_cold > 0.0) || !(t_cold <= t_hot))
        throw DomainError("curzon_ahlborn: need 0 < t_cold <= t_hot");
    return 1.0 - std::sqrt(t_cold / t_hot);
}

double real_efficiency(double eta_max, double survival)
{
    if (!(eta_max >= 0.0 && eta_max <= 1.0) || !(survival >= 0.0 && survival <= 1.0))
        throw DomainError("real_efficiency: arguments must lie in [0, 1]");
    return eta_max * survival;
}

// --- cycle assembly ----------------------------------------------------------

namespace {

void require_range(double v, double lo, double hi, const std::string& what)
{
    if (!(v > lo && v <= hi))
        throw DomainError(what + " = " + std::to_string(v) + " outside (" + std::to_string(lo)
                          + ", " + std::to_string(hi) + "]");
}

/// Accumulates strokes, keeps the bath trace, and closes the books.
class CycleBuilder {
  public:
    explicit CycleBuilder(const CycleSpec& spec)
        : spec_(spec),
          t_a_(spec.start_temperature),
          bath_a_(spec.bath.rescaled(1.0, spec.start_temperature)),
          radial_over_axial_(std::sqrt(2.0) * friction::rayleigh_range(spec.tweezer)
                             / spec.tweezer.waist)
    {
        if (!(t_a_ > 0.0))
            throw DomainError("cycle: start temperature must be positive");
        if (!(bath_a_.mean_trap_frequency > 0.0))
            throw DomainError("cycle: bath trap frequency must be positive");
        if (!(spec.contact_stroke_time > 0.0))
            throw DomainError("cycle: contact stroke time must be positive");
        result_.engine = spec.engine;
    }

    OscillatorState start_state() const
    {
        return OscillatorState::thermal(spec_.omega_a(), t_a_);
    }

    /// Bath trap frequency that holds the bath at `temperature`; the bath is
    /// compressed and released self-similarly, so T scales with its trap.
    double bath_omega(double temperature) const
    {
        return bath_a_.mean_trap_frequency * temperature / t_a_;
    }

    void add_contact(StrokeResult s)
    {
        StrokeRecord rec;
        rec.start_time = clock_;
        std::vector<friction::ContactSample> samples;
        samples.reserve(s.times.size());
        rec.bath_omega.reserve(s.times.size());
        for (std::size_t k = 0; k < s.times.size(); ++k) {
            const auto& st = s.trajectory[k];
            const double t = *st.temperature();
            rec.bath_omega.push_back(bath_omega(t));
            samples.push_back({s.times[k], bath_a_.rescaled(t / t_a_, t),
                               friction::fluid_widths(st.omega(), t, spec_.mixture.fluid_mass,
                                                      radial_over_axial_)});
        }
        rec.friction = friction::contact_friction(samples, spec_.mixture,
                                                  spec_.numerics.collisions,
                                                  spec_.numerics.alpha_mass);
        clock_ += s.duration;
        rec.stroke = std::move(s);
        result_.strokes.push_back(std::move(rec));
    }

    /// Decoupled stroke to `end_omega`. The bath is ramped in parallel by the
    /// same ratio; the stroke lasts as long as the slower of the two ramps.
    void add_adiabatic(const OscillatorState& from, double end_omega)
    {
        const auto& num = spec_.numerics;
        stroke::MinTimeOptions mt{num.min_time_tolerance, num.ramp};
        const double t_from = *from.temperature();
        const double t_to = t_from * end_omega / from.omega();
        const double bath_from = bath_omega(t_from);
        const double bath_to = bath_omega(t_to);

        const double duration =
            std::max({stroke::min_ramp_time(from.omega(), end_omega, mt),
                      stroke::min_ramp_time(bath_from, bath_to, mt), num.min_time_tolerance});
        const auto fluid_ramp = stroke::superadiabatic_ramp(from.omega(), end_omega, duration, num.ramp);
        const auto bath_ramp = stroke::superadiabatic_ramp(bath_from, bath_to, duration, num.ramp);
        if (!bath_ramp.valid)
            throw DomainError("cycle: bath ramp inverts the bath trap");

        StrokeRecord rec;
        rec.start_time = clock_;
        rec.stroke = stroke::adiabatic_stroke(from, fluid_ramp);
        rec.bath_omega.reserve(bath_ramp.samples.size());
        for (const auto& s : bath_ramp.samples)
            rec.bath_omega.push_back(s.omega);
        clock_ += duration;
        result_.strokes.push_back(std::move(rec));
    }

    const OscillatorState& current() const { return result_.strokes.back().stroke.final(); }

    CycleResult finish()
    {
        auto& r = result_;
        double work = 0.0;
        double heat = 0.0;
        for (const auto& rec : r.strokes) {
            work += rec.stroke.work_on_fluid;
            heat += rec.stroke.heat_into_fluid;
            if (rec.stroke.heat_into_fluid > 0.0)
                r.heat_in += rec.stroke.heat_into_fluid;
            if (rec.friction)
                r.survival *= rec.friction->survival;
        }
        check_closure();

        r.net_work_extracted = -work;
        // Energy bookkeeping: the cycle returns to its start, so heat and work cancel.
        const double scale = std::max({std::abs(work), std::abs(heat), r.heat_in,
                                       std::numeric_limits<double>::min()});
        if (std::abs(work + heat) > 1e-8 * scale && std::abs(work + heat) > 1e-30)
            throw DomainError("cycle: energy ledger does not balance");

        r.cycle_time = clock_;
        r.eta_max = r.heat_in > 0.0 ? std::clamp(r.net_work_extracted / r.heat_in, 0.0, 1.0) : 0.0;
        r.eta_real = real_efficiency(r.eta_max, r.survival);
        r.power = r.net_work_extracted / r.cycle_time;

        const auto& b = r.strokes[1].stroke.initial();
        const auto& d = r.strokes[3].stroke.initial();
        r.hot_temperature = *b.temperature();
        r.cold_temperature = *d.temperature();
        r.energy_ratio = thermo::mean_energy(d) / thermo::mean_energy(b);
        r.eta_at_max_power = efficiency_at_max_power(r.energy_ratio);
        if (r.cold_temperature <= r.hot_temperature)
            r.curzon_ahlborn = curzon_ahlborn(r.cold_temperature, r.hot_temperature);

        r.atom_bath_rate = std::numeric_limits<double>::infinity();
        double omega_max = 0.0;
        for (const auto& rec : r.strokes) {
            if (rec.friction)
                r.atom_bath_rate = std::min(r.atom_bath_rate, rec.friction->elastic_rate);
            for (const auto& st : rec.stroke.trajectory)
                omega_max = std::max(omega_max, st.omega());
        }
        auto tweezer = spec_.tweezer;
        tweezer.power = friction::power_for_axial_frequency(spec_.tweezer, spec_.mixture, omega_max);
        r.photon_rate = friction::tweezer_trap(tweezer, spec_.mixture).photon_scatter_rate;
        return std::move(r);
    }

  private:
    void check_closure() const
    {
        const auto& first = result_.strokes.front().stroke.initial();
        const auto& last = result_.strokes.back().stroke.final();
        const double dw = std::abs(last.omega() - first.omega()) / first.omega();
        const double db = std::abs(*last.beta() - *first.beta()) / *first.beta();
        if (dw > 1e-8 || db > 1e-8)
            throw DomainError("cycle: final state does not return to the initial state");
    }

    const CycleSpec& spec_;
    double t_a_;
    friction::BathSpec bath_a_;
    double radial_over_axial_;
    double clock_ = 0.0;
    CycleResult result_;
};

}  // namespace

CycleResult run_qce(const CycleSpec& spec)
{
    require_range(spec.temperature_ratio, 0.0, 1.0, "QCE temperature ratio T2/T1");
    require_range(spec.expansion_ratio, 0.0, 1.0, "QCE expansion ratio w_B/w_A");

    CycleBuilder cycle(spec);
    const double t1 = spec.start_temperature;
    const double t2 = t1 * spec.temperature_ratio;
    const double w_a = spec.omega_a();
    const double w_b = w_a * spec.expansion_ratio;
    const double w_c = w_b * t2 / t1;
    const double w_d = w_a * t2 / t1;
    const std::size_t steps = spec.numerics.steps_per_stroke;

    cycle.add_contact(stroke::isothermal_stroke(t1, w_a, w_b, spec.contact_stroke_time, steps));
    cycle.add_adiabatic(cycle.current(), w_c);
    cycle.add_contact(stroke::isothermal_stroke(t2, w_c, w_d, spec.contact_stroke_time, steps));
    cycle.add_adiabatic(cycle.current(), w_a);
    return cycle.finish();
}

CycleResult run_qoe(const CycleSpec& spec)
{
    require_range(spec.frequency_ratio, 0.0, 1.0, "QOE frequency ratio w_D/w_A");
    const double t_a = spec.start_temperature;
    const double t_b = t_a * spec.temperature_ratio;
    const double t_d = t_a * spec.frequency_ratio;
    // T_B / T_D >= w_A / w_D; equality is the zero-work limit.
    if (!(t_b / t_d >= 1.0 / spec.frequency_ratio))
        throw DomainError("QOE closure violated: T_B/T_D = " + std::to_string(t_b / t_d)
                          + " must exceed w_A/w_D = " + std::to_string(1.0 / spec.frequency_ratio));

    CycleBuilder cycle(spec);
    const double w_a = spec.omega_a();
    const double w_d = w_a * spec.frequency_ratio;
    auto ramp = spec.numerics.ramp;
    ramp.steps = spec.numerics.steps_per_stroke;

    cycle.add_contact(stroke::isochoric_stroke(w_a, t_a, t_b, spec.contact_stroke_time,
                                               cycle.bath_omega(t_a), ramp));
    cycle.add_adiabatic(cycle.current(), w_d);
    const double t_c = *cycle.current().temperature();
    cycle.add_contact(stroke::isochoric_stroke(w_d, t_c, t_d, spec.contact_stroke_time,
                                               cycle.bath_omega(t_c), ramp));
    cycle.add_adiabatic(cycle.current(), w_a);
    return cycle.finish();
}

CycleResult run_qde(const CycleSpec& spec)
{
    const double x = spec.expansion_ratio;
    const double r = spec.frequency_ratio;
    if (!(x >= 1.0) || !std::isfinite(x))
        throw DomainError("QDE expansion ratio w_A/w_B must be at least 1");
    require_range(r, 0.0, 1.0, "QDE frequency ratio w_D/w_A");
    if (!(r * x <= 1.0))
        throw DomainError("QDE closure violated: w_D must not exceed w_B");

    CycleBuilder cycle(spec);
    const double t_a = spec.start_temperature;
    const double w_a = spec.omega_a();
    const double w_b = w_a / x;
    const double w_d = w_a * r;
    const double t_d = t_a * r;
    auto ramp = spec.numerics.ramp;
    ramp.steps = spec.numerics.steps_per_stroke;

    cycle.add_contact(stroke::isobaric_stroke(cycle.start_state(), w_b, spec.contact_stroke_time,
                                              spec.numerics.steps_per_stroke,
                                              spec.mixture.fluid_mass));
    cycle.add_adiabatic(cycle.current(), w_d);
    const double t_c = *cycle.current().temperature();
    cycle.add_contact(stroke::isochoric_stroke(w_d, t_c, t_d, spec.contact_stroke_time,
                                               cycle.bath_omega(t_c), ramp));
    cycle.add_adiabatic(cycle.current(), w_a);
    return cycle.finish();
}

CycleResult run_cycle(const CycleSpec& spec)
{
    switch (spec.engine) {
    case Engine::QCE: return run_qce(spec);
    case Engine::QOE: return run_qoe(spec);
    case Engine::QDE: return run_qde(spec);
    }
    throw DomainError("run_cycle: unknown engine");
}

}  // namespace uae::cycles
