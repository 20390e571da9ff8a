#include "uae/scan.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <thread>

#include "uae/errors.hpp"

namespace uae::scan {

using cycles::CycleSpec;
using cycles::Engine;

std::string_view to_string(SweptParameter p)
{
    switch (p) {
    case SweptParameter::start_temperature: return "start_temperature";
    case SweptParameter::stroke_time: return "stroke_time";
    case SweptParameter::eta_max: return "eta_max";
    }
    return "unknown";
}

std::optional<SweptParameter> parameter_from_string(std::string_view name)
{
    for (auto p : {SweptParameter::start_temperature, SweptParameter::stroke_time,
                   SweptParameter::eta_max})
        if (to_string(p) == name)
            return p;
    return std::nullopt;
}

const std::vector<std::string>& scan_columns()
{
    static const std::vector<std::string> cols{
        "parameter_value", "stroke_time", "eta_max",     "eta_real",
        "ratio",           "power",       "survival",    "atom_bath_rate",
        "photon_rate",     "net_work",    "cycle_time",  "status",
    };
    return cols;
}

CycleSpec apply_parameter(const CycleSpec& base, SweptParameter p, double value)
{
    CycleSpec s = base;
    switch (p) {
    case SweptParameter::start_temperature:
        s.start_temperature = value;
        s.start_omega.reset();
        break;
    case SweptParameter::stroke_time:
        s.contact_stroke_time = value;
        break;
    case SweptParameter::eta_max:
        switch (s.engine) {
        case Engine::QCE: s.temperature_ratio = 1.0 - value; break;
        case Engine::QOE: s.frequency_ratio = 1.0 - value; break;
        case Engine::QDE:
            s.expansion_ratio = cycles::solve_qde_expansion_ratio(value, s.frequency_ratio);
            break;
        }
        break;
    }
    return s;
}

ScanRow make_row(double parameter_value, const CycleSpec& spec, const cycles::CycleResult& r)
{
    ScanRow row;
    row.parameter_value = parameter_value;
    row.stroke_time = spec.contact_stroke_time;
    row.eta_max = r.eta_max;
    row.eta_real = r.eta_real;
    row.ratio = r.eta_max > 0.0 ? r.eta_real / r.eta_max : r.survival;
    row.power = r.power_kb_mk_per_s();
    row.survival = r.survival;
    row.atom_bath_rate = r.atom_bath_rate;
    row.photon_rate = r.photon_rate;
    row.net_work = r.net_work_extracted;
    row.cycle_time = r.cycle_time;
    return row;
}

namespace {

ScanRow failed_row(double parameter_value, double stroke_time, std::string reason)
{
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    ScanRow row{parameter_value, stroke_time, nan, nan, nan, nan, nan, nan, nan, nan, nan, {}};
    std::replace(reason.begin(), reason.end(), ',', ';');
    std::replace(reason.begin(), reason.end(), '\n', ' ');
    row.status = "error: " + reason;
    return row;
}

ScanRow evaluate(const CycleSpec& base, SweptParameter p, double value)
{
    try {
        const auto spec = apply_parameter(base, p, value);
        return make_row(value, spec, cycles::run_cycle(spec));
    } catch (const DomainError& e) {
        const double t = p == SweptParameter::stroke_time ? value : base.contact_stroke_time;
        return failed_row(value, t, e.what());
    }
}

template <class Job>
auto run_ordered(const std::vector<Job>& jobs)
{
    using Row = decltype(jobs.front()());
    std::vector<Row> out(jobs.size());
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(jobs.size(), std::thread::hardware_concurrency()));
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        futures.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < jobs.size(); i += workers)
                out[i] = jobs[i]();
        }));
    for (auto& f : futures)
        f.get();
    return out;
}

}  // namespace

std::vector<ScanRow> scan(const ScanRequest& request)
{
    if (request.grid.empty())
        throw DomainError("scan: empty grid");
    for (std::size_t i = 1; i < request.grid.size(); ++i)
        if (!(request.grid[i] > request.grid[i - 1]))
            throw DomainError("scan: grid must be strictly increasing");

    CycleSpec base = request.base_spec;
    base.engine = request.engine;
    std::vector<double> series = request.series_stroke_times;
    if (series.empty())
        series.push_back(base.contact_stroke_time);

    std::vector<std::function<ScanRow()>> jobs;
    for (double t : series) {
        CycleSpec b = base;
        b.contact_stroke_time = t;
        for (double v : request.grid)
            jobs.emplace_back([b, v, p = request.swept_parameter] { return evaluate(b, p, v); });
    }
    return run_ordered(jobs);
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count)
{
    if (!(lo > 0.0) || !(hi > lo) || count < 2)
        throw DomainError("log_spaced: need 0 < lo < hi and count >= 2");
    std::vector<double> v(count);
    const double step = std::log(hi / lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        v[i] = lo * std::exp(step * static_cast<double>(i));
    v.back() = hi;
    return v;
}

WorkingPointGrid WorkingPointGrid::standard()
{
    return {log_spaced(0.2e-6, 3e-6, 30), {0.5e-3, 1e-3, 2e-3, 5e-3}};
}

WorkingPoint optimize_working_point(const CycleSpec& base, double margin,
                                    const WorkingPointGrid& grid)
{
    if (!(margin >= 0.0))
        throw DomainError("optimize_working_point: margin must be non-negative");
    if (grid.start_temperatures.empty() || grid.stroke_times.empty())
        throw DomainError("optimize_working_point: empty grid");

    struct Candidate {
        CycleSpec spec;
        ScanRow row;
    };
    std::vector<std::function<Candidate()>> jobs;
    for (double t : grid.stroke_times)
        for (double temp : grid.start_temperatures)
            jobs.emplace_back([&base, t, temp] {
                CycleSpec s = apply_parameter(base, SweptParameter::start_temperature, temp);
                s.contact_stroke_time = t;
                try {
                    return Candidate{s, make_row(temp, s, cycles::run_cycle(s))};
                } catch (const DomainError& e) {
                    return Candidate{s, failed_row(temp, t, e.what())};
                }
            });
    const auto candidates = run_ordered(jobs);

    WorkingPoint best;
    best.evaluated = candidates.size();
    const Candidate* pick = nullptr;
    for (const auto& c : candidates) {
        if (!c.row.ok() || !(c.row.atom_bath_rate >= margin * c.row.photon_rate))
            continue;
        ++best.feasible_points;
        if (!pick) {
            pick = &c;
            continue;
        }
        const auto& p = pick->row;
        const auto& r = c.row;
        const bool better = r.power > p.power
                            || (r.power == p.power
                                && (r.eta_real > p.eta_real
                                    || (r.eta_real == p.eta_real && r.stroke_time < p.stroke_time)));
        if (better)
            pick = &c;
    }
    if (pick) {
        best.feasible = true;
        best.spec = pick->spec;
        best.row = pick->row;
    }
    return best;
}

}  // namespace uae::scan
