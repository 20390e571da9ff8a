#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "uae/cycles.hpp"
#include "uae/ramp.hpp"
#include "uae/scan.hpp"

namespace uae::io {

enum class LogLevel { quiet, info, debug };

/// Reads UAE_LOG; unset means info. Unknown values throw ConfigError.
LogLevel log_level_from_env();
void set_log_level(LogLevel level);
LogLevel log_level();
void log(LogLevel level, std::string_view message);

/// Shortest-safe round-trip text: 17 significant digits, '.' separator,
/// independent of the global locale. NaN and infinities print as nan/inf/-inf.
std::string format_number(double value);

/// Writes to a sibling temporary file, then renames it over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view content);

/// Per-sample trajectory of a cycle:
/// time_s, omega_fluid_rad_s, omega_bath_rad_s, temperature_K, entropy_kB,
/// pressure_N, stroke_kind, bath_contact
std::string cycle_csv(const cycles::CycleResult& result, double fluid_mass);

struct StrokeSummary {
    std::string kind;
    double start_time = 0.0;
    double duration = 0.0;
    double work_on_fluid = 0.0;
    double heat_into_fluid = 0.0;
    double entropy_change = 0.0;
    bool bath_contact = false;
    double survival = 1.0;
    double scattering_length = 0.0;
    double elastic_rate = 0.0;

    bool operator==(const StrokeSummary&) const = default;
};

/// Scalar content of a CycleResult (trajectories live in cycle.csv).
struct CycleSummary {
    std::string engine;
    double net_work = 0.0;
    double heat_in = 0.0;
    double cycle_time = 0.0;
    double eta_max = 0.0;
    double survival = 1.0;
    double eta_real = 0.0;
    double power = 0.0;
    double power_kb_mk_per_s = 0.0;
    double hot_temperature = 0.0;
    double cold_temperature = 0.0;
    double energy_ratio = 0.0;
    double eta_at_max_power = 0.0;
    double curzon_ahlborn = 0.0;
    double atom_bath_rate = 0.0;
    double photon_rate = 0.0;
    std::vector<StrokeSummary> strokes;

    bool operator==(const CycleSummary&) const = default;
};

CycleSummary summarize(const cycles::CycleResult& result);
nlohmann::json to_json(const CycleSummary& summary);
CycleSummary summary_from_json(const nlohmann::json& j);

std::string scan_csv(const std::vector<scan::ScanRow>& rows);
std::vector<scan::ScanRow> parse_scan_csv(std::string_view text);

/// gnuplot script plotting eta_real against the swept parameter, one curve
/// per stroke time.
std::string gnuplot_script(std::string_view csv_name, scan::SweptParameter parameter,
                           const std::vector<double>& series_stroke_times);

nlohmann::json to_json(const scan::WorkingPoint& point);

/// time_s, omega_rad_s, b, b_ddot
std::string ramp_csv(const stroke::RampSchedule& ramp);

struct RampRow {
    double time;
    double omega;
    double b;
    double b_ddot;
};
std::vector<RampRow> parse_ramp_csv(std::string_view text);

}  // namespace uae::io
