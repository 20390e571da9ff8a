#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uae/cycles.hpp"

namespace uae::scan {

enum class SweptParameter { start_temperature, stroke_time, eta_max };

std::string_view to_string(SweptParameter p);
std::optional<SweptParameter> parameter_from_string(std::string_view name);

struct ScanRequest {
    cycles::Engine engine = cycles::Engine::QCE;
    SweptParameter swept_parameter = SweptParameter::start_temperature;
    /// SI units: K, s, or dimensionless.
    std::vector<double> grid;
    cycles::CycleSpec base_spec{};
    /// Repeat the sweep once per contact-stroke time (one series each). Empty
    /// means a single series at base_spec.contact_stroke_time.
    std::vector<double> series_stroke_times;
};

/// One grid point. Rows whose cycle could not be built carry the reason in
/// `status` and NaN in the numeric fields.
struct ScanRow {
    double parameter_value = 0.0;
    double stroke_time = 0.0;     // s
    double eta_max = 0.0;
    double eta_real = 0.0;
    double ratio = 0.0;           // eta_real / eta_max
    double power = 0.0;           // k_B mK/s
    double survival = 0.0;
    double atom_bath_rate = 0.0;  // 1/s
    double photon_rate = 0.0;     // 1/s
    double net_work = 0.0;        // J
    double cycle_time = 0.0;      // s
    std::string status = "ok";

    bool ok() const { return status == "ok"; }
};

/// Column names, in CSV order; identical to the ScanRow members.
const std::vector<std::string>& scan_columns();

/// Spec with one swept parameter replaced. For eta_max the engine decides
/// what moves: T2/T1 (QCE), w_D/w_A (QOE), or w_A/w_B at fixed w_D/w_A (QDE).
cycles::CycleSpec apply_parameter(const cycles::CycleSpec& base, SweptParameter p, double value);

ScanRow make_row(double parameter_value, const cycles::CycleSpec& spec,
                 const cycles::CycleResult& result);

/// Grid points are evaluated concurrently and assembled in grid order
/// (series-major).
std::vector<ScanRow> scan(const ScanRequest& request);

std::vector<double> log_spaced(double lo, double hi, std::size_t count);

struct WorkingPointGrid {
    std::vector<double> start_temperatures;  // K
    std::vector<double> stroke_times;        // s

    /// 30 log-spaced temperatures in [0.2, 3] uK; stroke times {0.5, 1, 2, 5} ms.
    static WorkingPointGrid standard();
};

struct WorkingPoint {
    bool feasible = false;
    std::optional<cycles::CycleSpec> spec;
    std::optional<ScanRow> row;
    std::size_t evaluated = 0;
    std::size_t feasible_points = 0;
};

/// Highest-power point of the grid with atom_bath_rate >= margin * photon_rate.
/// Ties go to larger eta_real, then shorter stroke time.
WorkingPoint optimize_working_point(const cycles::CycleSpec& base, double margin,
                                    const WorkingPointGrid& grid = WorkingPointGrid::standard());

}  // namespace uae::scan
