#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "uae/cycles.hpp"
#include "uae/scan.hpp"

namespace uae::config {

struct OutputPaths {
    std::string cycle_csv = "cycle.csv";
    std::string summary_json = "summary.json";
    std::string scan_csv = "scan.csv";
    std::string plot_script = "scan.gp";
    std::string ramp_csv = "ramp.csv";
    std::string working_point_json = "working_point.json";
};

struct ScanSettings {
    scan::SweptParameter parameter = scan::SweptParameter::start_temperature;
    std::vector<double> grid;                 // SI
    std::vector<double> series_stroke_times;  // s
};

struct OptimizeSettings {
    double margin = 10.0;
    scan::WorkingPointGrid grid = scan::WorkingPointGrid::standard();
};

struct RunConfig {
    cycles::CycleSpec cycle;
    std::optional<ScanSettings> scan;
    std::optional<OptimizeSettings> optimize;
    OutputPaths output;

    scan::ScanRequest scan_request() const;
};

/// Parses a run configuration. Keys carry their unit as a suffix
/// (start_temperature_uK, trap_frequency_hz, ...); frequencies are ordinary
/// frequencies, not angular. Missing keys take the engine's reference value.
/// Unknown keys and wrong types raise ConfigError.
RunConfig parse(const nlohmann::json& doc);
RunConfig load(const std::filesystem::path& path);

/// Inverse of parse: every field written out explicitly.
nlohmann::json to_json(const RunConfig& config);

}  // namespace uae::config
