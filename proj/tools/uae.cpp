// uae: command-line driver for the ultracold-atom engine simulator.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "uae/config.hpp"
#include "uae/constants.hpp"
#include "uae/cycles.hpp"
#include "uae/errors.hpp"
#include "uae/output.hpp"
#include "uae/ramp.hpp"
#include "uae/scan.hpp"

namespace fs = std::filesystem;
using namespace uae;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;

void prepare_dir(const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw ConfigError("cannot create output directory '" + dir.string() + "'");
}

int cmd_cycle(const fs::path& config_path, const fs::path& out)
{
    const auto rc = config::load(config_path);
    io::log(io::LogLevel::info, "running " + std::string(cycles::to_string(rc.cycle.engine))
                                    + " from " + config_path.string());
    const auto result = cycles::run_cycle(rc.cycle);
    prepare_dir(out);
    io::write_atomic(out / rc.output.cycle_csv, io::cycle_csv(result, rc.cycle.mixture.fluid_mass));
    io::write_atomic(out / rc.output.summary_json, io::to_json(io::summarize(result)).dump(2) + "\n");

    std::cout << "engine      " << cycles::to_string(result.engine) << '\n'
              << "eta_max     " << io::format_number(result.eta_max) << '\n'
              << "eta_real    " << io::format_number(result.eta_real) << '\n'
              << "survival    " << io::format_number(result.survival) << '\n'
              << "cycle_time  " << io::format_number(result.cycle_time) << " s\n"
              << "power       " << io::format_number(result.power_kb_mk_per_s()) << " kB mK/s\n";
    for (const auto& rec : result.strokes)
        io::log(io::LogLevel::debug,
                std::string(stroke::to_string(rec.stroke.kind)) + " t0="
                    + io::format_number(rec.start_time) + " dt="
                    + io::format_number(rec.stroke.duration) + " W="
                    + io::format_number(rec.stroke.work_on_fluid) + " Q="
                    + io::format_number(rec.stroke.heat_into_fluid));
    return kExitOk;
}

int cmd_scan(const fs::path& config_path, const fs::path& out)
{
    const auto rc = config::load(config_path);
    if (!rc.scan && !rc.optimize)
        throw ConfigError("scan needs a 'scan' or 'optimize' block in " + config_path.string());
    prepare_dir(out);

    if (rc.scan) {
        const auto request = rc.scan_request();
        io::log(io::LogLevel::info,
                "scanning " + std::string(scan::to_string(request.swept_parameter)) + " over "
                    + std::to_string(request.grid.size()) + " points x "
                    + std::to_string(std::max<std::size_t>(1, request.series_stroke_times.size()))
                    + " series");
        const auto rows = scan::scan(request);
        std::size_t failed = 0;
        for (const auto& r : rows)
            if (!r.ok()) {
                ++failed;
                io::log(io::LogLevel::debug, "grid point " + io::format_number(r.parameter_value)
                                                 + ": " + r.status);
            }
        io::write_atomic(out / rc.output.scan_csv, io::scan_csv(rows));
        io::write_atomic(out / rc.output.plot_script,
                         io::gnuplot_script(rc.output.scan_csv, request.swept_parameter,
                                            request.series_stroke_times));
        std::cout << "rows        " << rows.size() << '\n'
                  << "failed      " << failed << '\n';
    }
    if (rc.optimize) {
        io::log(io::LogLevel::info, "optimizing working point, margin "
                                        + io::format_number(rc.optimize->margin));
        const auto wp = scan::optimize_working_point(rc.cycle, rc.optimize->margin, rc.optimize->grid);
        io::write_atomic(out / rc.output.working_point_json, io::to_json(wp).dump(2) + "\n");
        if (wp.feasible)
            std::cout << "optimum     T_A=" << io::format_number(wp.row->parameter_value)
                      << " K t_f=" << io::format_number(wp.row->stroke_time)
                      << " s power=" << io::format_number(wp.row->power) << " kB mK/s\n";
        else
            std::cout << "optimum     infeasible (" << wp.evaluated << " points evaluated)\n";
    }
    return kExitOk;
}

int cmd_ramp(double start_hz, double end_hz, std::optional<double> duration, bool min_time,
             std::size_t steps, const fs::path& out)
{
    if (!(start_hz > 0.0) || !(end_hz > 0.0))
        throw ConfigError("frequencies must be positive");
    if (duration.has_value() == min_time)
        throw ConfigError("give exactly one of --duration or --min-time");
    if (duration && !(*duration > 0.0))
        throw ConfigError("--duration must be positive");
    const double w0 = kTwoPi * start_hz;
    const double wf = kTwoPi * end_hz;

    stroke::MinTimeOptions opts;
    opts.ramp.steps = steps;
    double t = duration.value_or(0.0);
    if (min_time) {
        const double t_min = stroke::min_ramp_time(w0, wf, opts);
        std::cout << "min_time_s  " << io::format_number(t_min) << '\n';
        t = std::max(t_min, opts.tolerance);
    }
    const auto ramp = stroke::superadiabatic_ramp(w0, wf, t, opts.ramp);
    if (!ramp.valid)
        throw DomainError("ramp of " + io::format_number(t)
                          + " s inverts the trap (min omega^2 = "
                          + io::format_number(ramp.min_omega_squared) + ")");
    prepare_dir(out);
    const auto path = out / "ramp.csv";
    io::write_atomic(path, io::ramp_csv(ramp));
    io::log(io::LogLevel::info, "wrote " + path.string());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ultracold-atom quantum heat engine simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;

    auto* cycle = app.add_subcommand("cycle", "Run one engine cycle");
    cycle->add_option("--config", config_path, "JSON run configuration")->required();
    cycle->add_option("--out", out_dir, "Output directory")->required();

    auto* scan_cmd = app.add_subcommand("scan", "Parameter sweep and working-point search");
    scan_cmd->add_option("--config", config_path, "JSON run configuration")->required();
    scan_cmd->add_option("--out", out_dir, "Output directory")->required();

    double start_hz = 0.0;
    double end_hz = 0.0;
    std::optional<double> duration;
    bool min_time = false;
    std::size_t steps = 512;
    auto* ramp = app.add_subcommand("ramp", "Super-adiabatic trap-frequency ramp");
    ramp->add_option("--start-freq", start_hz, "Start trap frequency (Hz)")->required();
    ramp->add_option("--end-freq", end_hz, "End trap frequency (Hz)")->required();
    auto* dur = ramp->add_option("--duration", duration, "Ramp duration (s)");
    auto* mt = ramp->add_flag("--min-time", min_time, "Use the shortest valid duration");
    dur->excludes(mt);
    ramp->add_option("--steps", steps, "Samples per ramp")->check(CLI::Range(64, 1 << 20));
    ramp->add_option("--out", out_dir, "Output directory")->required();

    try {
        io::set_log_level(io::log_level_from_env());
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "uae: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (*cycle)
            return cmd_cycle(config_path, out_dir);
        if (*scan_cmd)
            return cmd_scan(config_path, out_dir);
        return cmd_ramp(start_hz, end_hz, duration, min_time, steps, out_dir);
    } catch (const ConfigError& e) {
        std::cerr << "uae: config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DomainError& e) {
        std::cerr << "uae: physics domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "uae: " << e.what() << '\n';
        return kExitIo;
    }
}
