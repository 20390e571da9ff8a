#include "uae/config.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

#include "uae/constants.hpp"
#include "uae/errors.hpp"

namespace uae::config {

using nlohmann::json;

namespace {

constexpr double kMicro = 1e-6;
constexpr double kMilli = 1e-3;
constexpr double kNano = 1e-9;

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw ConfigError(where.empty() ? what : where + ": " + what);
}

const json& require_object(const json& j, const std::string& where)
{
    if (!j.is_object())
        fail(where, "expected an object");
    return j;
}

void reject_unknown(const json& j, const std::string& where,
                    std::initializer_list<std::string_view> allowed)
{
    for (const auto& item : j.items())
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
            fail(where, "unknown key '" + item.key() + "'");
}

std::string path_of(const std::string& where, const std::string& key)
{
    return where.empty() ? key : where + "." + key;
}

double number(const json& j, const std::string& where)
{
    if (!j.is_number())
        fail(where, "expected a number");
    return j.get<double>();
}

/// Reads j[key] * scale into `out` when present.
void read(const json& j, const std::string& where, const char* key, double& out, double scale = 1.0)
{
    if (auto it = j.find(key); it != j.end())
        out = number(*it, path_of(where, key)) * scale;
}

void read(const json& j, const std::string& where, const char* key, std::string& out)
{
    if (auto it = j.find(key); it != j.end()) {
        if (!it->is_string())
            fail(path_of(where, key), "expected a string");
        out = it->get<std::string>();
    }
}

std::size_t count(const json& j, const std::string& where)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        fail(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

/// Either an explicit array or {"from", "to", "count", "spacing": "linear"|"log"}.
std::vector<double> grid(const json& j, const std::string& where, double scale)
{
    std::vector<double> out;
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            out.push_back(number(j[i], where + "[" + std::to_string(i) + "]") * scale);
    } else if (j.is_object()) {
        reject_unknown(j, where, {"from", "to", "count", "spacing"});
        for (const char* k : {"from", "to", "count"})
            if (!j.contains(k))
                fail(where, std::string("missing '") + k + "'");
        const double lo = number(j["from"], path_of(where, "from")) * scale;
        const double hi = number(j["to"], path_of(where, "to")) * scale;
        const std::size_t n = count(j["count"], path_of(where, "count"));
        std::string spacing = "linear";
        read(j, where, "spacing", spacing);
        if (n == 1) {
            out.push_back(lo);
        } else if (spacing == "log") {
            try {
                out = scan::log_spaced(lo, hi, n);
            } catch (const DomainError& e) {
                fail(where, e.what());
            }
        } else if (spacing == "linear") {
            if (n < 2 || !(hi > lo))
                fail(where, "linear grid needs count >= 1 and to > from");
            for (std::size_t i = 0; i < n; ++i)
                out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
        } else {
            fail(path_of(where, "spacing"), "expected 'linear' or 'log'");
        }
    } else {
        fail(where, "expected an array or a range object");
    }
    if (out.empty())
        fail(where, "grid is empty");
    for (std::size_t i = 1; i < out.size(); ++i)
        if (!(out[i] > out[i - 1]))
            fail(where, "grid must be strictly increasing");
    return out;
}

json scaled(const std::vector<double>& v, double scale)
{
    json a = json::array();
    for (double x : v)
        a.push_back(x / scale);
    return a;
}

double grid_scale(scan::SweptParameter p)
{
    switch (p) {
    case scan::SweptParameter::start_temperature: return kMicro;
    case scan::SweptParameter::stroke_time: return kMilli;
    case scan::SweptParameter::eta_max: return 1.0;
    }
    return 1.0;
}

void read_line(const json& j, const std::string& where, friction::AtomicLine& line)
{
    require_object(j, where);
    reject_unknown(j, where, {"wavelength_nm", "linewidth_mhz", "weight"});
    read(j, where, "wavelength_nm", line.wavelength, kNano);
    read(j, where, "linewidth_mhz", line.linewidth, kTwoPi * 1e6);
    read(j, where, "weight", line.weight);
}

json line_json(const friction::AtomicLine& line)
{
    return {{"wavelength_nm", line.wavelength / kNano},
            {"linewidth_mhz", line.linewidth / (kTwoPi * 1e6)},
            {"weight", line.weight}};
}

std::string_view to_string(stroke::RampValidity v)
{
    return v == stroke::RampValidity::fidelity ? "fidelity" : "positivity";
}

std::string_view to_string(friction::AlphaMass m)
{
    switch (m) {
    case friction::AlphaMass::bath: return "bath";
    case friction::AlphaMass::fluid: return "fluid";
    case friction::AlphaMass::reduced: return "reduced";
    }
    return "bath";
}

void read_numerics(const json& j, const std::string& where, cycles::NumericsSpec& n)
{
    require_object(j, where);
    reject_unknown(j, where,
                   {"steps_per_stroke", "ramp_steps", "ramp_validity", "fidelity_threshold",
                    "min_time_tolerance_us", "collisions_required",
                    "collision_temperature_exponent", "collision_reference_temperature_uK",
                    "alpha_mass"});
    if (auto it = j.find("steps_per_stroke"); it != j.end())
        n.steps_per_stroke = count(*it, path_of(where, "steps_per_stroke"));
    if (auto it = j.find("ramp_steps"); it != j.end())
        n.ramp.steps = count(*it, path_of(where, "ramp_steps"));
    std::string validity(to_string(n.ramp.criterion));
    read(j, where, "ramp_validity", validity);
    if (validity == "positivity")
        n.ramp.criterion = stroke::RampValidity::positivity;
    else if (validity == "fidelity")
        n.ramp.criterion = stroke::RampValidity::fidelity;
    else
        fail(path_of(where, "ramp_validity"), "expected 'positivity' or 'fidelity'");
    read(j, where, "fidelity_threshold", n.ramp.fidelity_threshold);
    read(j, where, "min_time_tolerance_us", n.min_time_tolerance, kMicro);
    read(j, where, "collisions_required", n.collisions.collisions_required);
    read(j, where, "collision_temperature_exponent", n.collisions.temperature_exponent);
    read(j, where, "collision_reference_temperature_uK", n.collisions.reference_temperature, kMicro);
    std::string mass(to_string(n.alpha_mass));
    read(j, where, "alpha_mass", mass);
    if (mass == "bath")
        n.alpha_mass = friction::AlphaMass::bath;
    else if (mass == "fluid")
        n.alpha_mass = friction::AlphaMass::fluid;
    else if (mass == "reduced")
        n.alpha_mass = friction::AlphaMass::reduced;
    else
        fail(path_of(where, "alpha_mass"), "expected 'bath', 'fluid' or 'reduced'");

    if (n.steps_per_stroke < 128)
        fail(path_of(where, "steps_per_stroke"), "must be at least 128");
    if (n.ramp.steps < 64)
        fail(path_of(where, "ramp_steps"), "must be at least 64");
    if (!(n.min_time_tolerance > 0.0))
        fail(path_of(where, "min_time_tolerance_us"), "must be positive");
    if (!(n.ramp.fidelity_threshold > 0.0))
        fail(path_of(where, "fidelity_threshold"), "must be positive");
}

json numerics_json(const cycles::NumericsSpec& n)
{
    return {{"steps_per_stroke", n.steps_per_stroke},
            {"ramp_steps", n.ramp.steps},
            {"ramp_validity", to_string(n.ramp.criterion)},
            {"fidelity_threshold", n.ramp.fidelity_threshold},
            {"min_time_tolerance_us", n.min_time_tolerance / kMicro},
            {"collisions_required", n.collisions.collisions_required},
            {"collision_temperature_exponent", n.collisions.temperature_exponent},
            {"collision_reference_temperature_uK", n.collisions.reference_temperature / kMicro},
            {"alpha_mass", to_string(n.alpha_mass)}};
}

}  // namespace

scan::ScanRequest RunConfig::scan_request() const
{
    if (!scan)
        throw ConfigError("configuration has no 'scan' block");
    scan::ScanRequest r;
    r.engine = cycle.engine;
    r.swept_parameter = scan->parameter;
    r.grid = scan->grid;
    r.base_spec = cycle;
    r.series_stroke_times = scan->series_stroke_times;
    return r;
}

RunConfig parse(const json& doc)
{
    require_object(doc, "config");
    reject_unknown(doc, "",
                   {"engine", "start_temperature_uK", "start_frequency_hz", "temperature_ratio",
                    "expansion_ratio", "frequency_ratio", "target_eta_max",
                    "contact_stroke_time_ms", "bath", "mixture", "tweezer", "numerics", "scan",
                    "optimize", "output"});

    if (!doc.contains("engine"))
        fail("", "missing 'engine'");
    std::string engine_name;
    read(doc, "", "engine", engine_name);
    const auto engine = cycles::engine_from_string(engine_name);
    if (!engine)
        fail("engine", "expected 'QCE', 'QOE' or 'QDE', got '" + engine_name + "'");

    RunConfig rc;
    auto& s = rc.cycle;
    s = cycles::CycleSpec::reference(*engine);

    read(doc, "", "start_temperature_uK", s.start_temperature, kMicro);
    if (auto it = doc.find("start_frequency_hz"); it != doc.end() && !it->is_null())
        s.start_omega = number(*it, "start_frequency_hz") * kTwoPi;
    read(doc, "", "temperature_ratio", s.temperature_ratio);
    read(doc, "", "expansion_ratio", s.expansion_ratio);
    read(doc, "", "frequency_ratio", s.frequency_ratio);
    read(doc, "", "contact_stroke_time_ms", s.contact_stroke_time, kMilli);

    if (auto it = doc.find("target_eta_max"); it != doc.end()) {
        if (s.engine != cycles::Engine::QDE)
            fail("target_eta_max", "only meaningful for the QDE engine");
        if (doc.contains("expansion_ratio"))
            fail("target_eta_max", "give either expansion_ratio or target_eta_max, not both");
        const double eta = number(*it, "target_eta_max");
        try {
            s.expansion_ratio = cycles::solve_qde_expansion_ratio(eta, s.frequency_ratio);
        } catch (const DomainError& e) {
            fail("target_eta_max", e.what());
        }
    }

    if (auto it = doc.find("bath"); it != doc.end()) {
        const auto& b = require_object(*it, "bath");
        reject_unknown(b, "bath", {"atom_number", "trap_frequency_hz", "axis_frequencies_hz"});
        read(b, "bath", "atom_number", s.bath.atom_number);
        read(b, "bath", "trap_frequency_hz", s.bath.mean_trap_frequency, kTwoPi);
        if (auto ax = b.find("axis_frequencies_hz"); ax != b.end() && !ax->is_null()) {
            if (!ax->is_array() || ax->size() != 3)
                fail("bath.axis_frequencies_hz", "expected three numbers");
            std::array<double, 3> f{};
            for (std::size_t i = 0; i < 3; ++i)
                f[i] = number((*ax)[i], "bath.axis_frequencies_hz") * kTwoPi;
            s.bath.axis_frequencies = f;
        }
    }
    if (auto it = doc.find("mixture"); it != doc.end()) {
        const auto& m = require_object(*it, "mixture");
        reject_unknown(m, "mixture",
                       {"fluid_mass_u", "bath_mass_u", "d1", "d2", "selective_wavelength_nm"});
        read(m, "mixture", "fluid_mass_u", s.mixture.fluid_mass, kAmu);
        read(m, "mixture", "bath_mass_u", s.mixture.bath_mass, kAmu);
        if (auto d = m.find("d1"); d != m.end())
            read_line(*d, "mixture.d1", s.mixture.d1);
        if (auto d = m.find("d2"); d != m.end())
            read_line(*d, "mixture.d2", s.mixture.d2);
        read(m, "mixture", "selective_wavelength_nm", s.mixture.selective_wavelength, kNano);
    }
    if (auto it = doc.find("tweezer"); it != doc.end()) {
        const auto& t = require_object(*it, "tweezer");
        reject_unknown(t, "tweezer", {"waist_um", "power_mw", "wavelength_nm"});
        read(t, "tweezer", "waist_um", s.tweezer.waist, kMicro);
        read(t, "tweezer", "power_mw", s.tweezer.power, kMilli);
        read(t, "tweezer", "wavelength_nm", s.tweezer.wavelength, kNano);
    }
    if (auto it = doc.find("numerics"); it != doc.end())
        read_numerics(*it, "numerics", s.numerics);
    s.bath.temperature = s.start_temperature;

    const auto positive = [](double v, const char* what) {
        if (!(v > 0.0))
            fail(what, "must be positive");
    };
    positive(s.start_temperature, "start_temperature_uK");
    if (s.start_omega)
        positive(*s.start_omega, "start_frequency_hz");
    positive(s.contact_stroke_time, "contact_stroke_time_ms");
    positive(s.bath.atom_number, "bath.atom_number");
    positive(s.bath.mean_trap_frequency, "bath.trap_frequency_hz");
    positive(s.mixture.fluid_mass, "mixture.fluid_mass_u");
    positive(s.mixture.bath_mass, "mixture.bath_mass_u");
    positive(s.tweezer.waist, "tweezer.waist_um");
    positive(s.tweezer.power, "tweezer.power_mw");
    positive(s.tweezer.wavelength, "tweezer.wavelength_nm");

    if (auto it = doc.find("scan"); it != doc.end()) {
        const auto& j = require_object(*it, "scan");
        reject_unknown(j, "scan", {"parameter", "grid", "series_stroke_times_ms"});
        ScanSettings sc;
        std::string name;
        read(j, "scan", "parameter", name);
        const auto p = scan::parameter_from_string(name);
        if (!p)
            fail("scan.parameter",
                 "expected 'start_temperature', 'stroke_time' or 'eta_max', got '" + name + "'");
        sc.parameter = *p;
        if (!j.contains("grid"))
            fail("scan", "missing 'grid'");
        sc.grid = grid(j["grid"], "scan.grid", grid_scale(sc.parameter));
        if (auto st = j.find("series_stroke_times_ms"); st != j.end())
            sc.series_stroke_times = grid(*st, "scan.series_stroke_times_ms", kMilli);
        rc.scan = std::move(sc);
    }
    if (auto it = doc.find("optimize"); it != doc.end()) {
        const auto& j = require_object(*it, "optimize");
        reject_unknown(j, "optimize", {"margin", "start_temperatures_uK", "stroke_times_ms"});
        OptimizeSettings op;
        read(j, "optimize", "margin", op.margin);
        if (!(op.margin >= 0.0))
            fail("optimize.margin", "must be non-negative");
        if (auto g = j.find("start_temperatures_uK"); g != j.end())
            op.grid.start_temperatures = grid(*g, "optimize.start_temperatures_uK", kMicro);
        if (auto g = j.find("stroke_times_ms"); g != j.end())
            op.grid.stroke_times = grid(*g, "optimize.stroke_times_ms", kMilli);
        rc.optimize = std::move(op);
    }
    if (auto it = doc.find("output"); it != doc.end()) {
        const auto& o = require_object(*it, "output");
        reject_unknown(o, "output",
                       {"cycle_csv", "summary_json", "scan_csv", "plot_script", "ramp_csv",
                        "working_point_json"});
        read(o, "output", "cycle_csv", rc.output.cycle_csv);
        read(o, "output", "summary_json", rc.output.summary_json);
        read(o, "output", "scan_csv", rc.output.scan_csv);
        read(o, "output", "plot_script", rc.output.plot_script);
        read(o, "output", "ramp_csv", rc.output.ramp_csv);
        read(o, "output", "working_point_json", rc.output.working_point_json);
    }
    return rc;
}

RunConfig load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return parse(doc);
}

json to_json(const RunConfig& rc)
{
    const auto& s = rc.cycle;
    json j;
    j["engine"] = cycles::to_string(s.engine);
    j["start_temperature_uK"] = s.start_temperature / kMicro;
    j["start_frequency_hz"] = s.start_omega ? json(*s.start_omega / kTwoPi) : json(nullptr);
    j["temperature_ratio"] = s.temperature_ratio;
    j["expansion_ratio"] = s.expansion_ratio;
    j["frequency_ratio"] = s.frequency_ratio;
    j["contact_stroke_time_ms"] = s.contact_stroke_time / kMilli;

    json bath{{"atom_number", s.bath.atom_number},
              {"trap_frequency_hz", s.bath.mean_trap_frequency / kTwoPi},
              {"axis_frequencies_hz", nullptr}};
    if (s.bath.axis_frequencies)
        bath["axis_frequencies_hz"] = scaled({s.bath.axis_frequencies->begin(),
                                              s.bath.axis_frequencies->end()},
                                             kTwoPi);
    j["bath"] = bath;
    j["mixture"] = {{"fluid_mass_u", s.mixture.fluid_mass / kAmu},
                    {"bath_mass_u", s.mixture.bath_mass / kAmu},
                    {"d1", line_json(s.mixture.d1)},
                    {"d2", line_json(s.mixture.d2)},
                    {"selective_wavelength_nm", s.mixture.selective_wavelength / kNano}};
    j["tweezer"] = {{"waist_um", s.tweezer.waist / kMicro},
                    {"power_mw", s.tweezer.power / kMilli},
                    {"wavelength_nm", s.tweezer.wavelength / kNano}};
    j["numerics"] = numerics_json(s.numerics);

    if (rc.scan) {
        json sc{{"parameter", scan::to_string(rc.scan->parameter)},
                {"grid", scaled(rc.scan->grid, grid_scale(rc.scan->parameter))}};
        if (!rc.scan->series_stroke_times.empty())
            sc["series_stroke_times_ms"] = scaled(rc.scan->series_stroke_times, kMilli);
        j["scan"] = sc;
    }
    if (rc.optimize)
        j["optimize"] = {{"margin", rc.optimize->margin},
                         {"start_temperatures_uK", scaled(rc.optimize->grid.start_temperatures, kMicro)},
                         {"stroke_times_ms", scaled(rc.optimize->grid.stroke_times, kMilli)}};
    j["output"] = {{"cycle_csv", rc.output.cycle_csv},
                   {"summary_json", rc.output.summary_json},
                   {"scan_csv", rc.output.scan_csv},
                   {"plot_script", rc.output.plot_script},
                   {"ramp_csv", rc.output.ramp_csv},
                   {"working_point_json", rc.output.working_point_json}};
    return j;
}

}  // namespace uae::config
