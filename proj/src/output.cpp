#include "uae/output.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <system_error>

#include "uae/constants.hpp"
#include "uae/errors.hpp"
#include "uae/oscillator.hpp"

namespace uae::io {

using nlohmann::json;

namespace {

std::atomic<LogLevel> g_level{LogLevel::info};

double parse_number(std::string_view field)
{
    double v = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError("not a number: '" + std::string(field) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = line.find(sep, pos);
        out.push_back(line.substr(pos, next - pos));
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return out;
}

std::vector<std::string_view> lines(std::string_view text)
{
    std::vector<std::string_view> out;
    for (auto l : split(text, '\n'))
        if (!l.empty())
            out.push_back(l);
    return out;
}

void append_row(std::string& out, std::initializer_list<std::string> fields)
{
    bool first = true;
    for (const auto& f : fields) {
        if (!first)
            out += ',';
        out += f;
        first = false;
    }
    out += '\n';
}

}  // namespace

LogLevel log_level_from_env()
{
    const char* v = std::getenv("UAE_LOG");
    if (!v || !*v)
        return LogLevel::info;
    const std::string_view s(v);
    if (s == "quiet")
        return LogLevel::quiet;
    if (s == "info")
        return LogLevel::info;
    if (s == "debug")
        return LogLevel::debug;
    throw ConfigError("UAE_LOG must be quiet, info or debug, got '" + std::string(s) + "'");
}

void set_log_level(LogLevel level) { g_level = level; }
LogLevel log_level() { return g_level; }

void log(LogLevel level, std::string_view message)
{
    if (level == LogLevel::quiet || static_cast<int>(level) > static_cast<int>(g_level.load()))
        return;
    std::clog << (level == LogLevel::debug ? "[debug] " : "[info] ") << message << '\n';
}

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (ec != std::errc{})
        throw std::runtime_error("format_number: buffer too small");
    return {buf, ptr};
}

void write_atomic(const std::filesystem::path& path, std::string_view content)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out)
            throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
    std::filesystem::rename(tmp, path);
}

std::string cycle_csv(const cycles::CycleResult& result, double fluid_mass)
{
    std::string out =
        "time_s,omega_fluid_rad_s,omega_bath_rad_s,temperature_K,entropy_kB,pressure_N,"
        "stroke_kind,bath_contact\n";
    for (const auto& rec : result.strokes) {
        const auto& st = rec.stroke;
        const std::string kind(stroke::to_string(st.kind));
        const std::string contact = st.bath_contact ? "1" : "0";
        for (std::size_t k = 0; k < st.trajectory.size(); ++k) {
            const auto& state = st.trajectory[k];
            const double temp =
                state.temperature().value_or(std::numeric_limits<double>::quiet_NaN());
            append_row(out, {format_number(rec.start_time + st.times[k]),
                             format_number(state.omega()),
                             format_number(rec.bath_omega.at(k)),
                             format_number(temp),
                             format_number(thermo::entropy(state) / kBoltzmann),
                             format_number(thermo::quantum_pressure(state, fluid_mass)),
                             kind, contact});
        }
    }
    return out;
}

CycleSummary summarize(const cycles::CycleResult& r)
{
    CycleSummary s;
    s.engine = std::string(cycles::to_string(r.engine));
    s.net_work = r.net_work_extracted;
    s.heat_in = r.heat_in;
    s.cycle_time = r.cycle_time;
    s.eta_max = r.eta_max;
    s.survival = r.survival;
    s.eta_real = r.eta_real;
    s.power = r.power;
    s.power_kb_mk_per_s = r.power_kb_mk_per_s();
    s.hot_temperature = r.hot_temperature;
    s.cold_temperature = r.cold_temperature;
    s.energy_ratio = r.energy_ratio;
    s.eta_at_max_power = r.eta_at_max_power;
    s.curzon_ahlborn = r.curzon_ahlborn;
    s.atom_bath_rate = r.atom_bath_rate;
    s.photon_rate = r.photon_rate;
    for (const auto& rec : r.strokes) {
        StrokeSummary ss;
        ss.kind = std::string(stroke::to_string(rec.stroke.kind));
        ss.start_time = rec.start_time;
        ss.duration = rec.stroke.duration;
        ss.work_on_fluid = rec.stroke.work_on_fluid;
        ss.heat_into_fluid = rec.stroke.heat_into_fluid;
        ss.entropy_change = rec.stroke.entropy_change;
        ss.bath_contact = rec.stroke.bath_contact;
        if (rec.friction) {
            ss.survival = rec.friction->survival;
            ss.scattering_length = rec.friction->scattering_length;
            ss.elastic_rate = rec.friction->elastic_rate;
        }
        s.strokes.push_back(ss);
    }
    return s;
}

json to_json(const CycleSummary& s)
{
    json strokes = json::array();
    for (const auto& ss : s.strokes)
        strokes.push_back({{"kind", ss.kind},
                           {"start_time", ss.start_time},
                           {"duration", ss.duration},
                           {"work_on_fluid", ss.work_on_fluid},
                           {"heat_into_fluid", ss.heat_into_fluid},
                           {"entropy_change", ss.entropy_change},
                           {"bath_contact", ss.bath_contact},
                           {"survival", ss.survival},
                           {"scattering_length", ss.scattering_length},
                           {"elastic_rate", ss.elastic_rate}});
    return {{"engine", s.engine},
            {"net_work", s.net_work},
            {"heat_in", s.heat_in},
            {"cycle_time", s.cycle_time},
            {"eta_max", s.eta_max},
            {"survival", s.survival},
            {"eta_real", s.eta_real},
            {"power", s.power},
            {"power_kb_mk_per_s", s.power_kb_mk_per_s},
            {"hot_temperature", s.hot_temperature},
            {"cold_temperature", s.cold_temperature},
            {"energy_ratio", s.energy_ratio},
            {"eta_at_max_power", s.eta_at_max_power},
            {"curzon_ahlborn", s.curzon_ahlborn},
            {"atom_bath_rate", s.atom_bath_rate},
            {"photon_rate", s.photon_rate},
            {"strokes", strokes}};
}

CycleSummary summary_from_json(const json& j)
{
    CycleSummary s;
    try {
        j.at("engine").get_to(s.engine);
        j.at("net_work").get_to(s.net_work);
        j.at("heat_in").get_to(s.heat_in);
        j.at("cycle_time").get_to(s.cycle_time);
        j.at("eta_max").get_to(s.eta_max);
        j.at("survival").get_to(s.survival);
        j.at("eta_real").get_to(s.eta_real);
        j.at("power").get_to(s.power);
        j.at("power_kb_mk_per_s").get_to(s.power_kb_mk_per_s);
        j.at("hot_temperature").get_to(s.hot_temperature);
        j.at("cold_temperature").get_to(s.cold_temperature);
        j.at("energy_ratio").get_to(s.energy_ratio);
        j.at("eta_at_max_power").get_to(s.eta_at_max_power);
        j.at("curzon_ahlborn").get_to(s.curzon_ahlborn);
        j.at("atom_bath_rate").get_to(s.atom_bath_rate);
        j.at("photon_rate").get_to(s.photon_rate);
        for (const auto& e : j.at("strokes")) {
            StrokeSummary ss;
            e.at("kind").get_to(ss.kind);
            e.at("start_time").get_to(ss.start_time);
            e.at("duration").get_to(ss.duration);
            e.at("work_on_fluid").get_to(ss.work_on_fluid);
            e.at("heat_into_fluid").get_to(ss.heat_into_fluid);
            e.at("entropy_change").get_to(ss.entropy_change);
            e.at("bath_contact").get_to(ss.bath_contact);
            e.at("survival").get_to(ss.survival);
            e.at("scattering_length").get_to(ss.scattering_length);
            e.at("elastic_rate").get_to(ss.elastic_rate);
            s.strokes.push_back(ss);
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("summary: ") + e.what());
    }
    return s;
}

std::string scan_csv(const std::vector<scan::ScanRow>& rows)
{
    std::string out;
    const auto& cols = scan::scan_columns();
    for (std::size_t i = 0; i < cols.size(); ++i)
        out += (i ? "," : "") + cols[i];
    out += '\n';
    for (const auto& r : rows)
        append_row(out, {format_number(r.parameter_value), format_number(r.stroke_time),
                         format_number(r.eta_max), format_number(r.eta_real),
                         format_number(r.ratio), format_number(r.power),
                         format_number(r.survival), format_number(r.atom_bath_rate),
                         format_number(r.photon_rate), format_number(r.net_work),
                         format_number(r.cycle_time), r.status});
    return out;
}

std::vector<scan::ScanRow> parse_scan_csv(std::string_view text)
{
    const auto ls = lines(text);
    if (ls.empty())
        throw ConfigError("scan csv: empty");
    const auto header = split(ls.front(), ',');
    const auto& cols = scan::scan_columns();
    if (header.size() != cols.size()
        || !std::equal(header.begin(), header.end(), cols.begin()))
        throw ConfigError("scan csv: unexpected header");
    std::vector<scan::ScanRow> rows;
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const auto f = split(ls[i], ',');
        if (f.size() != cols.size())
            throw ConfigError("scan csv: wrong field count on line " + std::to_string(i + 1));
        scan::ScanRow r;
        double* num[] = {&r.parameter_value, &r.stroke_time, &r.eta_max,   &r.eta_real,
                         &r.ratio,           &r.power,       &r.survival,  &r.atom_bath_rate,
                         &r.photon_rate,     &r.net_work,    &r.cycle_time};
        for (std::size_t c = 0; c < std::size(num); ++c)
            *num[c] = parse_number(f[c]);
        r.status = std::string(f.back());
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string gnuplot_script(std::string_view csv_name, scan::SweptParameter parameter,
                           const std::vector<double>& series_stroke_times)
{
    std::string xlabel;
    std::string xexpr;
    switch (parameter) {
    case scan::SweptParameter::start_temperature:
        xlabel = "start temperature (uK)";
        xexpr = "($1*1e6)";
        break;
    case scan::SweptParameter::stroke_time:
        xlabel = "contact stroke time (ms)";
        xexpr = "($1*1e3)";
        break;
    case scan::SweptParameter::eta_max:
        xlabel = "eta_max";
        xexpr = "1";
        break;
    }
    std::string s;
    s += "# run from the output directory: gnuplot -p <this file>\n";
    s += "set datafile separator ','\n";
    s += "set key autotitle columnhead\n";
    s += "set xlabel '" + xlabel + "'\n";
    s += "set ylabel 'eta_real'\n";
    s += "set grid\n";
    const std::string file = "'" + std::string(csv_name) + "'";
    if (series_stroke_times.size() <= 1) {
        s += "plot " + file + " using " + xexpr + ":4 with linespoints title 'eta_real'";
        if (parameter == scan::SweptParameter::eta_max)
            s += ", x title 'eta_max' with lines dt 2";
        s += "\n";
        return s;
    }
    s += "plot ";
    for (std::size_t i = 0; i < series_stroke_times.size(); ++i) {
        const double t = series_stroke_times[i];
        if (i)
            s += ", \\\n     ";
        s += file + " using " + xexpr + ":(abs($2-" + format_number(t)
             + ") < 1e-12 ? $4 : NaN) with linespoints title 't_f = " + format_number(t * 1e3)
             + " ms'";
    }
    if (parameter == scan::SweptParameter::eta_max)
        s += ", \\\n     x title 'eta_max' with lines dt 2";
    s += "\n";
    return s;
}

json to_json(const scan::WorkingPoint& p)
{
    json j{{"feasible", p.feasible},
           {"evaluated", p.evaluated},
           {"feasible_points", p.feasible_points}};
    if (p.row) {
        const auto& r = *p.row;
        j["start_temperature"] = r.parameter_value;
        j["stroke_time"] = r.stroke_time;
        j["eta_max"] = r.eta_max;
        j["eta_real"] = r.eta_real;
        j["power_kb_mk_per_s"] = r.power;
        j["survival"] = r.survival;
        j["atom_bath_rate"] = r.atom_bath_rate;
        j["photon_rate"] = r.photon_rate;
        j["cycle_time"] = r.cycle_time;
    }
    return j;
}

std::string ramp_csv(const stroke::RampSchedule& ramp)
{
    std::string out = "time_s,omega_rad_s,b,b_ddot\n";
    for (const auto& s : ramp.samples)
        append_row(out, {format_number(s.time), format_number(s.omega), format_number(s.b),
                         format_number(s.b_ddot)});
    return out;
}

std::vector<RampRow> parse_ramp_csv(std::string_view text)
{
    const auto ls = lines(text);
    if (ls.empty() || ls.front() != "time_s,omega_rad_s,b,b_ddot")
        throw ConfigError("ramp csv: unexpected header");
    std::vector<RampRow> rows;
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const auto f = split(ls[i], ',');
        if (f.size() != 4)
            throw ConfigError("ramp csv: wrong field count on line " + std::to_string(i + 1));
        rows.push_back({parse_number(f[0]), parse_number(f[1]), parse_number(f[2]),
                        parse_number(f[3])});
    }
    return rows;
}

}  // namespace uae::io
