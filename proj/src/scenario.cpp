#include "ocd/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "ocd/constants.hpp"
#include "ocd/errors.hpp"

namespace ocd {

using constants::c0;

namespace {

enum class Dim {
    Length, Time, Energy, Pressure, Density, InvLength, Speed, Intensity, EnergyDensity,
    Dimensionless, Integer, Token, Text
};

const std::map<std::string, double>& unit_table(Dim d) {
    static const std::map<std::string, double> length{
        {"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}};
    static const std::map<std::string, double> time{
        {"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}, {"ps", 1e-12}, {"fs", 1e-15}};
    static const std::map<std::string, double> energy{
        {"J", 1.0}, {"mJ", 1e-3}, {"uJ", 1e-6}, {"nJ", 1e-9}};
    static const std::map<std::string, double> pressure{
        {"Pa", 1.0}, {"kPa", 1e3}, {"MPa", 1e6}, {"GPa", 1e9}};
    static const std::map<std::string, double> density{
        {"kg/m^3", 1.0}, {"g/cm^3", 1e3}};
    static const std::map<std::string, double> invlen{
        {"1/m", 1.0}, {"1/cm", 1e2}};
    static const std::map<std::string, double> speed{
        {"m/s", 1.0}, {"km/s", 1e3}};
    static const std::map<std::string, double> intensity{
        {"W/m^2", 1.0}, {"W/cm^2", 1e4}};
    static const std::map<std::string, double> endens{
        {"J/m^3", 1.0}, {"J/cm^3", 1e6}};
    static const std::map<std::string, double> none{};
    switch (d) {
        case Dim::Length: return length;
        case Dim::Time: return time;
        case Dim::Energy: return energy;
        case Dim::Pressure: return pressure;
        case Dim::Density: return density;
        case Dim::InvLength: return invlen;
        case Dim::Speed: return speed;
        case Dim::Intensity: return intensity;
        case Dim::EnergyDensity: return endens;
        default: return none;
    }
}

const char* dim_name(Dim d) {
    switch (d) {
        case Dim::Length: return "length (m, cm, mm, um, nm)";
        case Dim::Time: return "time (s, ms, us, ns, ps, fs)";
        case Dim::Energy: return "energy (J, mJ, uJ, nJ)";
        case Dim::Pressure: return "pressure (Pa, kPa, MPa, GPa)";
        case Dim::Density: return "density (kg/m^3, g/cm^3)";
        case Dim::InvLength: return "inverse length (1/m, 1/cm)";
        case Dim::Speed: return "speed (m/s, km/s)";
        case Dim::Intensity: return "intensity (W/m^2, W/cm^2)";
        case Dim::EnergyDensity: return "energy density (J/m^3, J/cm^3)";
        default: return "";
    }
}

struct KeyInfo {
    Dim dim;
    bool mandatory;
};

const std::map<std::string, KeyInfo>& key_schema() {
    static const std::map<std::string, KeyInfo> schema{
        {"scenario.name", {Dim::Text, false}},
        {"pulse.p", {Dim::Integer, true}},
        {"pulse.l", {Dim::Integer, true}},
        {"pulse.sigma", {Dim::Integer, true}},
        {"pulse.energy", {Dim::Energy, true}},
        {"pulse.wavelength", {Dim::Length, true}},
        {"pulse.rel_bandwidth", {Dim::Dimensionless, true}},
        {"pulse.waist", {Dim::Length, true}},
        {"medium.n", {Dim::Dimensionless, true}},
        {"medium.rho0", {Dim::Density, true}},
        {"medium.C11", {Dim::Pressure, true}},
        {"medium.C12", {Dim::Pressure, true}},
        {"medium.C44", {Dim::Pressure, true}},
        {"medium.alpha", {Dim::InvLength, true}},
        {"grid.nx", {Dim::Integer, true}},
        {"grid.ny", {Dim::Integer, true}},
        {"grid.nz", {Dim::Integer, true}},
        {"grid.dx", {Dim::Length, true}},
        {"grid.dy", {Dim::Length, true}},
        {"grid.dz", {Dim::Length, true}},
        {"grid.window_speed", {Dim::Speed, true}}, // numeric or `auto` (c/n)
        {"grid.t0", {Dim::Time, true}},
        {"grid.t1", {Dim::Time, true}},
        {"grid.dt", {Dim::Time, true}},
        {"run.mode", {Dim::Token, true}},
        {"run.elasticity", {Dim::Token, true}},
        {"output.snapshot_every", {Dim::Integer, false}},
        {"output.field_dump", {Dim::Token, false}},
        {"output.report_dir", {Dim::Text, false}},
    };
    return schema;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct RawEntry {
    std::string value;
    int line;
    int column; // of the value
};

[[noreturn]] void parse_fail(const std::string& src, int line, int col, const std::string& msg) {
    std::ostringstream os;
    os << src << ":" << line << ":" << col << ": " << msg;
    throw validation_error(os.str());
}

// Shared dotted-key reader for scenario and fiber-plan files.
class KvReader {
public:
    KvReader(const std::string& text, std::string src,
             const std::map<std::string, KeyInfo>& schema)
        : src_(std::move(src)), schema_(schema) {
        std::istringstream is(text);
        std::string raw;
        int lineno = 0;
        while (std::getline(is, raw)) {
            ++lineno;
            std::string line = raw;
            if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
            if (trim(line).empty()) continue;
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                parse_fail(src_, lineno, 1, "expected `key = value`");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            const auto vpos = line.find_first_not_of(" \t", eq + 1);
            const int vcol = vpos == std::string::npos ? int(eq) + 2 : int(vpos) + 1;
            if (key.empty()) parse_fail(src_, lineno, 1, "empty key");
            if (!schema_.count(key))
                parse_fail(src_, lineno, 1, "unknown key `" + key + "`");
            if (value.empty())
                parse_fail(src_, lineno, vcol, "missing value for `" + key + "`");
            if (entries_.count(key))
                parse_fail(src_, lineno, 1, "duplicate key `" + key + "`");
            entries_[key] = {value, lineno, vcol};
        }
        std::vector<std::string> missing;
        for (const auto& [key, info] : schema_)
            if (info.mandatory && !entries_.count(key))
                missing.push_back("missing mandatory key `" + key + "`");
        if (!missing.empty()) throw validation_error(missing);
    }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    std::string raw(const std::string& key) const { return entries_.at(key).value; }

    std::string text_of(const std::string& key, const std::string& fallback) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? fallback : it->second.value;
    }

    int int_of(const std::string& key, int fallback = 0) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) return fallback;
        const RawEntry& e = it->second;
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(e.value, &pos);
        } catch (...) {
            parse_fail(src_, e.line, e.column, "`" + key + "` expects an integer");
        }
        if (pos != e.value.size())
            parse_fail(src_, e.line, e.column + int(pos),
                       "`" + key + "` expects a bare integer (no unit)");
        return v;
    }

    double number_of(const std::string& key) const {
        const Dim dim = schema_.at(key).dim;
        const RawEntry& e = entries_.at(key);
        const char* start = e.value.c_str();
        char* end = nullptr;
        const double mag = std::strtod(start, &end);
        if (end == start)
            parse_fail(src_, e.line, e.column, "`" + key + "` expects a number");
        std::string unit = trim(std::string(end));
        if (dim == Dim::Dimensionless) {
            if (!unit.empty())
                parse_fail(src_, e.line, e.column + int(end - start),
                           "`" + key + "` is dimensionless; drop the unit `" + unit + "`");
            return mag;
        }
        const auto& table = unit_table(dim);
        if (unit.empty())
            parse_fail(src_, e.line, e.column,
                       "`" + key + "` requires an explicit unit of " + dim_name(dim));
        auto it = table.find(unit);
        if (it == table.end())
            parse_fail(src_, e.line, e.column + int(end - start),
                       "`" + key + "`: unknown unit `" + unit + "`, expected " + dim_name(dim));
        return mag * it->second;
    }

    std::string token_of(const std::string& key, std::initializer_list<const char*> allowed,
                         const char* fallback) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) return fallback;
        const std::string& v = it->second.value;
        for (const char* a : allowed)
            if (v == a) return v;
        std::string opts;
        for (const char* a : allowed) {
            if (!opts.empty()) opts += " | ";
            opts += a;
        }
        parse_fail(src_, it->second.line, it->second.column,
                   "`" + key + "` must be one of: " + opts);
    }

private:
    std::string src_;
    const std::map<std::string, KeyInfo>& schema_;
    std::map<std::string, RawEntry> entries_;
};

} // namespace

std::vector<std::string> Scenario::validate() const {
    std::vector<std::string> issues;
    pulse.validate(issues);
    medium.validate(issues);
    grid.validate(issues, pulse, medium, mode, elasticity);
    if (outputs.snapshot_every < 0)
        issues.push_back("output.snapshot_every: must be >= 0");
    return issues;
}

Scenario parse_scenario(const std::string& text, const std::string& src) {
    const KvReader r(text, src, key_schema());
    auto text_of = [&](const std::string& k, const std::string& f) { return r.text_of(k, f); };
    auto int_of = [&](const std::string& k, int f) { return r.int_of(k, f); };
    auto number_of = [&](const std::string& k, Dim) { return r.number_of(k); };
    auto token_of = [&](const std::string& k, std::initializer_list<const char*> a,
                        const char* f) { return r.token_of(k, a, f); };

    Scenario s;
    s.name = text_of("scenario.name", "");
    s.pulse.p = int_of("pulse.p", 0);
    s.pulse.l = int_of("pulse.l", 0);
    s.pulse.sigma = int_of("pulse.sigma", 0);
    s.pulse.energy = number_of("pulse.energy", Dim::Energy);
    s.pulse.wavelength = number_of("pulse.wavelength", Dim::Length);
    s.pulse.rel_bandwidth = number_of("pulse.rel_bandwidth", Dim::Dimensionless);
    s.pulse.waist = number_of("pulse.waist", Dim::Length);
    s.medium.n = number_of("medium.n", Dim::Dimensionless);
    s.medium.rho0 = number_of("medium.rho0", Dim::Density);
    s.medium.C11 = number_of("medium.C11", Dim::Pressure);
    s.medium.C12 = number_of("medium.C12", Dim::Pressure);
    s.medium.C44 = number_of("medium.C44", Dim::Pressure);
    s.medium.alpha = number_of("medium.alpha", Dim::InvLength);
    s.grid.nx = int_of("grid.nx", 0);
    s.grid.ny = int_of("grid.ny", 0);
    s.grid.nz = int_of("grid.nz", 0);
    s.grid.dx = number_of("grid.dx", Dim::Length);
    s.grid.dy = number_of("grid.dy", Dim::Length);
    s.grid.dz = number_of("grid.dz", Dim::Length);
    if (r.raw("grid.window_speed") == "auto")
        s.grid.window_speed = c0 / s.medium.n;
    else
        s.grid.window_speed = number_of("grid.window_speed", Dim::Speed);
    s.grid.t0 = number_of("grid.t0", Dim::Time);
    s.grid.t1 = number_of("grid.t1", Dim::Time);
    s.grid.dt = number_of("grid.dt", Dim::Time);
    s.mode = token_of("run.mode", {"time-averaged", "instantaneous"}, "time-averaged") ==
                     "time-averaged"
                 ? RunMode::TimeAveraged
                 : RunMode::Instantaneous;
    s.elasticity = token_of("run.elasticity", {"on", "off"}, "off") == "on";
    s.outputs.snapshot_every = int_of("output.snapshot_every", 0);
    s.outputs.field_dump =
        token_of("output.field_dump", {"on", "off"}, "off") == "on";
    s.outputs.report_dir = text_of("output.report_dir", "out");

    if (auto issues = s.validate(); !issues.empty()) throw validation_error(issues);
    return s;
}

Scenario load_scenario(const std::string& path_or_preset) {
    std::ifstream in(path_or_preset);
    if (!in) {
        if (const std::string* txt = preset_text(path_or_preset))
            return parse_scenario(*txt, "preset:" + path_or_preset);
        throw validation_error("cannot open scenario file or preset `" + path_or_preset + "`");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return parse_scenario(os.str(), path_or_preset);
}

namespace {
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
} // namespace

std::string emit_scenario(const Scenario& s) {
    std::ostringstream os;
    if (!s.name.empty()) os << "scenario.name = " << s.name << "\n";
    os << "pulse.p = " << s.pulse.p << "\n";
    os << "pulse.l = " << s.pulse.l << "\n";
    os << "pulse.sigma = " << s.pulse.sigma << "\n";
    os << "pulse.energy = " << num(s.pulse.energy) << " J\n";
    os << "pulse.wavelength = " << num(s.pulse.wavelength) << " m\n";
    os << "pulse.rel_bandwidth = " << num(s.pulse.rel_bandwidth) << "\n";
    os << "pulse.waist = " << num(s.pulse.waist) << " m\n";
    os << "medium.n = " << num(s.medium.n) << "\n";
    os << "medium.rho0 = " << num(s.medium.rho0) << " kg/m^3\n";
    os << "medium.C11 = " << num(s.medium.C11) << " Pa\n";
    os << "medium.C12 = " << num(s.medium.C12) << " Pa\n";
    os << "medium.C44 = " << num(s.medium.C44) << " Pa\n";
    os << "medium.alpha = " << num(s.medium.alpha) << " 1/m\n";
    os << "grid.nx = " << s.grid.nx << "\n";
    os << "grid.ny = " << s.grid.ny << "\n";
    os << "grid.nz = " << s.grid.nz << "\n";
    os << "grid.dx = " << num(s.grid.dx) << " m\n";
    os << "grid.dy = " << num(s.grid.dy) << " m\n";
    os << "grid.dz = " << num(s.grid.dz) << " m\n";
    os << "grid.window_speed = " << num(s.grid.window_speed) << " m/s\n";
    os << "grid.t0 = " << num(s.grid.t0) << " s\n";
    os << "grid.t1 = " << num(s.grid.t1) << " s\n";
    os << "grid.dt = " << num(s.grid.dt) << " s\n";
    os << "run.mode = "
       << (s.mode == RunMode::TimeAveraged ? "time-averaged" : "instantaneous") << "\n";
    os << "run.elasticity = " << (s.elasticity ? "on" : "off") << "\n";
    os << "output.snapshot_every = " << s.outputs.snapshot_every << "\n";
    os << "output.field_dump = " << (s.outputs.field_dump ? "on" : "off") << "\n";
    os << "output.report_dir = " << s.outputs.report_dir << "\n";
    return os.str();
}

std::uint64_t scenario_hash(const Scenario& s) {
    const std::string text = emit_scenario(s);
    std::uint64_t h = 1469598103934665603ull; // FNV-1a
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {
const std::map<std::string, KeyInfo>& fiber_schema() {
    static const std::map<std::string, KeyInfo> schema{
        {"fiber.radius", {Dim::Length, true}},
        {"fiber.length", {Dim::Length, true}},
        {"fiber.intensity", {Dim::Intensity, true}},
        {"fiber.sigma", {Dim::Integer, true}},
        {"fiber.u_th", {Dim::EnergyDensity, true}},
        {"fiber.wavelength", {Dim::Length, true}},
        {"medium.n", {Dim::Dimensionless, true}},
        {"medium.rho0", {Dim::Density, true}},
        {"medium.C11", {Dim::Pressure, true}},
        {"medium.C12", {Dim::Pressure, true}},
        {"medium.C44", {Dim::Pressure, true}},
        {"medium.alpha", {Dim::InvLength, true}},
    };
    return schema;
}
} // namespace

FiberPlan parse_fiber_plan(const std::string& text, const std::string& src) {
    const KvReader r(text, src, fiber_schema());
    FiberPlan p;
    p.radius = r.number_of("fiber.radius");
    p.length = r.number_of("fiber.length");
    p.intensity = r.number_of("fiber.intensity");
    p.sigma = r.int_of("fiber.sigma");
    p.u_th = r.number_of("fiber.u_th");
    p.wavelength = r.number_of("fiber.wavelength");
    p.medium.n = r.number_of("medium.n");
    p.medium.rho0 = r.number_of("medium.rho0");
    p.medium.C11 = r.number_of("medium.C11");
    p.medium.C12 = r.number_of("medium.C12");
    p.medium.C44 = r.number_of("medium.C44");
    p.medium.alpha = r.number_of("medium.alpha");
    std::vector<std::string> issues;
    p.validate(issues);
    if (!issues.empty()) throw validation_error(issues);
    return p;
}

FiberPlan load_fiber_plan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open fiber plan file `" + path + "`");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_fiber_plan(os.str(), path);
}

MediumSpec silicon() {
    MediumSpec m;
    m.n = 3.4757;
    m.rho0 = 2329.0;
    m.C11 = 165.7e9;
    m.C12 = 63.9e9;
    m.C44 = 79.6e9;
    m.alpha = 1e-6; // 1e-8 1/cm
    return m;
}

Scenario make_scenario(int p, int l, int sigma, const MediumSpec& medium,
                       const ScenarioKnobs& k) {
    Scenario s;
    s.pulse.p = p;
    s.pulse.l = l;
    s.pulse.sigma = sigma;
    s.pulse.energy = k.energy;
    s.pulse.wavelength = k.wavelength;
    s.pulse.rel_bandwidth = k.rel_bandwidth;
    s.pulse.waist = k.waist_factor * k.wavelength / medium.n;
    s.medium = medium;
    s.mode = k.mode;

    GridSpec& g = s.grid;
    const double w0 = s.pulse.waist;
    g.dx = g.dy = w0 / k.cells_per_waist;
    g.nx = g.ny = int(std::ceil(6.5 * k.cells_per_waist));
    const double sz = s.pulse.sigma_z(medium.n);
    g.dz = sz / k.cells_per_sigma_z;
    g.nz = int(std::ceil(k.window_sigmas * k.cells_per_sigma_z));
    g.window_speed = c0 / medium.n;
    g.t0 = 0.0;
    g.t1 = 1.02 * g.extent_z() * medium.n / c0;
    const double cap = k.mode == RunMode::TimeAveraged
                           ? 0.05 / (s.pulse.dk0() * c0)
                           : (2.0 * constants::pi / s.pulse.omega0()) / 32.0;
    g.dt = k.dt_safety * cap;
    return s;
}

} // namespace ocd
