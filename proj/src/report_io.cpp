#include "ocd/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ocd/errors.hpp"

namespace ocd {

namespace {

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void emit_vec(std::ostringstream& os, const std::string& key, const Vec3& v,
              const std::string& unit) {
    os << key << "_x = " << fmt6(v.x) << (unit.empty() ? "" : " " + unit) << "\n";
    os << key << "_y = " << fmt6(v.y) << (unit.empty() ? "" : " " + unit) << "\n";
    os << key << "_z = " << fmt6(v.z) << (unit.empty() ? "" : " " + unit) << "\n";
}

} // namespace

std::string format_summary(const Scenario& sc, const MomentumReport& r) {
    std::ostringstream os;
    char hash[24];
    std::snprintf(hash, sizeof hash, "0x%016llx",
                  static_cast<unsigned long long>(scenario_hash(sc)));
    os << "summary.schema = ocd-momentum-1\n";
    os << "scenario.name = " << (sc.name.empty() ? "(unnamed)" : sc.name) << "\n";
    os << "scenario.hash = " << hash << "\n";
    os << "run.mode = "
       << (sc.mode == RunMode::TimeAveraged ? "time-averaged" : "instantaneous") << "\n";
    os << "pulse.l = " << sc.pulse.l << "\n";
    os << "pulse.sigma = " << sc.pulse.sigma << "\n";
    os << "medium.n = " << fmt6(sc.medium.n) << "\n";
    os << "N_ph = " << fmt6(r.N_ph) << "\n";
    os << "U0_J = " << fmt6(sc.pulse.energy) << "\n";
    os << "U_field_J = " << fmt6(r.U_field) << "\n";
    emit_vec(os, "P_field", r.P_field, "kg*m/s");
    emit_vec(os, "P_mdw", r.P_mdw, "kg*m/s");
    emit_vec(os, "P_mp", r.P_mp, "kg*m/s");
    emit_vec(os, "J_field", r.J_field, "J*s");
    emit_vec(os, "J_mdw", r.J_mdw, "J*s");
    emit_vec(os, "J_mp", r.J_mp, "J*s");
    emit_vec(os, "J_field_per_photon", r.J_field_per_photon, "hbar");
    emit_vec(os, "J_mdw_per_photon", r.J_mdw_per_photon, "hbar");
    emit_vec(os, "J_mp_per_photon", r.J_mp_per_photon, "hbar");
    emit_vec(os, "p_field_per_photon", r.P_field_per_photon, "hbar*omega0/c");
    emit_vec(os, "p_mdw_per_photon", r.P_mdw_per_photon, "hbar*omega0/c");
    emit_vec(os, "p_mp_per_photon", r.P_mp_per_photon, "hbar*omega0/c");
    os << "delta_m_kg = " << fmt6(r.delta_m) << "\n";
    os << "delta_m_expected_kg = " << fmt6(r.delta_m_expected) << "\n";
    return os.str();
}

std::string format_manifest(const RunManifest& m) {
    std::ostringstream os;
    char hash[24];
    std::snprintf(hash, sizeof hash, "0x%016llx",
                  static_cast<unsigned long long>(m.scenario_hash));
    os << "manifest.schema = ocd-manifest-1\n";
    os << "scenario.hash = " << hash << "\n";
    os << "code.version = " << m.code_version << "\n";
    os << "run.threads = " << m.threads << "\n";
    os << "run.deterministic_reductions = " << (m.deterministic_reductions ? "on" : "off")
       << "\n";
    os << "run.wall_seconds = " << fmt6(m.wall_seconds) << "\n";
    os << "grid.cells = " << m.cells << "\n";
    os << "grid.steps = " << m.steps << "\n";
    return os.str();
}

std::string format_fiber_report(const FiberPlan& p) {
    std::ostringstream os;
    os << "fiber.schema = ocd-fiber-1\n";
    os << "fiber.radius_m = " << fmt6(p.radius) << "\n";
    os << "fiber.length_m = " << fmt6(p.length) << "\n";
    os << "fiber.intensity_W_m2 = " << fmt6(p.intensity) << "\n";
    os << "fiber.sigma = " << p.sigma << "\n";
    os << "fiber.wavelength_m = " << fmt6(p.wavelength) << "\n";
    os << "medium.n = " << fmt6(p.medium.n) << "\n";
    os << "medium.alpha_1_m = " << fmt6(p.medium.alpha) << "\n";
    os << "threshold_intensity_W_m2 = " << fmt6(threshold_intensity(p.medium, p.u_th))
       << "\n";
    os << "intensity_margin = "
       << fmt6(p.intensity / threshold_intensity(p.medium, p.u_th)) << "\n";
    os << "U_in_J = " << fmt6(p.energy_inside()) << "\n";
    os << "moment_of_inertia_kg_m2 = " << fmt6(p.moment_of_inertia()) << "\n";
    os << "Omega_rad_s = " << fmt6(angular_velocity(p)) << "\n";
    const auto teq = crossover_time(p.medium);
    if (teq) {
        os << "t_eq_s = " << fmt6(*teq) << "\n";
        os << "dr_mdw_at_teq_m = " << fmt6(displacement_mdw(p, *teq)) << "\n";
        os << "dr_abs_at_teq_m = " << fmt6(displacement_abs(p, *teq)) << "\n";
        os << "dr_two_beam_at_teq_m = " << fmt6(displacement_two_beam(p, *teq)) << "\n";
    } else {
        os << "t_eq_s = none\n";
    }
    return os.str();
}

std::string format_sweep_csv(const SweepTable& t) {
    std::ostringstream os;
    os << "t_s,d_m,dr_mdw_m\n";
    for (std::size_t i = 0; i < t.times.size(); ++i)
        for (std::size_t j = 0; j < t.diameters.size(); ++j)
            os << fmt6(t.times[i]) << "," << fmt6(t.diameters[j]) << ","
               << fmt6(t.dr_mdw[i * t.diameters.size() + j]) << "\n";
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw numeric_error("cannot write file `" + path + "`");
    out << text;
    if (!out) throw numeric_error("write failed for `" + path + "`");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw numeric_error("cannot read file `" + path + "`");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

namespace {

void write_meta(const std::string& base, const GridSpec& g, long shift, int components,
                const std::string& variable, const std::string& units) {
    std::ostringstream os;
    os << "dump.schema = ocd-field-1\n";
    os << "dump.variable = " << variable << "\n";
    os << "dump.units = " << units << "\n";
    os << "dump.format = float64-le\n";
    os << "dump.components = " << components << "\n";
    os << "dump.layout = component-fastest, then x, y, z\n";
    os << "dump.nx = " << g.nx << "\n";
    os << "dump.ny = " << g.ny << "\n";
    os << "dump.nz = " << g.nz << "\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", g.dx);
    os << "dump.dx_m = " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%.17g", g.dy);
    os << "dump.dy_m = " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%.17g", g.dz);
    os << "dump.dz_m = " << buf << "\n";
    os << "dump.window_shift_cells = " << shift << "\n";
    write_text_file(base + ".meta", os.str());
}

void write_raw(const std::string& path, const double* data, std::size_t count) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw numeric_error("cannot write file `" + path + "`");
    out.write(reinterpret_cast<const char*>(data),
              std::streamsize(count * sizeof(double)));
    if (!out) throw numeric_error("write failed for `" + path + "`");
}

} // namespace

void write_vector_dump(const std::string& base, const GridSpec& g, long shift,
                       const std::vector<Vec3>& data, const std::string& variable,
                       const std::string& units) {
    std::vector<double> flat(data.size() * 3);
    for (std::size_t i = 0; i < data.size(); ++i) {
        flat[3 * i] = data[i].x;
        flat[3 * i + 1] = data[i].y;
        flat[3 * i + 2] = data[i].z;
    }
    write_raw(base + ".f64", flat.data(), flat.size());
    write_meta(base, g, shift, 3, variable, units);
}

void write_scalar_dump(const std::string& base, const GridSpec& g, long shift,
                       const std::vector<double>& data, const std::string& variable,
                       const std::string& units) {
    write_raw(base + ".f64", data.data(), data.size());
    write_meta(base, g, shift, 1, variable, units);
}

std::vector<double> read_raw_f64(const std::string& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw numeric_error("cannot read file `" + path + "`");
    const std::streamsize bytes = in.tellg();
    in.seekg(0);
    std::vector<double> data(std::size_t(bytes) / sizeof(double));
    in.read(reinterpret_cast<char*>(data.data()), bytes);
    if (!in) throw numeric_error("read failed for `" + path + "`");
    return data;
}

} // namespace ocd
