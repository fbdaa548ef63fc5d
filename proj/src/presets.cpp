#include <map>
#include <string>
#include <vector>

#include "ocd/scenario.hpp"

namespace ocd {

namespace {

// Desk-scale silicon pulses at 1550 nm: w0 = 20 lambda0/n, dk0/k0 = 1e-2.
// Windows span 18 sigma_z so the envelope amplitude at both faces stays below
// 1e-8 of its peak; runs last one full window sweep plus margin.

const char* kSiliconCommon = R"(pulse.energy = 5 mJ
pulse.wavelength = 1550 nm
pulse.rel_bandwidth = 1e-2
pulse.waist = 8.92 um
medium.n = 3.4757
medium.rho0 = 2329 kg/m^3
medium.C11 = 165.7 GPa
medium.C12 = 63.9 GPa
medium.C44 = 79.6 GPa
medium.alpha = 1e-8 1/cm
grid.window_speed = auto
grid.t0 = 0 s
grid.t1 = 1.07 ps
grid.dt = 4.0 fs
run.mode = time-averaged
run.elasticity = off
)";

const char* kWideGrid = R"(grid.nx = 96
grid.ny = 96
grid.nz = 112
grid.dx = 0.605 um
grid.dy = 0.605 um
grid.dz = 0.807 um
)";

const char* kNarrowGrid = R"(grid.nx = 80
grid.ny = 80
grid.nz = 112
grid.dx = 0.68 um
grid.dy = 0.68 um
grid.dz = 0.807 um
)";

std::map<std::string, std::string> build_presets() {
    std::map<std::string, std::string> m;
    m["silicon-lg02-linear"] = std::string("scenario.name = silicon-lg02-linear\n") +
                               "pulse.p = 0\npulse.l = 2\npulse.sigma = 0\n" +
                               kSiliconCommon + kWideGrid;
    m["silicon-lg01-linear"] = std::string("scenario.name = silicon-lg01-linear\n") +
                               "pulse.p = 0\npulse.l = 1\npulse.sigma = 0\n" +
                               kSiliconCommon + kWideGrid;
    m["silicon-lg01-circular"] = std::string("scenario.name = silicon-lg01-circular\n") +
                                 "pulse.p = 0\npulse.l = 1\npulse.sigma = 1\n" +
                                 kSiliconCommon + kWideGrid;
    m["silicon-lg00-circular"] = std::string("scenario.name = silicon-lg00-circular\n") +
                                 "pulse.p = 0\npulse.l = 0\npulse.sigma = 1\n" +
                                 kSiliconCommon + kNarrowGrid;
    m["vacuum-null"] = R"(scenario.name = vacuum-null
pulse.p = 0
pulse.l = 0
pulse.sigma = 1
pulse.energy = 5 mJ
pulse.wavelength = 1550 nm
pulse.rel_bandwidth = 1e-2
pulse.waist = 31 um
medium.n = 1.0
medium.rho0 = 2329 kg/m^3
medium.C11 = 165.7 GPa
medium.C12 = 63.9 GPa
medium.C44 = 79.6 GPa
medium.alpha = 0 1/m
grid.nx = 32
grid.ny = 32
grid.nz = 48
grid.dx = 6.3 um
grid.dy = 6.3 um
grid.dz = 6.55 um
grid.window_speed = auto
grid.t0 = 0 s
grid.t1 = 1.07 ps
grid.dt = 4.0 fs
run.mode = time-averaged
run.elasticity = off
)";
    return m;
}

const std::map<std::string, std::string>& presets() {
    static const std::map<std::string, std::string> m = build_presets();
    return m;
}

} // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : presets()) names.push_back(k);
    return names;
}

const std::string* preset_text(const std::string& name) {
    auto it = presets().find(name);
    return it == presets().end() ? nullptr : &it->second;
}

} // namespace ocd
