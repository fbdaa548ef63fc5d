#include <cmath>
#include <string>
#include <vector>

#include "ocd/constants.hpp"
#include "ocd/grid.hpp"
#include "ocd/medium.hpp"
#include "ocd/pulse.hpp"

namespace ocd {

using constants::c0;

void PulseSpec::validate(std::vector<std::string>& issues) const {
    if (p < 0) issues.push_back("pulse.p: radial index must be >= 0");
    if (sigma != 0 && sigma != 1 && sigma != -1)
        issues.push_back("pulse.sigma: helicity must be -1, 0 or +1");
    if (!(energy > 0.0)) issues.push_back("pulse.energy: U0 must be > 0");
    if (!(wavelength > 0.0)) issues.push_back("pulse.wavelength: lambda0 must be > 0");
    if (!(waist > 0.0)) issues.push_back("pulse.waist: w0 must be > 0");
    if (!(rel_bandwidth > 0.0 && rel_bandwidth < 0.1))
        issues.push_back("pulse.rel_bandwidth: dk0/k0 must lie in (0, 0.1) "
                         "for the monochromatic approximation to hold");
}

void MediumSpec::validate(std::vector<std::string>& issues) const {
    if (!(n >= 1.0)) issues.push_back("medium.n: refractive index must be >= 1");
    if (!(rho0 > 0.0)) issues.push_back("medium.rho0: mass density must be > 0");
    if (!(C11 > 0.0)) issues.push_back("medium.C11: must be > 0");
    if (!(C12 > 0.0)) issues.push_back("medium.C12: must be > 0");
    if (!(C44 > 0.0)) issues.push_back("medium.C44: must be > 0");
    if (!(alpha >= 0.0)) issues.push_back("medium.alpha: must be >= 0");
}

void GridSpec::validate(std::vector<std::string>& issues, const PulseSpec& pulse,
                        const MediumSpec& medium, RunMode mode, bool elasticity) const {
    if (nx <= 0 || ny <= 0 || nz <= 0)
        issues.push_back("grid.nx/ny/nz: cell counts must be > 0");
    if (!(dx > 0.0 && dy > 0.0 && dz > 0.0))
        issues.push_back("grid.dx/dy/dz: spacings must be > 0");
    if (!(dt > 0.0)) issues.push_back("grid.dt: time step must be > 0");
    if (!(t1 > t0)) issues.push_back("grid.t0/t1: need t1 > t0");
    if (!issues.empty()) return; // derived checks below need sane primitives

    if (extent_x() < 6.0 * pulse.waist || extent_y() < 6.0 * pulse.waist)
        issues.push_back("grid: transverse extent must be >= 6 w0 to contain the envelope");
    const double sz = pulse.sigma_z(medium.n);
    if (extent_z() < 8.0 * sz)
        issues.push_back("grid: longitudinal extent must be >= 8 sigma_z to contain the envelope");

    if (mode == RunMode::TimeAveraged) {
        const double cap = 0.05 / (pulse.dk0() * c0);
        if (dt > cap)
            issues.push_back("grid.dt: time-averaged mode requires dt <= 0.05/(dk0 c) = " +
                             std::to_string(cap) + " s");
    } else {
        const double cap = (2.0 * constants::pi / pulse.omega0()) / 32.0;
        if (dt > cap)
            issues.push_back("grid.dt: instantaneous mode requires dt <= T_carrier/32 = " +
                             std::to_string(cap) + " s");
    }
    if (elasticity) {
        const double vl = std::sqrt(medium.C11 / medium.rho0);
        const double cap = 0.5 * std::min(dx, std::min(dy, dz)) / vl;
        if (dt > cap)
            issues.push_back("grid.dt: explicit elasticity requires dt <= 0.5 min(dx,dy,dz)/v_L = " +
                             std::to_string(cap) + " s");
    }

    const double cn = c0 / medium.n;
    if (window_speed != 0.0 && std::abs(window_speed - cn) > 1e-9 * cn)
        issues.push_back("grid.window_speed: must be c/n (co-moving) or 0 (static window)");
    if (window_speed != 0.0 && (t1 - t0) * cn < extent_z())
        issues.push_back("grid.t0/t1: co-moving run must last at least one full window sweep "
                         "(t1 - t0 >= nz dz n / c) so every cell carries a complete history");
}

} // namespace ocd
