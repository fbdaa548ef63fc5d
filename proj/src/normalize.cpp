#include "ocd/normalize.hpp"

#include <cmath>
#include <sstream>

#include "ocd/errors.hpp"

namespace ocd {

using constants::pi;

NormalizeInfo normalize_info(const PulseSpec& pulse, const MediumSpec& medium,
                             const GridSpec& grid, double clip_tol) {
    const PulseField field(pulse, medium, 1.0);

    // Both the energy density and |u|^2 factorize into transverse * envelope^2.
    double e_perp = 0.0;  // energy density spatial factor, quadrature
    double w_perp = 0.0;  // |u|^2 transverse weight, quadrature
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            const ModeEval m = field.mode_at(grid.x(i), grid.y(j));
            e_perp += field.energy_density_spatial(m);
            w_perp += std::norm(m.u);
        }
    }
    e_perp *= grid.dx * grid.dy;
    w_perp *= grid.dx * grid.dy;

    double zsum = 0.0; // envelope^2 longitudinal weight, envelope centered in window
    const double ndk0 = medium.n * pulse.dk0();
    for (int k = 0; k < grid.nz; ++k) {
        const double xi = grid.zwin(k);
        zsum += std::exp(-ndk0 * ndk0 * xi * xi);
    }
    zsum *= grid.dz;

    // Infinite-domain references for the clipping diagnostic.
    const double w_perp_ref = lg_mode_weight(pulse);
    const double z_ref = std::sqrt(pi) / ndk0;
    const double captured = (w_perp * zsum) / (w_perp_ref * z_ref);
    const double clipped = 1.0 - captured;

    if (clipped > clip_tol) {
        std::ostringstream os;
        os << "pulse energy not enclosed by the grid window: clipped fraction "
           << clipped << " exceeds " << clip_tol
           << " (enlarge the transverse box or the z window)";
        throw numeric_error(os.str());
    }

    NormalizeInfo info;
    info.unit_energy = e_perp * zsum;
    info.clipped_fraction = clipped > 0.0 ? clipped : 0.0;
    info.u0 = std::sqrt(pulse.energy / info.unit_energy);
    return info;
}

double normalize_u0(const PulseSpec& pulse, const MediumSpec& medium,
                    const GridSpec& grid, double clip_tol) {
    return normalize_info(pulse, medium, grid, clip_tol).u0;
}

} // namespace ocd
