#pragma once

#include "ocd/fields.hpp"
#include "ocd/grid.hpp"

namespace ocd {

struct NormalizeInfo {
    double u0 = 0.0;               // amplitude that makes the grid energy equal U0
    double unit_energy = 0.0;      // grid energy at u0 = 1 [J]
    double clipped_fraction = 0.0; // envelope weight missed by the window
};

// Fixes u0 by requiring that the discretized cycle-averaged field energy of the
// pulse, with the envelope centered in the window, equals pulse.energy. Throws
// numeric_error naming the clipped fraction when the window fails to enclose
// the pulse to within clip_tol of its energy.
NormalizeInfo normalize_info(const PulseSpec& pulse, const MediumSpec& medium,
                             const GridSpec& grid, double clip_tol = 1e-6);

double normalize_u0(const PulseSpec& pulse, const MediumSpec& medium,
                    const GridSpec& grid, double clip_tol = 1e-6);

} // namespace ocd
