#pragma once

#include <vector>

#include "ocd/fields.hpp"
#include "ocd/grid.hpp"
#include "ocd/vec3.hpp"

namespace ocd {

enum class ForceKind { Optical, Elastic, Total };

// Force density per grid cell [N/m^3].
struct ForceField {
    std::vector<Vec3> f;
    ForceKind kind = ForceKind::Optical;
};

// Optical force density
//   f_opt = -(eps0/2) E^2 grad(n^2) + ((n^2 - 1)/c^2) d/dt (E x H).
// All shipped media are homogeneous, so grad(n^2) = 0 and only the Poynting
// term acts. In time-averaged mode d/dt acts analytically on the squared
// envelope of <E x H>; in instantaneous mode it is a centered difference of
// the instantaneous E x H with half-width T_carrier/64.
Vec3 optical_force_density(const PulseField& field, RunMode mode, const Vec3& r, double t,
                           const Vec3& grad_n2 = {});

// Cache-friendly variants used by the stepping loop.
Vec3 optical_force_time_avg(const PulseField& field, const Vec3& savg_spatial,
                            double z, double t);
Vec3 optical_force_instantaneous(const PulseField& field, const ModeEval& mode,
                                 double z, double t);

// Cubic-crystal elastic force density on a displacement lattice,
//   f_i = C11 d2u_i/dx_i^2 + C44 sum_{j!=i} d2u_i/dx_j^2
//       + (C12 + C44) sum_{j!=i} d2u_j/dx_i dx_j,
// with crystal axes on the grid axes, second-order centered differences and
// zero displacement outside the grid.
void elastic_force_density(const GridSpec& grid, const MediumSpec& medium,
                           const std::vector<Vec3>& displacement, std::vector<Vec3>& out,
                           int threads = 1);

} // namespace ocd
