#pragma once

#include <cstddef>
#include <vector>

#include "ocd/grid.hpp"
#include "ocd/vec3.hpp"

namespace ocd {

// Bookkeeping for material that has left the co-moving window. Angular momentum
// is accumulated about the lab origin; convert with J(o) = J(0) - o x P.
struct WakeTotals {
    Vec3 momentum{};      // sum rho0 va V
    Vec3 angular{};       // sum r_lab x (rho0 va) V
    Vec3 displacement{};  // sum ra V
    double mass = 0.0;    // sum rho_mdw V
    std::size_t cells = 0;
};

// Per-cell medium state on the window grid. Cells are material points at fixed
// lab positions; the window shift maps slot k to lab z = zwin(k) + shift * dz.
struct MediumState {
    GridSpec grid;
    std::vector<Vec3> ra;   // displacement [m]
    std::vector<Vec3> va;   // velocity [m/s]
    std::vector<Vec3> acc;  // acceleration at the state's time [m/s^2]
    std::vector<double> rho_mdw; // density perturbation [kg/m^3]
    long shift = 0;
    WakeTotals wake;
    double peak_speed = 0.0;

    explicit MediumState(const GridSpec& g)
        : grid(g),
          ra(g.ncells()), va(g.ncells()), acc(g.ncells()), rho_mdw(g.ncells(), 0.0) {}

    double lab_z(int k) const { return grid.zwin(k) + double(shift) * grid.dz; }
    Vec3 lab_pos(int i, int j, int k) const {
        return {grid.x(i), grid.y(j), lab_z(k)};
    }
};

} // namespace ocd
