#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ocd/fields.hpp"
#include "ocd/forces.hpp"
#include "ocd/scenario.hpp"
#include "ocd/state.hpp"

namespace ocd {

struct StepDiagnostics {
    double t = 0.0;
    double max_speed = 0.0;          // grid max |va|
    double kinetic_energy = 0.0;     // sum 1/2 rho0 |va|^2 V
    Vec3 p_mdw{};                    // sum rho0 va V (window only)
    Vec3 j_mdw{};                    // sum r_lab x rho0 va V, about the lab origin
    Vec3 force_sum{};                // sum f V
    double force_abs_sum = 0.0;      // sum |f| V, scale for the residual below
    double bookkeeping_residual = 0.0; // |dP - impulse| of this Verlet step
};

struct Trajectory {
    std::vector<StepDiagnostics> steps;
    MediumState state;               // final state
    double u0 = 0.0;
    double measure_time = 0.0;
    double clipped_fraction = 0.0;
    // Window + wake totals at measure_time; in instantaneous mode these are
    // averaged over the final carrier cycle. Angular momenta about the beam
    // axis through the envelope center.
    Vec3 p_mdw_measured{};
    Vec3 j_mdw_measured{};
};

struct RunConfig {
    int threads = 1;
    int snapshot_every = 0; // overrides scenario.outputs when > 0
    std::function<void(const MediumState&, double t, int step)> snapshot_hook;
    std::optional<double> override_u0; // test hook (zero-amplitude limit runs)
};

// Velocity-Verlet pieces. `forces` carries the force at the state's new time;
// the state holds the acceleration of its current time.
void drift(MediumState& state, double dt, int threads = 1);
void kick(MediumState& state, const ForceField& forces, const MediumSpec& medium,
          double dt, int threads = 1);
void recompute_rho_mdw(MediumState& state, const MediumSpec& medium, int threads = 1);

// Composed update for forces that do not depend on the displacement (the
// optical path). Aborts with the offending cell index on non-finite values.
void step(MediumState& state, const ForceField& forces, const MediumSpec& medium,
          double dt, int threads = 1);

// Shifts window contents by the given cell count, accumulating exiting cells
// into the wake totals and zero-initializing entering cells.
void comoving_remap(MediumState& state, const MediumSpec& medium, int shift_cells);

Trajectory run(const Scenario& scenario, const RunConfig& config = {});

} // namespace ocd
