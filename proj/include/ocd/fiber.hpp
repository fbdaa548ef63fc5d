#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ocd/constants.hpp"
#include "ocd/medium.hpp"

namespace ocd {

// Closed-form planner for the fiber-rotation measurement: two counter-propagating
// circularly polarized CW beams of opposite handedness spin a free silicon fiber;
// the azimuthal surface displacement from the medium's mass density wave grows
// linearly in time while the absorption-driven one grows quadratically.
struct FiberPlan {
    double radius = 0.0;     // fiber radius R [m]
    double length = 0.0;     // fiber length L [m]
    double intensity = 0.0;  // single-beam time-averaged intensity I [W/m^2]
    int sigma = 1;           // beam helicity, +-1
    MediumSpec medium;
    double u_th = 0.0;       // breakdown threshold energy density [J/m^3]
    double wavelength = 0.0; // beam vacuum wavelength [m], sets omega0

    double omega0() const {
        return 2.0 * constants::pi * constants::c0 / wavelength;
    }
    // Total electromagnetic energy inside the fiber for the two-beam setup.
    double energy_inside() const {
        return 2.0 * medium.n * constants::pi * radius * radius * length * intensity /
               constants::c0;
    }
    double moment_of_inertia() const {
        return 0.5 * constants::pi * medium.rho0 * radius * radius * radius * radius *
               length;
    }

    void validate(std::vector<std::string>& issues) const;
};

// Breakdown threshold irradiance I_th = u_th c / n.
double threshold_intensity(const MediumSpec& medium, double u_th);

// Omega = 4 sigma (n - 1/n) I / (c w0 rho0 R^2). The formula-level call accepts
// sigma = 0 (a linear beam exerts no spin torque).
double angular_velocity_formula(int sigma, double n, double intensity, double omega0,
                                double rho0, double radius);

// Plan-level operations; these enforce the plan invariants (intensity guard,
// small-absorption linearization) and throw validation_error on refusal.
double angular_velocity(const FiberPlan& plan);
double displacement_mdw(const FiberPlan& plan, double t);
double displacement_abs(const FiberPlan& plan, double t);

// Time at which the absorption displacement catches up with the MDW one,
// t_eq = 2 (n - 1/n) / (c alpha). Empty for alpha = 0 (no crossover).
std::optional<double> crossover_time(const MediumSpec& medium);

// Both beams displace the surface the same way; the measurable total.
double displacement_two_beam(const FiberPlan& plan, double t);

struct SweepTable {
    std::vector<double> times;     // [s]
    std::vector<double> diameters; // [m]
    std::vector<double> dr_mdw;    // row-major [times x diameters], [m]
};

SweepTable sweep_grid(const FiberPlan& plan, double t_min, double t_max, int nt,
                      double d_min, double d_max, int nd);

} // namespace ocd
