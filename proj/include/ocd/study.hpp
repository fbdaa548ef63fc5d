#pragma once

#include <string>
#include <vector>

#include "ocd/scenario.hpp"

namespace ocd {

// Grid-refinement study of the total angular momentum quantization
// J_MP / (N_ph hbar) -> l + sigma.
//
// At desk scale the leading error is the paraxial field correction, which
// scales as (lambda0 / w0)^2; pure cell refinement bottoms out far below it.
// Each refinement level therefore scales the waist by sqrt(2) and the
// transverse grid with it (fixed cells per waist), driving the quantization
// error to zero at second order in the refinement factor.
struct ConvergenceLevel {
    double waist = 0.0;
    double dx = 0.0;
    double j_mp_per_photon_z = 0.0;
    double error = 0.0; // |J_MP/(N_ph hbar (l+sigma)) - 1|
};

struct ConvergenceResult {
    std::vector<ConvergenceLevel> levels;
    std::vector<double> observed_orders; // one per successive pair
    double min_order = 0.0;
    bool monotone = false;
};

ConvergenceResult convergence_study(const Scenario& base, int refinements,
                                    int threads = 1);

std::string format_convergence_report(const ConvergenceResult& r);

} // namespace ocd
