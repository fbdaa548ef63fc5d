#include "ocd/study.hpp"

#include <cmath>
#include <sstream>

#include "ocd/constants.hpp"
#include "ocd/dynamics.hpp"
#include "ocd/errors.hpp"
#include "ocd/normalize.hpp"
#include "ocd/observables.hpp"

namespace ocd {

using constants::hbar;

ConvergenceResult convergence_study(const Scenario& base, int refinements, int threads) {
    const int target = base.pulse.l + base.pulse.sigma;
    if (target == 0)
        throw validation_error("convergence study needs l + sigma != 0 "
                               "(the quantization target would be zero)");

    ConvergenceResult out;
    const double factor = std::sqrt(2.0);
    for (int level = 0; level <= refinements; ++level) {
        Scenario sc = base;
        const double scale = std::pow(factor, level);
        sc.pulse.waist *= scale;
        sc.grid.dx *= scale;
        sc.grid.dy *= scale;

        RunConfig cfg;
        cfg.threads = threads;
        const Trajectory traj = run(sc, cfg);
        const PulseField field(sc.pulse, sc.medium, traj.u0, 0.0, sc.grid.t0);
        const MomentumReport rep =
            make_report(field, sc.grid, traj.state, sc.medium, traj.measure_time,
                        &traj.p_mdw_measured, &traj.j_mdw_measured, threads);

        ConvergenceLevel lv;
        lv.waist = sc.pulse.waist;
        lv.dx = sc.grid.dx;
        lv.j_mp_per_photon_z = rep.J_mp_per_photon.z;
        lv.error = std::abs(rep.J_mp_per_photon.z / double(target) - 1.0);
        out.levels.push_back(lv);
    }

    out.monotone = true;
    for (std::size_t i = 0; i + 1 < out.levels.size(); ++i) {
        const double e0 = out.levels[i].error, e1 = out.levels[i + 1].error;
        if (!(e1 < e0)) out.monotone = false;
        const double order = std::log(e0 / e1) / std::log(factor);
        out.observed_orders.push_back(order);
    }
    out.min_order = out.observed_orders.empty() ? 0.0 : out.observed_orders.front();
    for (double o : out.observed_orders) out.min_order = std::min(out.min_order, o);
    return out;
}

std::string format_convergence_report(const ConvergenceResult& r) {
    std::ostringstream os;
    os << "convergence.schema = ocd-convergence-1\n";
    os << "convergence.levels = " << r.levels.size() << "\n";
    for (std::size_t i = 0; i < r.levels.size(); ++i) {
        const auto& lv = r.levels[i];
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "level.%zu = waist %.6g m, dx %.6g m, J_mp/N_ph %.8g hbar, error %.3e",
                      i, lv.waist, lv.dx, lv.j_mp_per_photon_z, lv.error);
        os << buf << "\n";
    }
    for (std::size_t i = 0; i < r.observed_orders.size(); ++i) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "observed_order.%zu = %.3f", i,
                      r.observed_orders[i]);
        os << buf << "\n";
    }
    os << "error_monotone_decreasing = " << (r.monotone ? "yes" : "no") << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "min_observed_order = %.3f", r.min_order);
    os << buf << "\n";
    return os.str();
}

} // namespace ocd
