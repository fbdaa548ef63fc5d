#include "ocd/fiber.hpp"

#include <cmath>
#include <sstream>

#include "ocd/errors.hpp"

namespace ocd {

using constants::c0;

double threshold_intensity(const MediumSpec& medium, double u_th) {
    return u_th * c0 / medium.n;
}

void FiberPlan::validate(std::vector<std::string>& issues) const {
    if (!(radius > 0.0)) issues.push_back("fiber.radius: must be > 0");
    if (!(length > 0.0)) issues.push_back("fiber.length: must be > 0");
    if (!(intensity > 0.0)) issues.push_back("fiber.intensity: must be > 0");
    if (sigma != 1 && sigma != -1) issues.push_back("fiber.sigma: helicity must be +-1");
    if (!(u_th > 0.0)) issues.push_back("fiber.u_th: must be > 0");
    if (!(wavelength > 0.0)) issues.push_back("fiber.wavelength: must be > 0");
    medium.validate(issues);
    if (u_th > 0.0 && intensity > threshold_intensity(medium, u_th)) {
        std::ostringstream os;
        os << "fiber.intensity: " << intensity << " W/m^2 exceeds the breakdown threshold "
           << threshold_intensity(medium, u_th) << " W/m^2 (margin "
           << intensity / threshold_intensity(medium, u_th) << "x)";
        issues.push_back(os.str());
    }
}

namespace {
void require_valid(const FiberPlan& plan) {
    std::vector<std::string> issues;
    plan.validate(issues);
    if (!issues.empty()) throw validation_error(issues);
}
} // namespace

double angular_velocity_formula(int sigma, double n, double intensity, double omega0,
                                double rho0, double radius) {
    return 4.0 * double(sigma) * (n - 1.0 / n) * intensity /
           (c0 * omega0 * rho0 * radius * radius);
}

double angular_velocity(const FiberPlan& plan) {
    require_valid(plan);
    return angular_velocity_formula(plan.sigma, plan.medium.n, plan.intensity,
                                    plan.omega0(), plan.medium.rho0, plan.radius);
}

double displacement_mdw(const FiberPlan& plan, double t) {
    require_valid(plan);
    if (t < 0.0) throw validation_error("displacement_mdw: t must be >= 0");
    return plan.radius * angular_velocity_formula(plan.sigma, plan.medium.n,
                                                  plan.intensity, plan.omega0(),
                                                  plan.medium.rho0, plan.radius) * t;
}

double displacement_abs(const FiberPlan& plan, double t) {
    require_valid(plan);
    if (t < 0.0) throw validation_error("displacement_abs: t must be >= 0");
    const double aL = plan.medium.alpha * plan.length;
    if (aL > 0.1) {
        std::ostringstream os;
        os << "displacement_abs: alpha L = " << aL
           << " invalidates the small-absorption linearization (requires alpha L <= 0.1)";
        throw validation_error(os.str());
    }
    // (1/2) R alpha_abs t^2 with alpha_abs = 4 alpha sigma I / (w0 rho0 R^2).
    return 2.0 * plan.medium.alpha * double(plan.sigma) * plan.intensity * t * t /
           (plan.omega0() * plan.medium.rho0 * plan.radius);
}

std::optional<double> crossover_time(const MediumSpec& medium) {
    if (medium.alpha <= 0.0) return std::nullopt;
    return 2.0 * (medium.n - 1.0 / medium.n) / (c0 * medium.alpha);
}

double displacement_two_beam(const FiberPlan& plan, double t) {
    // The counter-propagating opposite-helicity beam adds the same azimuthal
    // displacement instead of canceling it.
    return 2.0 * std::abs(displacement_mdw(plan, t));
}

SweepTable sweep_grid(const FiberPlan& plan, double t_min, double t_max, int nt,
                      double d_min, double d_max, int nd) {
    if (!(t_min >= 0.0 && t_max >= t_min && nt >= 1))
        throw validation_error("sweep_grid: time range must satisfy 0 <= t_min <= t_max, nt >= 1");
    if (!(d_min > 0.0 && d_max >= d_min && nd >= 1))
        throw validation_error("sweep_grid: diameter range must satisfy 0 < d_min <= d_max, nd >= 1");
    if (auto teq = crossover_time(plan.medium); teq && t_max > *teq * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "sweep_grid: t_max = " << t_max << " s exceeds the crossover time "
           << *teq << " s beyond which absorption dominates";
        throw validation_error(os.str());
    }

    SweepTable tab;
    tab.times.resize(nt);
    tab.diameters.resize(nd);
    for (int i = 0; i < nt; ++i)
        tab.times[i] = nt == 1 ? t_min : t_min + (t_max - t_min) * i / double(nt - 1);
    for (int j = 0; j < nd; ++j)
        tab.diameters[j] = nd == 1 ? d_min : d_min + (d_max - d_min) * j / double(nd - 1);
    tab.dr_mdw.resize(std::size_t(nt) * nd);
    for (int i = 0; i < nt; ++i) {
        for (int j = 0; j < nd; ++j) {
            FiberPlan p = plan;
            p.radius = 0.5 * tab.diameters[j];
            tab.dr_mdw[std::size_t(i) * nd + j] = displacement_mdw(p, tab.times[i]);
        }
    }
    return tab;
}

} // namespace ocd
