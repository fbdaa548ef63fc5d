#include "ocd/forces.hpp"

#include <cmath>

#include "ocd/constants.hpp"
#include "ocd/parallel.hpp"

namespace ocd {

using constants::c0;
using constants::eps0;

namespace {
double coupling(const MediumSpec& m) {
    return (m.n * m.n - 1.0) / (c0 * c0);
}
} // namespace

Vec3 optical_force_time_avg(const PulseField& field, const Vec3& savg_spatial,
                            double z, double t) {
    return coupling(field.medium()) * field.denv2_dt(z, t) * savg_spatial;
}

Vec3 optical_force_instantaneous(const PulseField& field, const ModeEval& mode,
                                 double z, double t) {
    const double dt = field.carrier_period() / 64.0;
    const FieldSample plus = field.assemble(mode, z, t + dt, t + dt);
    const FieldSample minus = field.assemble(mode, z, t - dt, t - dt);
    const Vec3 dS = (cross(plus.E, plus.H) - cross(minus.E, minus.H)) / (2.0 * dt);
    return coupling(field.medium()) * dS;
}

Vec3 optical_force_density(const PulseField& field, RunMode mode, const Vec3& r, double t,
                           const Vec3& grad_n2) {
    const ModeEval m = field.mode_at(r.x, r.y);
    Vec3 f;
    if (mode == RunMode::TimeAveraged) {
        f = optical_force_time_avg(field, field.savg_spatial(m), r.z, t);
    } else {
        f = optical_force_instantaneous(field, m, r.z, t);
    }
    if (grad_n2.x != 0.0 || grad_n2.y != 0.0 || grad_n2.z != 0.0) {
        const FieldSample s = field.assemble(m, r.z, t, t);
        f -= (0.5 * eps0 * dot(s.E, s.E)) * grad_n2;
    }
    return f;
}

void elastic_force_density(const GridSpec& g, const MediumSpec& med,
                           const std::vector<Vec3>& u, std::vector<Vec3>& out,
                           int threads) {
    out.assign(g.ncells(), Vec3{});
    const double c11 = med.C11, c44 = med.C44, cmix = med.C12 + med.C44;
    const double ix2 = 1.0 / (g.dx * g.dx), iy2 = 1.0 / (g.dy * g.dy), iz2 = 1.0 / (g.dz * g.dz);
    const double ixy = 1.0 / (4.0 * g.dx * g.dy);
    const double ixz = 1.0 / (4.0 * g.dx * g.dz);
    const double iyz = 1.0 / (4.0 * g.dy * g.dz);

    // Zero displacement outside the grid.
    auto at = [&](int i, int j, int k) -> Vec3 {
        if (i < 0 || j < 0 || k < 0 || i >= g.nx || j >= g.ny || k >= g.nz) return {};
        return u[g.index(i, j, k)];
    };

    parallel_for_chunks(std::size_t(g.nz), threads,
                        [&](std::size_t kb, std::size_t ke, std::size_t) {
        for (std::size_t kk = kb; kk < ke; ++kk) {
            const int k = int(kk);
            for (int j = 0; j < g.ny; ++j) {
                for (int i = 0; i < g.nx; ++i) {
                    const Vec3 c = at(i, j, k);
                    const Vec3 xp = at(i + 1, j, k), xm = at(i - 1, j, k);
                    const Vec3 yp = at(i, j + 1, k), ym = at(i, j - 1, k);
                    const Vec3 zp = at(i, j, k + 1), zm = at(i, j, k - 1);
                    const Vec3 dxx = (xp - 2.0 * c + xm) * ix2;
                    const Vec3 dyy = (yp - 2.0 * c + ym) * iy2;
                    const Vec3 dzz = (zp - 2.0 * c + zm) * iz2;
                    // Mixed second derivatives via the four-point cross stencil.
                    const Vec3 dxy = (at(i + 1, j + 1, k) - at(i + 1, j - 1, k) -
                                      at(i - 1, j + 1, k) + at(i - 1, j - 1, k)) * ixy;
                    const Vec3 dxz = (at(i + 1, j, k + 1) - at(i + 1, j, k - 1) -
                                      at(i - 1, j, k + 1) + at(i - 1, j, k - 1)) * ixz;
                    const Vec3 dyz = (at(i, j + 1, k + 1) - at(i, j + 1, k - 1) -
                                      at(i, j - 1, k + 1) + at(i, j - 1, k - 1)) * iyz;
                    Vec3 f;
                    f.x = c11 * dxx.x + c44 * (dyy.x + dzz.x) + cmix * (dxy.y + dxz.z);
                    f.y = c11 * dyy.y + c44 * (dxx.y + dzz.y) + cmix * (dxy.x + dyz.z);
                    f.z = c11 * dzz.z + c44 * (dxx.z + dyy.z) + cmix * (dxz.x + dyz.y);
                    out[g.index(i, j, k)] = f;
                }
            }
        }
    });
}

} // namespace ocd
