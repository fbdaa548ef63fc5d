#include "ocd/observables.hpp"

#include <cmath>
#include <vector>

#include "ocd/parallel.hpp"

namespace ocd {

using constants::c0;
using constants::eps0;
using constants::hbar;

namespace {

struct ColumnCache {
    Vec3 savg;     // spatial factor of <E x H>
    double energy; // spatial factor of the cycle-averaged energy density
};

std::vector<ColumnCache> column_cache(const PulseField& field, const GridSpec& g,
                                      int threads) {
    const std::size_t ncols = std::size_t(g.nx) * g.ny;
    std::vector<ColumnCache> cc(ncols);
    parallel_for_chunks(ncols, threads, [&](std::size_t b, std::size_t e, std::size_t) {
        for (std::size_t c = b; c < e; ++c) {
            const int i = int(c % g.nx), j = int(c / g.nx);
            const ModeEval m = field.mode_at(g.x(i), g.y(j));
            cc[c] = {field.savg_spatial(m), field.energy_density_spatial(m)};
        }
    });
    return cc;
}

} // namespace

FieldMoments field_moments(const PulseField& field, const GridSpec& g, long shift,
                           double t, int threads) {
    const auto cc = column_cache(field, g, threads);
    const double V = g.cell_volume();
    const double inv_c2 = 1.0 / (c0 * c0);

    struct Partial {
        double energy = 0.0;
        Vec3 momentum{}, angular{}, rweighted{};
    };
    std::vector<Partial> partial(chunk_count(std::size_t(g.nz)));
    parallel_for_chunks(std::size_t(g.nz), threads,
                        [&](std::size_t kb, std::size_t ke, std::size_t chunk) {
        Partial p;
        for (std::size_t kk = kb; kk < ke; ++kk) {
            const int k = int(kk);
            const double zlab = g.zwin(k) + double(shift) * g.dz;
            const double env2 = field.envelope_sq(zlab, t);
            if (env2 == 0.0) continue;
            for (int j = 0; j < g.ny; ++j) {
                for (int i = 0; i < g.nx; ++i) {
                    const ColumnCache& c = cc[std::size_t(j) * g.nx + i];
                    const Vec3 r{g.x(i), g.y(j), zlab};
                    const Vec3 gmom = (env2 * inv_c2 * V) * c.savg;
                    const double ue = env2 * V * c.energy;
                    p.energy += ue;
                    p.momentum += gmom;
                    p.angular += cross(r, gmom);
                    p.rweighted += ue * r;
                }
            }
        }
        partial[chunk] = p;
    });
    FieldMoments out;
    Vec3 rw{};
    for (const Partial& p : partial) {
        out.energy += p.energy;
        out.momentum += p.momentum;
        out.angular += p.angular;
        rw += p.rweighted;
    }
    out.centroid = out.energy > 0.0 ? rw / out.energy : Vec3{};
    return out;
}

Vec3 angular_momentum_field(const PulseField& field, const GridSpec& g, long shift,
                            double t, const Vec3& origin, int threads) {
    const FieldMoments m = field_moments(field, g, shift, t, threads);
    return m.angular - cross(origin, m.momentum);
}

Vec3 angular_momentum_mdw(const MediumState& st, const MediumSpec& med,
                          const Vec3& origin, int threads) {
    const GridSpec& g = st.grid;
    const double V = g.cell_volume();
    struct Partial {
        Vec3 p{}, j{};
    };
    std::vector<Partial> partial(chunk_count(st.va.size()));
    parallel_for_chunks(st.va.size(), threads,
                        [&](std::size_t b, std::size_t e, std::size_t chunk) {
        Partial acc;
        for (std::size_t idx = b; idx < e; ++idx) {
            const int i = int(idx % g.nx);
            const int j = int((idx / g.nx) % g.ny);
            const int k = int(idx / (std::size_t(g.nx) * g.ny));
            const Vec3 mom = (med.rho0 * V) * st.va[idx];
            acc.p += mom;
            acc.j += cross(st.lab_pos(i, j, k), mom);
        }
        partial[chunk] = acc;
    });
    Vec3 p = st.wake.momentum, j = st.wake.angular;
    for (const Partial& q : partial) {
        p += q.p;
        j += q.j;
    }
    return j - cross(origin, p);
}

Vec3 angular_momentum_mp(const PulseField& field, const MediumState& state,
                         const MediumSpec& medium, double t, const Vec3& origin,
                         int threads) {
    return angular_momentum_field(field, state.grid, state.shift, t, origin, threads) +
           angular_momentum_mdw(state, medium, origin, threads);
}

LinearMomenta linear_momenta(const PulseField& field, const MediumState& state,
                             const MediumSpec& medium, double t, int threads) {
    LinearMomenta out;
    out.field = field_moments(field, state.grid, state.shift, t, threads).momentum;
    const GridSpec& g = state.grid;
    const double scale = medium.rho0 * g.cell_volume();
    out.mdw = state.wake.momentum +
              Vec3{deterministic_sum(state.va.size(), threads,
                                     [&](std::size_t b, std::size_t e) {
                       double s = 0.0;
                       for (std::size_t i = b; i < e; ++i) s += state.va[i].x;
                       return s * scale;
                   }),
                   deterministic_sum(state.va.size(), threads,
                                     [&](std::size_t b, std::size_t e) {
                       double s = 0.0;
                       for (std::size_t i = b; i < e; ++i) s += state.va[i].y;
                       return s * scale;
                   }),
                   deterministic_sum(state.va.size(), threads,
                                     [&](std::size_t b, std::size_t e) {
                       double s = 0.0;
                       for (std::size_t i = b; i < e; ++i) s += state.va[i].z;
                       return s * scale;
                   })};
    out.mp = out.field + out.mdw;
    return out;
}

double transferred_mass(const MediumState& state, int threads) {
    const double V = state.grid.cell_volume();
    const double window = deterministic_sum(
        state.rho_mdw.size(), threads, [&](std::size_t b, std::size_t e) {
            double s = 0.0;
            for (std::size_t i = b; i < e; ++i)
                if (state.rho_mdw[i] > 0.0) s += state.rho_mdw[i];
            return s * V;
        });
    return window + std::max(state.wake.mass, 0.0);
}

MomentumReport make_report(const PulseField& field, const GridSpec& grid,
                           const MediumState& state, const MediumSpec& medium, double t,
                           const Vec3* p_mdw_override, const Vec3* j_mdw_override,
                           int threads) {
    MomentumReport r;
    const Vec3 origin{0.0, 0.0, field.envelope_center(t)};
    const FieldMoments fm = field_moments(field, grid, state.shift, t, threads);
    r.U_field = fm.energy;
    r.N_ph = field.pulse().photon_number();
    r.P_field = fm.momentum;
    r.J_field = fm.angular - cross(origin, fm.momentum);

    if (p_mdw_override && j_mdw_override) {
        r.P_mdw = *p_mdw_override;
        r.J_mdw = *j_mdw_override;
    } else {
        r.P_mdw = linear_momenta(field, state, medium, t, threads).mdw;
        r.J_mdw = angular_momentum_mdw(state, medium, origin, threads);
    }
    r.P_mp = r.P_field + r.P_mdw;
    r.J_mp = r.J_field + r.J_mdw;

    r.delta_m = transferred_mass(state, threads);
    const double n = medium.n;
    r.delta_m_expected = (n * n - 1.0) * field.pulse().energy / (c0 * c0);

    const double jun = r.N_ph * hbar;
    const double pun = r.N_ph * hbar * field.omega0() / c0;
    r.J_field_per_photon = r.J_field / jun;
    r.J_mdw_per_photon = r.J_mdw / jun;
    r.J_mp_per_photon = r.J_mp / jun;
    r.P_field_per_photon = r.P_field / pun;
    r.P_mdw_per_photon = r.P_mdw / pun;
    r.P_mp_per_photon = r.P_mp / pun;
    return r;
}

AngularDecomposition oam_sam_split(const PulseField& field, const GridSpec& g,
                                   long shift, double t, int threads) {
    const PulseSpec& pu = field.pulse();
    const double nk0 = field.medium().n * pu.k0();
    const double ndk0 = field.medium().n * pu.dk0();
    const double w0 = field.omega0();
    const double zc = field.envelope_center(t);
    const int sigma = pu.sigma;
    const double V = g.cell_volume();

    // Vector potential phasor components g_i and their transverse gradients,
    // per column; A_i = g_i e^{i n k0 z} env(z), E_i = i w0 A_i.
    struct Col {
        cdouble gc[3], gx[3], gy[3];
    };
    const std::size_t ncols = std::size_t(g.nx) * g.ny;
    std::vector<Col> cols(ncols);
    parallel_for_chunks(ncols, threads, [&](std::size_t b, std::size_t e, std::size_t) {
        for (std::size_t c = b; c < e; ++c) {
            const int i = int(c % g.nx), j = int(c / g.nx);
            const ModeEval m = lg_mode_grad2(pu, field.u0(), g.x(i), g.y(j));
            Col& cl = cols[c];
            const cdouble ik{0.0, 1.0 / nk0};
            if (sigma == 0) {
                cl.gc[0] = m.u;      cl.gc[1] = 0.0; cl.gc[2] = ik * m.ux;
                cl.gx[0] = m.ux;     cl.gx[1] = 0.0; cl.gx[2] = ik * m.uxx;
                cl.gy[0] = m.uy;     cl.gy[1] = 0.0; cl.gy[2] = ik * m.uxy;
            } else {
                const cdouble is{0.0, double(sigma)};
                const double s2 = 1.0 / std::sqrt(2.0);
                cl.gc[0] = s2 * m.u;   cl.gc[1] = s2 * is * m.u;
                cl.gc[2] = s2 * ik * (m.ux + is * m.uy);
                cl.gx[0] = s2 * m.ux;  cl.gx[1] = s2 * is * m.ux;
                cl.gx[2] = s2 * ik * (m.uxx + is * m.uxy);
                cl.gy[0] = s2 * m.uy;  cl.gy[1] = s2 * is * m.uy;
                cl.gy[2] = s2 * ik * (m.uxy + is * m.uyy);
            }
        }
    });

    struct Partial {
        Vec3 L{}, S{};
    };
    std::vector<Partial> partial(chunk_count(std::size_t(g.nz)));
    parallel_for_chunks(std::size_t(g.nz), threads,
                        [&](std::size_t kb, std::size_t ke, std::size_t chunk) {
        Partial p;
        for (std::size_t kk = kb; kk < ke; ++kk) {
            const int k = int(kk);
            const double zlab = g.zwin(k) + double(shift) * g.dz;
            const double xi = zlab - zc;
            const double env2 = std::exp(-ndk0 * ndk0 * xi * xi);
            if (env2 == 0.0) continue;
            const cdouble dz_fac{-ndk0 * ndk0 * xi, nk0}; // (env'/env) + i n k0
            const double rz = zlab - zc;
            for (int j = 0; j < g.ny; ++j) {
                const double y = g.y(j);
                for (int i = 0; i < g.nx; ++i) {
                    const double x = g.x(i);
                    const Col& cl = cols[std::size_t(j) * g.nx + i];
                    cdouble lx{}, ly{}, lz{};
                    for (int m3 = 0; m3 < 3; ++m3) {
                        const cdouble az = dz_fac * cl.gc[m3];
                        const cdouble rnx = y * az - rz * cl.gy[m3];
                        const cdouble rny = rz * cl.gx[m3] - x * az;
                        const cdouble rnz = x * cl.gy[m3] - y * cl.gx[m3];
                        // E_i ((r x grad) A_i)* with E_i = i w0 A_i.
                        const cdouble Ei = cdouble{0.0, w0} * cl.gc[m3];
                        lx += Ei * std::conj(rnx);
                        ly += Ei * std::conj(rny);
                        lz += Ei * std::conj(rnz);
                    }
                    const double wgt = 0.5 * eps0 * env2 * V;
                    p.L += wgt * Vec3{lx.real(), ly.real(), lz.real()};
                    // S density: (eps0/2) Re[E x A*] = (eps0 w0 / 2) Re[i g x g*].
                    const cdouble sx = cl.gc[1] * std::conj(cl.gc[2]) -
                                       cl.gc[2] * std::conj(cl.gc[1]);
                    const cdouble sy = cl.gc[2] * std::conj(cl.gc[0]) -
                                       cl.gc[0] * std::conj(cl.gc[2]);
                    const cdouble sz = cl.gc[0] * std::conj(cl.gc[1]) -
                                       cl.gc[1] * std::conj(cl.gc[0]);
                    const cdouble iw{0.0, w0};
                    p.S += wgt * Vec3{(iw * sx).real(), (iw * sy).real(), (iw * sz).real()};
                }
            }
        }
        partial[chunk] = p;
    });

    AngularDecomposition out;
    for (const Partial& p : partial) {
        out.L_field += p.L;
        out.S_field += p.S;
    }
    const FieldMoments fm = field_moments(field, g, shift, t, threads);
    out.J_ext = cross(fm.centroid, fm.momentum);
    out.J_int = fm.angular - out.J_ext;
    out.approximate = true;
    out.note = "vector-potential OAM/SAM split of a paraxial field is approximate";
    return out;
}

void external_internal_split(const PulseField& field, const GridSpec& g, long shift,
                             double t, const Vec3& r0, Vec3& j_ext, Vec3& j_int,
                             int threads) {
    const FieldMoments fm = field_moments(field, g, shift, t, threads);
    j_ext = cross(r0, fm.momentum);
    j_int = fm.angular - j_ext;
}

} // namespace ocd
