#include "ocd/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "ocd/errors.hpp"
#include "ocd/normalize.hpp"
#include "ocd/parallel.hpp"

namespace ocd {

using constants::c0;

namespace {

void throw_at_cell(const GridSpec& g, std::size_t idx, const char* what) {
    const int i = int(idx % g.nx);
    const int j = int((idx / g.nx) % g.ny);
    const int k = int(idx / (std::size_t(g.nx) * g.ny));
    std::ostringstream os;
    os << what << " at cell (" << i << ", " << j << ", " << k << ")";
    throw numeric_error(os.str());
}

void check_finite(const MediumState& st, int threads) {
    const std::size_t n = st.va.size();
    std::vector<std::size_t> bad(chunk_count(n), std::size_t(-1));
    parallel_for_chunks(n, threads, [&](std::size_t b, std::size_t e, std::size_t c) {
        for (std::size_t i = b; i < e; ++i) {
            if (!finite(st.va[i]) || !finite(st.ra[i])) {
                bad[c] = i;
                return;
            }
        }
    });
    for (std::size_t idx : bad)
        if (idx != std::size_t(-1)) throw_at_cell(st.grid, idx, "non-finite state");
}

struct CellReduce {
    Vec3 p{};          // rho0 va V
    Vec3 j{};          // r x rho0 va V about the lab origin
    double ke = 0.0;
    double max_speed = 0.0;
    Vec3 fsum{};       // f V
    double fabs = 0.0; // |f| V
};

CellReduce reduce_cells(const MediumState& st, const MediumSpec& med,
                        const ForceField* forces, int threads) {
    const GridSpec& g = st.grid;
    const double V = g.cell_volume();
    const double rho0 = med.rho0;
    const std::size_t n = st.va.size();
    std::vector<CellReduce> partial(chunk_count(n));
    parallel_for_chunks(n, threads, [&](std::size_t b, std::size_t e, std::size_t c) {
        CellReduce r;
        for (std::size_t idx = b; idx < e; ++idx) {
            const int i = int(idx % g.nx);
            const int j = int((idx / g.nx) % g.ny);
            const int k = int(idx / (std::size_t(g.nx) * g.ny));
            const Vec3 pos = st.lab_pos(i, j, k);
            const Vec3 mom = (rho0 * V) * st.va[idx];
            r.p += mom;
            r.j += cross(pos, mom);
            r.ke += 0.5 * rho0 * V * dot(st.va[idx], st.va[idx]);
            r.max_speed = std::max(r.max_speed, dot(st.va[idx], st.va[idx]));
            if (forces) {
                r.fsum += V * forces->f[idx];
                r.fabs += V * norm(forces->f[idx]);
            }
        }
        partial[c] = r;
    });
    CellReduce out;
    for (const CellReduce& r : partial) {
        out.p += r.p;
        out.j += r.j;
        out.ke += r.ke;
        out.max_speed = std::max(out.max_speed, r.max_speed);
        out.fsum += r.fsum;
        out.fabs += r.fabs;
    }
    out.max_speed = std::sqrt(out.max_speed);
    return out;
}

} // namespace

void drift(MediumState& st, double dt, int threads) {
    const double half_dt2 = 0.5 * dt * dt;
    parallel_for_chunks(st.ra.size(), threads,
                        [&](std::size_t b, std::size_t e, std::size_t) {
        for (std::size_t i = b; i < e; ++i)
            st.ra[i] += st.va[i] * dt + st.acc[i] * half_dt2;
    });
}

void kick(MediumState& st, const ForceField& forces, const MediumSpec& medium,
          double dt, int threads) {
    const double inv_rho = 1.0 / medium.rho0;
    const double half_dt = 0.5 * dt;
    parallel_for_chunks(st.va.size(), threads,
                        [&](std::size_t b, std::size_t e, std::size_t) {
        for (std::size_t i = b; i < e; ++i) {
            const Vec3 a_new = forces.f[i] * inv_rho;
            st.va[i] += (st.acc[i] + a_new) * half_dt;
            st.acc[i] = a_new;
        }
    });
}

void recompute_rho_mdw(MediumState& st, const MediumSpec& medium, int threads) {
    const GridSpec& g = st.grid;
    // Centered differences with edge clamping; the displacement field is
    // settled (constant) or zero at the window faces.
    parallel_for_chunks(std::size_t(g.nz), threads,
                        [&](std::size_t kb, std::size_t ke, std::size_t) {
        for (std::size_t kk = kb; kk < ke; ++kk) {
            const int k = int(kk);
            const int kp = std::min(k + 1, g.nz - 1), km = std::max(k - 1, 0);
            const double wz = (kp - km) * g.dz;
            for (int j = 0; j < g.ny; ++j) {
                const int jp = std::min(j + 1, g.ny - 1), jm = std::max(j - 1, 0);
                const double wy = (jp - jm) * g.dy;
                for (int i = 0; i < g.nx; ++i) {
                    const int ip = std::min(i + 1, g.nx - 1), im = std::max(i - 1, 0);
                    const double wx = (ip - im) * g.dx;
                    const double div =
                        (st.ra[g.index(ip, j, k)].x - st.ra[g.index(im, j, k)].x) / wx +
                        (st.ra[g.index(i, jp, k)].y - st.ra[g.index(i, jm, k)].y) / wy +
                        (st.ra[g.index(i, j, kp)].z - st.ra[g.index(i, j, km)].z) / wz;
                    st.rho_mdw[g.index(i, j, k)] = -medium.rho0 * div;
                }
            }
        }
    });
}

void step(MediumState& st, const ForceField& forces, const MediumSpec& medium,
          double dt, int threads) {
    drift(st, dt, threads);
    kick(st, forces, medium, dt, threads);
    recompute_rho_mdw(st, medium, threads);
    check_finite(st, threads);
}

void comoving_remap(MediumState& st, const MediumSpec& medium, int shift_cells) {
    if (shift_cells == 0) return;
    if (shift_cells < 0) throw numeric_error("comoving_remap: negative shift");
    const GridSpec& g = st.grid;
    const int s = shift_cells;
    const double V = g.cell_volume();
    const std::size_t plane = std::size_t(g.nx) * g.ny;

    // Accumulate exiting material (slots 0..s-1) before overwriting.
    const double loss_cap = 1e-8 * st.peak_speed;
    for (int k = 0; k < std::min(s, g.nz); ++k) {
        for (int j = 0; j < g.ny; ++j) {
            for (int i = 0; i < g.nx; ++i) {
                const std::size_t idx = g.index(i, j, k);
                const Vec3 v = st.va[idx];
                if (st.peak_speed > 0.0 && norm(v) > loss_cap) {
                    std::ostringstream os;
                    os << "wake loss: cell leaving the window at speed " << norm(v)
                       << " m/s exceeds 1e-8 of the peak " << st.peak_speed
                       << " m/s; the window no longer contains the disturbance";
                    throw numeric_error(os.str());
                }
                const Vec3 mom = (medium.rho0 * V) * v;
                st.wake.momentum += mom;
                st.wake.angular += cross(st.lab_pos(i, j, k), mom);
                st.wake.displacement += V * st.ra[idx];
                st.wake.mass += V * st.rho_mdw[idx];
                st.wake.cells += 1;
            }
        }
    }

    const int keep = std::max(g.nz - s, 0);
    if (keep > 0) {
        const std::size_t n = std::size_t(keep) * plane;
        const std::size_t off = std::size_t(s) * plane;
        std::copy(st.ra.begin() + off, st.ra.begin() + off + n, st.ra.begin());
        std::copy(st.va.begin() + off, st.va.begin() + off + n, st.va.begin());
        std::copy(st.acc.begin() + off, st.acc.begin() + off + n, st.acc.begin());
        std::copy(st.rho_mdw.begin() + off, st.rho_mdw.begin() + off + n, st.rho_mdw.begin());
    }
    const std::size_t tail = std::size_t(g.nz - keep) * plane;
    std::fill(st.ra.end() - tail, st.ra.end(), Vec3{});
    std::fill(st.va.end() - tail, st.va.end(), Vec3{});
    std::fill(st.acc.end() - tail, st.acc.end(), Vec3{});
    std::fill(st.rho_mdw.end() - tail, st.rho_mdw.end(), 0.0);
    st.shift += s;
}

Trajectory run(const Scenario& sc, const RunConfig& cfg) {
    {
        auto issues = sc.validate();
        if (!issues.empty()) throw validation_error(issues);
    }
    const PulseSpec& pu = sc.pulse;
    const MediumSpec& med = sc.medium;
    const GridSpec& g = sc.grid;
    const int threads = cfg.threads > 0 ? cfg.threads : 1;

    double u0;
    double clipped = 0.0;
    if (cfg.override_u0) {
        u0 = *cfg.override_u0;
    } else {
        const NormalizeInfo ni = normalize_info(pu, med, g, 1e-6);
        u0 = ni.u0;
        clipped = ni.clipped_fraction;
    }

    const double ndk0 = med.n * pu.dk0();
    double zc0 = sc.envelope_center0;
    if (std::isnan(zc0))
        zc0 = (g.window_speed > 0.0) ? 0.0 : -0.5 * g.extent_z() - 6.1 / ndk0;
    const PulseField field(pu, med, u0, zc0, g.t0);

    MediumState st(g);
    const std::size_t ncells = g.ncells();
    const std::size_t ncols = std::size_t(g.nx) * g.ny;
    const double K = (med.n * med.n - 1.0) / (c0 * c0);
    const double V = g.cell_volume();
    const double inv_rho = 1.0 / med.rho0;

    // Transverse caches; the mode has no z dependence.
    std::vector<Vec3> smap;
    std::vector<ModeEval> mmap;
    if (sc.mode == RunMode::TimeAveraged) {
        smap.resize(ncols);
        parallel_for_chunks(ncols, threads, [&](std::size_t b, std::size_t e, std::size_t) {
            for (std::size_t c = b; c < e; ++c) {
                const int i = int(c % g.nx), j = int(c / g.nx);
                smap[c] = field.savg_spatial(field.mode_at(g.x(i), g.y(j)));
            }
        });
    } else {
        mmap.resize(ncols);
        parallel_for_chunks(ncols, threads, [&](std::size_t b, std::size_t e, std::size_t) {
            for (std::size_t c = b; c < e; ++c) {
                const int i = int(c % g.nx), j = int(c / g.nx);
                mmap[c] = field.mode_at(g.x(i), g.y(j));
            }
        });
    }

    ForceField F;
    F.f.assign(ncells, Vec3{});
    F.kind = ForceKind::Optical;
    const double delta = field.carrier_period() / 64.0;
    auto fill_force = [&](double t) {
        parallel_for_chunks(std::size_t(g.nz), threads,
                            [&](std::size_t kb, std::size_t ke, std::size_t) {
            for (std::size_t kk = kb; kk < ke; ++kk) {
                const int k = int(kk);
                const double zlab = st.lab_z(k);
                Vec3* fk = F.f.data() + kk * ncols;
                if (sc.mode == RunMode::TimeAveraged) {
                    const double gain = K * field.denv2_dt(zlab, t);
                    for (std::size_t c = 0; c < ncols; ++c) fk[c] = smap[c] * gain;
                } else {
                    const auto cp = field.carrier_at(zlab, t + delta, t + delta);
                    const auto cm = field.carrier_at(zlab, t - delta, t - delta);
                    const double gain = K / (2.0 * delta);
                    for (std::size_t c = 0; c < ncols; ++c) {
                        const FieldSample a = field.assemble_core(mmap[c], cp);
                        const FieldSample b = field.assemble_core(mmap[c], cm);
                        fk[c] = gain * (cross(a.E, a.H) - cross(b.E, b.H));
                    }
                }
            }
        });
    };

    fill_force(g.t0);
    parallel_for_chunks(ncells, threads, [&](std::size_t b, std::size_t e, std::size_t) {
        for (std::size_t i = b; i < e; ++i) st.acc[i] = F.f[i] * inv_rho;
    });

    Trajectory traj{.steps = {}, .state = std::move(st), .u0 = u0,
                    .measure_time = 0.0, .clipped_fraction = clipped,
                    .p_mdw_measured = {}, .j_mdw_measured = {}};
    MediumState& state = traj.state;

    const int nsteps = g.steps();
    traj.steps.reserve(nsteps);

    CellReduce prev = reduce_cells(state, med, &F, threads);
    Vec3 p_prev = prev.p;
    Vec3 fsum_prev = prev.fsum;

    // Ring of recent (P, J) reductions for carrier-cycle averaging.
    const int ncycle = sc.mode == RunMode::Instantaneous
                           ? std::max(1, int(std::lround(field.carrier_period() / g.dt)))
                           : 1;
    std::deque<std::pair<Vec3, Vec3>> ring;

    std::vector<Vec3> elastic_tmp;
    ForceField elastic_field;

    const int snapshot_every =
        cfg.snapshot_every > 0 ? cfg.snapshot_every : sc.outputs.snapshot_every;

    for (int s = 1; s <= nsteps; ++s) {
        const double t_new = g.t0 + s * g.dt;

        if (g.window_speed > 0.0) {
            const long target = std::lround(g.window_speed * (t_new - g.t0) / g.dz);
            if (target > state.shift) {
                const Vec3 wake_before = state.wake.momentum;
                comoving_remap(state, med, int(target - state.shift));
                p_prev -= state.wake.momentum - wake_before;
            }
        }

        fill_force(t_new);
        drift(state, g.dt, threads);
        if (sc.elasticity) {
            elastic_force_density(g, med, state.ra, elastic_tmp, threads);
            parallel_for_chunks(ncells, threads,
                                [&](std::size_t b, std::size_t e, std::size_t) {
                for (std::size_t i = b; i < e; ++i) F.f[i] += elastic_tmp[i];
            });
            F.kind = ForceKind::Total;
        }
        kick(state, F, med, g.dt, threads);
        recompute_rho_mdw(state, med, threads);

        const CellReduce red = reduce_cells(state, med, &F, threads);
        if (!std::isfinite(red.ke) || !std::isfinite(red.max_speed))
            check_finite(state, threads); // locates and throws
        state.peak_speed = std::max(state.peak_speed, red.max_speed);
        if (red.max_speed > 1e-6 * c0)
            throw numeric_error("nonrelativistic premise violated: max |va|/c >= 1e-6");

        StepDiagnostics d;
        d.t = t_new;
        d.max_speed = red.max_speed;
        d.kinetic_energy = red.ke;
        d.p_mdw = red.p;
        d.j_mdw = red.j;
        d.force_sum = red.fsum;
        d.force_abs_sum = red.fabs;
        const Vec3 impulse = (fsum_prev + red.fsum) * (0.5 * g.dt);
        d.bookkeeping_residual = norm(red.p - p_prev - impulse);
        traj.steps.push_back(d);

        p_prev = red.p;
        fsum_prev = red.fsum;

        ring.emplace_back(red.p, red.j);
        if (int(ring.size()) > ncycle) ring.pop_front();

        if (snapshot_every > 0 && cfg.snapshot_hook && s % snapshot_every == 0)
            cfg.snapshot_hook(state, t_new, s);
    }

    const double t_end = g.t0 + nsteps * g.dt;
    traj.measure_time = t_end;

    Vec3 p_win{}, j_win{};
    if (sc.mode == RunMode::Instantaneous && !ring.empty()) {
        for (const auto& [p, j] : ring) {
            p_win += p;
            j_win += j;
        }
        p_win = p_win / double(ring.size());
        j_win = j_win / double(ring.size());
    } else if (!traj.steps.empty()) {
        p_win = traj.steps.back().p_mdw;
        j_win = traj.steps.back().j_mdw;
    }
    const Vec3 p_total = p_win + state.wake.momentum;
    const Vec3 j_total = j_win + state.wake.angular;
    const Vec3 origin{0.0, 0.0, field.envelope_center(t_end)};
    traj.p_mdw_measured = p_total;
    traj.j_mdw_measured = j_total - cross(origin, p_total);
    return traj;
}

} // namespace ocd
