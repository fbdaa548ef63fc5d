#pragma once

#include <string>

#include "ocd/fields.hpp"
#include "ocd/grid.hpp"
#include "ocd/medium.hpp"
#include "ocd/state.hpp"
#include "ocd/vec3.hpp"

namespace ocd {

// Field-side grid moments at one time, from the cycle-averaged densities.
struct FieldMoments {
    double energy = 0.0;   // [J]
    Vec3 momentum{};       // sum (S_avg / c^2) V [kg m/s]
    Vec3 angular{};        // sum r x (S_avg / c^2) V about the lab origin [J s]
    Vec3 centroid{};       // energy centroid [m]
};

FieldMoments field_moments(const PulseField& field, const GridSpec& grid, long shift,
                           double t, int threads = 1);

// Angular momenta about an arbitrary origin.
Vec3 angular_momentum_field(const PulseField& field, const GridSpec& grid, long shift,
                            double t, const Vec3& origin, int threads = 1);
Vec3 angular_momentum_mdw(const MediumState& state, const MediumSpec& medium,
                          const Vec3& origin, int threads = 1);
Vec3 angular_momentum_mp(const PulseField& field, const MediumState& state,
                         const MediumSpec& medium, double t, const Vec3& origin,
                         int threads = 1);

struct LinearMomenta {
    Vec3 field{}, mdw{}, mp{};
};
LinearMomenta linear_momenta(const PulseField& field, const MediumState& state,
                             const MediumSpec& medium, double t, int threads = 1);

// Transferred (pulse-region excess) MDW mass: positive part of the density
// perturbation over the window plus the settled wake excess.
double transferred_mass(const MediumState& state, int threads = 1);

// Field/MDW/MP momentum bundle plus per-photon values.
struct MomentumReport {
    double U_field = 0.0;
    double N_ph = 0.0;
    double delta_m = 0.0;
    double delta_m_expected = 0.0; // (n^2 - 1) U0 / c^2
    Vec3 P_field{}, P_mdw{}, P_mp{};
    Vec3 J_field{}, J_mdw{}, J_mp{};
    Vec3 J_field_per_photon{}, J_mdw_per_photon{}, J_mp_per_photon{};   // [hbar]
    Vec3 P_field_per_photon{}, P_mdw_per_photon{}, P_mp_per_photon{};   // [hbar w0 / c]
};

// Assembles the report about the beam axis through the envelope center. The
// MDW entries may be overridden with externally measured (cycle-averaged)
// totals about the same origin; pass nullptr to reduce from the state.
MomentumReport make_report(const PulseField& field, const GridSpec& grid,
                           const MediumState& state, const MediumSpec& medium, double t,
                           const Vec3* p_mdw_override = nullptr,
                           const Vec3* j_mdw_override = nullptr, int threads = 1);

// Vector-potential splits of the field angular momentum (cycle-averaged,
// transverse-gauge A built algebraically from the carrier).
struct AngularDecomposition {
    Vec3 L_field{}, S_field{}; // orbital / spin parts
    Vec3 J_ext{}, J_int{};     // external / internal parts
    bool approximate = false;  // set for paraxial fields: the split is not exact
    std::string note;
};

AngularDecomposition oam_sam_split(const PulseField& field, const GridSpec& grid,
                                   long shift, double t, int threads = 1);

// J_ext = r0 x P_field, J_int = sum (r - r0) x g_field V.
void external_internal_split(const PulseField& field, const GridSpec& grid, long shift,
                             double t, const Vec3& r0, Vec3& j_ext, Vec3& j_int,
                             int threads = 1);

} // namespace ocd
