#pragma once

#include "ocd/lg_mode.hpp"
#include "ocd/medium.hpp"
#include "ocd/pulse.hpp"
#include "ocd/vec3.hpp"

namespace ocd {

// One spatial sample of the pulse fields.
struct FieldSample {
    Vec3 E;      // [V/m]
    Vec3 H;      // [A/m]
    Vec3 S_avg;  // cycle-averaged Poynting vector [W/m^2]
};

Vec3 poynting_instantaneous(const Vec3& E, const Vec3& H);

// Monochromatically approximated LG pulse in a homogeneous medium.
//
// Real fields are assembled from the transverse mode u(x,y), the carrier
// e^{i(n k0 z - w0 t)} and the Gaussian envelope e^{-(n dk0)^2 (z - ct/n - zc)^2 / 2}.
// sigma = 0 gives the x-polarized pulse, sigma = +-1 the circular superpositions
// (the sigma = -1 member uses the opposite +-pi/2 phase offset).
class PulseField {
public:
    PulseField(PulseSpec pulse, MediumSpec medium, double u0,
               double envelope_center0 = 0.0, double t_ref = 0.0);

    const PulseSpec& pulse() const { return pulse_; }
    const MediumSpec& medium() const { return medium_; }
    double u0() const { return u0_; }

    double omega0() const { return w0_; }
    double carrier_period() const;
    double envelope_center(double t) const { return zc0_ + vg_ * (t - tref_); }

    // Field amplitude envelope and its square; `denv2_dt` is the analytic time
    // derivative of the squared envelope (what the time-averaged force needs).
    double envelope(double z, double t) const;
    double envelope_sq(double z, double t) const;
    double denv2_dt(double z, double t) const;

    // Full sample: instantaneous E, H plus the cycle-averaged Poynting vector.
    FieldSample sample(const Vec3& r, double t) const;

    // Same, but with independent carrier and envelope clocks. Lets oracle code
    // average over one carrier cycle while the envelope is held fixed.
    FieldSample sample_split(const Vec3& r, double t_carrier, double t_envelope) const;

    // Cache-friendly paths: the transverse mode is position-only, so hot loops
    // evaluate it once per (x, y) column and assemble per z-plane.
    ModeEval mode_at(double x, double y) const { return lg_mode_grad(pulse_, u0_, x, y); }
    FieldSample assemble(const ModeEval& m, double z, double t_carrier, double t_envelope) const;

    // Carrier phase factor and envelope shared by every cell of one z-plane.
    struct CarrierState {
        cdouble carrier;
        double env;
    };
    CarrierState carrier_at(double z, double t_carrier, double t_envelope) const;
    FieldSample assemble_core(const ModeEval& m, const CarrierState& cs) const;

    // Cycle-averaged Poynting vector, and its z-independent spatial factor
    // (S_avg = savg_spatial * envelope_sq except for the z carrier-free shape).
    Vec3 savg(const Vec3& r, double t) const;
    Vec3 savg_spatial(const ModeEval& m) const;

    // Cycle-averaged electromagnetic energy density; spatial factor only.
    double energy_density_spatial(const ModeEval& m) const;

private:
    PulseSpec pulse_;
    MediumSpec medium_;
    double u0_;
    double zc0_;   // envelope center position at t = t_ref
    double tref_;
    double w0_;    // omega0
    double nk0_;   // wavenumber in the medium
    double ndk0_;  // wavenumber spread in the medium
    double vg_;    // c/n
};

} // namespace ocd
