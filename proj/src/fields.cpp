#include "ocd/fields.hpp"

#include <cmath>

#include "ocd/errors.hpp"

namespace ocd {

using constants::c0;
using constants::eps0;
using constants::mu0;
using constants::pi;

Vec3 poynting_instantaneous(const Vec3& E, const Vec3& H) {
    return cross(E, H);
}

PulseField::PulseField(PulseSpec pulse, MediumSpec medium, double u0,
                       double envelope_center0, double t_ref)
    : pulse_(pulse), medium_(medium), u0_(u0), zc0_(envelope_center0), tref_(t_ref) {
    w0_ = pulse_.omega0();
    nk0_ = medium_.n * pulse_.k0();
    ndk0_ = medium_.n * pulse_.dk0();
    vg_ = c0 / medium_.n;
}

double PulseField::carrier_period() const { return 2.0 * pi / w0_; }

double PulseField::envelope(double z, double t) const {
    const double xi = z - envelope_center(t);
    return std::exp(-0.5 * ndk0_ * ndk0_ * xi * xi);
}

double PulseField::envelope_sq(double z, double t) const {
    const double xi = z - envelope_center(t);
    return std::exp(-ndk0_ * ndk0_ * xi * xi);
}

double PulseField::denv2_dt(double z, double t) const {
    const double xi = z - envelope_center(t);
    return 2.0 * vg_ * ndk0_ * ndk0_ * xi * std::exp(-ndk0_ * ndk0_ * xi * xi);
}

PulseField::CarrierState PulseField::carrier_at(double z, double t_carrier,
                                                double t_envelope) const {
    const double phase = nk0_ * z - w0_ * t_carrier;
    return {cdouble{std::cos(phase), std::sin(phase)}, envelope(z, t_envelope)};
}

FieldSample PulseField::assemble(const ModeEval& m, double z,
                                 double t_carrier, double t_envelope) const {
    return assemble_core(m, carrier_at(z, t_carrier, t_envelope));
}

FieldSample PulseField::assemble_core(const ModeEval& m, const CarrierState& cs) const {
    const cdouble carrier = cs.carrier;
    const double env = cs.env;
    const double env2 = env * env;
    const cdouble iw0{0.0, w0_};

    FieldSample out;
    if (pulse_.sigma == 0) {
        const cdouble ex = iw0 * m.u * carrier;
        const cdouble ez = -(w0_ / nk0_) * m.ux * carrier;
        const cdouble hy = cdouble{0.0, nk0_ / mu0} * m.u * carrier;
        const cdouble hz = -(1.0 / mu0) * m.uy * carrier;
        out.E = Vec3{ex.real(), 0.0, ez.real()} * env;
        out.H = Vec3{0.0, hy.real(), hz.real()} * env;
    } else {
        const double s = double(pulse_.sigma);
        const cdouble isig{0.0, s}; // e^{i sigma pi/2}
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        const cdouble ex = inv_sqrt2 * iw0 * m.u * carrier;
        const cdouble ey = isig * ex;
        const cdouble ez = -inv_sqrt2 * (w0_ / nk0_) * (m.ux + isig * m.uy) * carrier;
        const cdouble hy = inv_sqrt2 * cdouble{0.0, nk0_ / mu0} * m.u * carrier;
        const cdouble hx = -isig * hy;
        const cdouble hz = -inv_sqrt2 * (1.0 / mu0) * (m.uy - isig * m.ux) * carrier;
        out.E = Vec3{ex.real(), ey.real(), ez.real()} * env;
        out.H = Vec3{hx.real(), hy.real(), hz.real()} * env;
    }
    out.S_avg = savg_spatial(m) * env2;
    return out;
}

FieldSample PulseField::sample(const Vec3& r, double t) const {
    return sample_split(r, t, t);
}

FieldSample PulseField::sample_split(const Vec3& r, double t_carrier, double t_envelope) const {
    const ModeEval m = mode_at(r.x, r.y);
    return assemble(m, r.z, t_carrier, t_envelope);
}

Vec3 PulseField::savg_spatial(const ModeEval& m) const {
    const double pref = w0_ / (2.0 * mu0);
    // Polarization-independent part, Im(u* grad u) transverse and n k0 |u|^2 along z.
    const double abs2 = std::norm(m.u);
    Vec3 s{pref * std::imag(std::conj(m.u) * m.ux),
           pref * std::imag(std::conj(m.u) * m.uy),
           pref * nk0_ * abs2};
    if (pulse_.sigma != 0) {
        // Spin contribution: sigma (omega0 / 4 mu0) (d|u|^2/dy, -d|u|^2/dx, 0).
        const double spin = double(pulse_.sigma) * w0_ / (4.0 * mu0);
        const double d_dx = 2.0 * std::real(std::conj(m.u) * m.ux);
        const double d_dy = 2.0 * std::real(std::conj(m.u) * m.uy);
        s.x += spin * d_dy;
        s.y -= spin * d_dx;
    }
    return s;
}

Vec3 PulseField::savg(const Vec3& r, double t) const {
    const ModeEval m = mode_at(r.x, r.y);
    return savg_spatial(m) * envelope_sq(r.z, t);
}

double PulseField::energy_density_spatial(const ModeEval& m) const {
    const double lead = 0.5 * eps0 * medium_.n * medium_.n * w0_ * w0_ * std::norm(m.u);
    double zcorr;
    if (pulse_.sigma == 0) {
        zcorr = (std::norm(m.ux) + std::norm(m.uy)) / (4.0 * mu0);
    } else {
        const cdouble g = m.ux + cdouble{0.0, double(pulse_.sigma)} * m.uy;
        zcorr = std::norm(g) / (4.0 * mu0);
    }
    return lead + zcorr;
}

} // namespace ocd
