#include "ocd/lg_mode.hpp"

#include <cmath>

#include "ocd/laguerre.hpp"

namespace ocd {

namespace {

// Integer power by repeated multiplication; exponents here are small (|l| <= ~10).
cdouble ipow(cdouble b, int e) {
    cdouble r{1.0, 0.0};
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

struct RadialParts {
    double F;   // e^{-q/w0^2} L_p^{|l|}(2q/w0^2), q = r^2
    double Fq;  // dF/dq
    double Fqq; // d^2F/dq^2
};

RadialParts radial(const PulseSpec& s, double q, bool second) {
    const double w2 = s.waist * s.waist;
    const int a = std::abs(s.l);
    const double t = 2.0 * q / w2;
    const double e = std::exp(-q / w2);
    const double L = laguerre(s.p, a, t);
    const double L1 = laguerre_deriv(s.p, a, t);
    RadialParts out;
    out.F = e * L;
    out.Fq = e * (-L / w2 + 2.0 * L1 / w2);
    if (second) {
        const double L2 = laguerre_deriv2(s.p, a, t);
        out.Fqq = e * (L / (w2 * w2) - 4.0 * L1 / (w2 * w2) + 4.0 * L2 / (w2 * w2));
    } else {
        out.Fqq = 0.0;
    }
    return out;
}

ModeEval eval(const PulseSpec& s, double u0, double x, double y, bool second) {
    const int a = std::abs(s.l);
    const double sgn = (s.l >= 0) ? 1.0 : -1.0;
    const double scale = std::sqrt(2.0) / s.waist;
    const cdouble w{x, sgn * y}; // r^{|l|} e^{i l phi} = (x + i sgn(l) y)^{|l|} for l != 0

    const double q = x * x + y * y;
    const RadialParts R = radial(s, q, second);

    // B = (scale * w)^a and its derivatives.
    const double ca = std::pow(scale, a);
    const cdouble B = ca * ipow(w, a);
    const cdouble Bx = (a >= 1) ? ca * double(a) * ipow(w, a - 1) : cdouble{};
    const cdouble By = Bx * cdouble{0.0, sgn};
    cdouble Bxx{}, Bxy{}, Byy{};
    if (second && a >= 2) {
        const cdouble Bw2 = ca * double(a) * double(a - 1) * ipow(w, a - 2);
        Bxx = Bw2;
        Bxy = Bw2 * cdouble{0.0, sgn};
        Byy = -Bw2;
    }

    ModeEval m;
    m.u = u0 * B * R.F;
    m.ux = u0 * (Bx * R.F + B * R.Fq * (2.0 * x));
    m.uy = u0 * (By * R.F + B * R.Fq * (2.0 * y));
    if (second) {
        m.uxx = u0 * (Bxx * R.F + 2.0 * Bx * R.Fq * (2.0 * x) +
                      B * (R.Fqq * 4.0 * x * x + 2.0 * R.Fq));
        m.uyy = u0 * (Byy * R.F + 2.0 * By * R.Fq * (2.0 * y) +
                      B * (R.Fqq * 4.0 * y * y + 2.0 * R.Fq));
        m.uxy = u0 * (Bxy * R.F + Bx * R.Fq * (2.0 * y) + By * R.Fq * (2.0 * x) +
                      B * R.Fqq * 4.0 * x * y);
    }
    return m;
}

} // namespace

cdouble lg_mode(const PulseSpec& spec, double u0, double x, double y) {
    return eval(spec, u0, x, y, false).u;
}

ModeEval lg_mode_grad(const PulseSpec& spec, double u0, double x, double y) {
    return eval(spec, u0, x, y, false);
}

ModeEval lg_mode_grad2(const PulseSpec& spec, double u0, double x, double y) {
    return eval(spec, u0, x, y, true);
}

cdouble lg_mode_polar(const PulseSpec& spec, double u0, double r, double phi) {
    return lg_mode(spec, u0, r * std::cos(phi), r * std::sin(phi));
}

double lg_mode_weight(const PulseSpec& spec) {
    const int a = std::abs(spec.l);
    double ratio = 1.0; // (p+a)!/p!
    for (int k = spec.p + 1; k <= spec.p + a; ++k) ratio *= k;
    return 0.5 * constants::pi * spec.waist * spec.waist * ratio;
}

} // namespace ocd
