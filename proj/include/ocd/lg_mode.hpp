#pragma once

#include <complex>

#include "ocd/pulse.hpp"

namespace ocd {

using cdouble = std::complex<double>;

// Transverse LG mode value and Cartesian derivatives at one point.
// The mode function is
//   u(r,phi) = u0 (sqrt(2) r / w0)^{|l|} e^{-r^2/w0^2} e^{i l phi} L_p^{|l|}(2 r^2 / w0^2),
// constant-waist form, evaluated in Cartesian coordinates so that the vortex
// axis r = 0 is regular.
struct ModeEval {
    cdouble u{};
    cdouble ux{}, uy{};          // first derivatives
    cdouble uxx{}, uxy{}, uyy{}; // second derivatives
};

// Value only.
cdouble lg_mode(const PulseSpec& spec, double u0, double x, double y);

// Value plus first derivatives.
ModeEval lg_mode_grad(const PulseSpec& spec, double u0, double x, double y);

// Value plus first and second derivatives.
ModeEval lg_mode_grad2(const PulseSpec& spec, double u0, double x, double y);

// Polar convenience wrapper used by callers that think in (r, phi).
cdouble lg_mode_polar(const PulseSpec& spec, double u0, double r, double phi);

// Closed form of the transverse mode weight integral
//   \int |u/u0|^2 dx dy = (pi w0^2 / 2) (p+|l|)! / p!
// Used as the infinite-domain reference for grid-clipping diagnostics.
double lg_mode_weight(const PulseSpec& spec);

} // namespace ocd
