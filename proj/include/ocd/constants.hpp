#pragma once

namespace ocd::constants {

// SI values (CODATA 2018).
inline constexpr double c0    = 299792458.0;          // vacuum light speed [m/s]
inline constexpr double mu0   = 1.25663706212e-6;     // vacuum permeability [H/m]
inline constexpr double eps0  = 8.8541878128e-12;     // vacuum permittivity [F/m]
inline constexpr double hbar  = 1.054571817e-34;      // reduced Planck constant [J*s]
inline constexpr double pi    = 3.14159265358979323846;

} // namespace ocd::constants
