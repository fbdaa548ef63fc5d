#pragma once

#include <string>
#include <vector>

#include "ocd/constants.hpp"

namespace ocd {

// Laguerre-Gaussian pulse description. All quantities SI.
struct PulseSpec {
    int p = 0;                   // radial mode index, >= 0
    int l = 0;                   // vortex topological charge
    int sigma = 0;               // polarization helicity: 0 linear-x, +-1 circular
    double energy = 0.0;         // total electromagnetic energy U0 [J]
    double wavelength = 0.0;     // central vacuum wavelength lambda0 [m]
    double rel_bandwidth = 0.0;  // dk0/k0, guards the monochromatic approximation
    double waist = 0.0;          // beam waist radius w0 [m]

    double k0() const { return 2.0 * constants::pi / wavelength; }
    double omega0() const { return constants::c0 * k0(); }
    double dk0() const { return rel_bandwidth * k0(); }
    double photon_number() const { return energy / (constants::hbar * omega0()); }
    double dk_transverse() const { return std::sqrt(2.0) / waist; }

    // Standard deviation of the pulse energy density along z, in a medium of index n.
    double sigma_z(double n) const { return 1.0 / (std::sqrt(2.0) * n * dk0()); }

    double t_fwhm(double n) const {
        return 2.0 * std::sqrt(2.0 * std::log(2.0)) * n * sigma_z(n) / constants::c0;
    }

    // Appends one entry per violated invariant; empty result means valid.
    void validate(std::vector<std::string>& issues) const;
};

} // namespace ocd
