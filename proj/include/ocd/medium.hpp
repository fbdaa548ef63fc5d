#pragma once

#include <string>
#include <vector>

namespace ocd {

// Nondispersive dielectric with cubic elastic constants (crystal axes on the grid axes).
struct MediumSpec {
    double n = 1.0;        // phase refractive index
    double rho0 = 0.0;     // mass density [kg/m^3]
    double C11 = 0.0;      // elastic constants [Pa]
    double C12 = 0.0;
    double C44 = 0.0;
    double alpha = 0.0;    // absorption coefficient [1/m]

    double bulk_modulus() const { return (C11 + 2.0 * C12) / 3.0; }
    double shear_modulus() const { return C44; }

    void validate(std::vector<std::string>& issues) const;
};

} // namespace ocd
