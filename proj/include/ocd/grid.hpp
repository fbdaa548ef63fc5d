#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ocd/medium.hpp"
#include "ocd/pulse.hpp"

namespace ocd {

enum class RunMode { TimeAveraged, Instantaneous };

// Uniform 3D cell grid, co-moving along z. Cell centers are symmetric about
// the beam axis; window coordinate z' maps to lab z through the accumulated
// integer shift applied by the remap (see dynamics).
struct GridSpec {
    int nx = 0, ny = 0, nz = 0;
    double dx = 0.0, dy = 0.0, dz = 0.0;
    double window_speed = 0.0; // c/n for co-moving runs, 0 disables tracking
    double t0 = 0.0, t1 = 0.0;
    double dt = 0.0;

    double x(int i) const { return (i - 0.5 * (nx - 1)) * dx; }
    double y(int j) const { return (j - 0.5 * (ny - 1)) * dy; }
    double zwin(int k) const { return (k - 0.5 * (nz - 1)) * dz; }

    std::size_t ncells() const {
        return std::size_t(nx) * std::size_t(ny) * std::size_t(nz);
    }
    std::size_t index(int i, int j, int k) const {
        return (std::size_t(k) * ny + j) * nx + i;
    }
    double cell_volume() const { return dx * dy * dz; }
    double extent_x() const { return nx * dx; }
    double extent_y() const { return ny * dy; }
    double extent_z() const { return nz * dz; }
    int steps() const { return int((t1 - t0) / dt + 0.5); }

    void validate(std::vector<std::string>& issues, const PulseSpec& pulse,
                  const MediumSpec& medium, RunMode mode, bool elasticity) const;
};

} // namespace ocd
