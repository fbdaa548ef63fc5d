#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ocd/fiber.hpp"
#include "ocd/observables.hpp"
#include "ocd/scenario.hpp"
#include "ocd/state.hpp"

namespace ocd {

struct RunManifest {
    std::uint64_t scenario_hash = 0;
    std::string code_version;
    int threads = 1;
    bool deterministic_reductions = true;
    double wall_seconds = 0.0;
    long cells = 0;
    int steps = 0;
};

// Machine summary: stable flat keys, one per line, six significant digits.
// Deterministic byte-for-byte for identical inputs under the deterministic
// reduction setting (wall-clock lives in the manifest, not here).
std::string format_summary(const Scenario& scenario, const MomentumReport& report);

std::string format_manifest(const RunManifest& manifest);

std::string format_fiber_report(const FiberPlan& plan);

// Long-format CSV with a one-line header: t_s,d_m,dr_mdw_m.
std::string format_sweep_csv(const SweepTable& table);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

// Raw little-endian float64 array plus a text sidecar (<base>.meta) recording
// dimensions, spacings, variable name and units. Vector fields are stored with
// the component index fastest.
void write_vector_dump(const std::string& base_path, const GridSpec& grid, long shift,
                       const std::vector<Vec3>& data, const std::string& variable,
                       const std::string& units);
void write_scalar_dump(const std::string& base_path, const GridSpec& grid, long shift,
                       const std::vector<double>& data, const std::string& variable,
                       const std::string& units);
std::vector<double> read_raw_f64(const std::string& path);

} // namespace ocd
