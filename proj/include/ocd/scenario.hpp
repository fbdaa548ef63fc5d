#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ocd/fiber.hpp"
#include "ocd/grid.hpp"
#include "ocd/medium.hpp"
#include "ocd/pulse.hpp"

namespace ocd {

struct OutputSpec {
    int snapshot_every = 0;       // steps between snapshot emissions, 0 = off
    bool field_dump = false;
    std::string report_dir = "out";
};

// Complete run description: medium, pulse, grid and run controls.
struct Scenario {
    std::string name;
    PulseSpec pulse;
    MediumSpec medium;
    GridSpec grid;
    RunMode mode = RunMode::TimeAveraged;
    bool elasticity = false;
    OutputSpec outputs;

    // Envelope center at t0. NaN selects the default: the window center for
    // co-moving runs, one envelope clearance below the window for static ones.
    double envelope_center0 = std::nan("");

    // Every violated invariant, empty when valid.
    std::vector<std::string> validate() const;
};

// Parses the documented dotted-key scenario schema (SI with mandatory unit
// suffixes). Throws validation_error with line/column on parse failures and
// with the full violation list on invariant failures.
Scenario parse_scenario(const std::string& text, const std::string& source_name);
Scenario load_scenario(const std::string& path_or_preset);

// Canonical serialization; load(emit(load(x))) == load(x).
std::string emit_scenario(const Scenario& s);

// FNV-1a hash of the canonical serialization.
std::uint64_t scenario_hash(const Scenario& s);

// Shipped presets.
std::vector<std::string> preset_names();
const std::string* preset_text(const std::string& name);

// Desk-scale scenario builder. Chooses a grid that satisfies every invariant
// for the requested mode: transverse box of 6.5 w0, window of `window_sigmas`
// envelope standard deviations, one full window sweep plus margin.
struct ScenarioKnobs {
    double energy = 5e-3;          // U0 [J]
    double wavelength = 1550e-9;   // lambda0 [m]
    double rel_bandwidth = 1e-2;
    double waist_factor = 20.0;    // w0 = waist_factor * lambda0 / n
    double cells_per_waist = 12.0; // transverse resolution
    double window_sigmas = 18.0;   // window length in units of sigma_z
    double cells_per_sigma_z = 6.0;
    double dt_safety = 0.9;        // fraction of the mode's dt cap
    RunMode mode = RunMode::TimeAveraged;
};

Scenario make_scenario(int p, int l, int sigma, const MediumSpec& medium,
                       const ScenarioKnobs& knobs = {});

MediumSpec silicon();

// Fiber plan ingestion (same dotted-key format as scenarios).
FiberPlan parse_fiber_plan(const std::string& text, const std::string& source_name);
FiberPlan load_fiber_plan(const std::string& path);

} // namespace ocd
