#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvopt/body.hpp"
#include "curvopt/online.hpp"

namespace curvopt {

inline constexpr const char* kArtifactVersion = "0.1.0";

// One pass/fail line of a preset run.
struct PresetLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct PresetResult {
    std::string preset;
    std::vector<PresetLine> lines;

    bool all_pass() const;
};

struct PresetConfig {
    std::string name;
    std::uint64_t seed = 1;
    std::string out_dir;         // empty: no artifact files
    std::string format = "csv";  // "csv" or "json" for trace artifacts
};

// Named experiment presets, each reproducing one block of the paper's
// guarantees at its canonical parameters:
//   ftl-growth      growth-condition FTL regret vs the closed-form log bound
//   ftl-nonneg      non-negative-gain FTL regret vs the linearized log bound
//   ftl-bad         the alternating instability stream (linear regret)
//   curve-sandwich  K_t approximation + curvature over the cube grid
//   curve-decomp    decomposition/gauge identity + weak optimization checks
//   hints-reduction (1-eps)-OPT guarantee of the curving reduction
//   certify-ball    the sharp ball moduli 1/8 and 1/2
//   fw-demo         Frank-Wolfe traces over flat and curved bodies
PresetResult run_preset(const PresetConfig& config);

const std::vector<std::string>& preset_names();

// %.17g: shortest decimal that round-trips an IEEE-754 double.
std::string format_double(double v);

// FNV-1a over the canonical config string; recorded in artifact headers.
std::uint64_t config_hash(const std::string& canonical);

// Per-round CSV of an online game: round, gain and action components,
// cumulative gain, running regret, and the running certificate bounds.
// One comment line of metadata, then a single header row.
void write_olo_csv(const std::string& path, const ConvexBody& body, const GameTrace& trace,
                   const RegretParams& params, const std::string& config_line,
                   std::uint64_t seed);

}  // namespace curvopt
