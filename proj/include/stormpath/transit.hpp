#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "stormpath/collision.hpp"
#include "stormpath/precip.hpp"
#include "stormpath/rng.hpp"

namespace stormpath {

/// Per-frame and total collision counts for one transit.
struct RunResult {
    long long total_hits = 0;
    std::vector<int> hits_per_frame;
    int frame_count = 0;
    std::uint64_t seed = 0;

    bool operator==(const RunResult&) const = default;
};

/// What one frame produced. mean_body_x is the body position the frame's
/// collisions were detected against (before the frame's body advance).
struct FrameStats {
    int frame_index = 0;  // 1-based
    double mean_body_x = 0.0;
    int hits = 0;
};

/// Mutable state of one transit. Plain value: copying it forks the run,
/// including the generator.
struct RunState {
    SimConfig cfg;
    BodyCloud body;
    DropField field;
    SplitMix64 rng;
    int frames_done = 0;
};

/// Validates cfg, seeds the generator, and spawns body then field (in that
/// order -- the fixed draw sequence all reproducibility rests on).
RunState init_run(const SimConfig& cfg, std::uint64_t seed);

/// Executes one frame, in order: advance drops, resolve exits, detect
/// collisions of the updated drops against the current body, respawn hit
/// drops at (uniform x, 1) with a fresh angle, advance the body.
/// Throws std::logic_error once the transit has terminated (mean body x < 0).
FrameStats step_frame(RunState& state);

/// True while the transit loop should keep stepping.
bool transit_active(const RunState& state);

using FrameSink = std::function<void(const FrameStats&)>;

/// Runs a full transit: body from x=1 until its mean x drops below 0, the
/// loop condition checked before each frame. Deterministic in (cfg, seed).
/// `sink`, when given, receives every frame's stats (the CSV dump hook).
RunResult run_transit(const SimConfig& cfg, std::uint64_t seed, const FrameSink& sink = {});

}  // namespace stormpath
