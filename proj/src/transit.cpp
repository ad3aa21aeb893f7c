#include "stormpath/transit.hpp"

#include <numbers>
#include <numeric>
#include <stdexcept>

namespace stormpath {

RunState init_run(const SimConfig& cfg, std::uint64_t seed) {
    validate(cfg);
    RunState state;
    state.cfg = cfg;
    state.rng = SplitMix64(seed);
    state.body = spawn_body(state.rng, cfg);
    state.field = spawn_field(state.rng, cfg);
    return state;
}

bool transit_active(const RunState& state) {
    return mean_body_x(state.body) >= 0.0;
}

FrameStats step_frame(RunState& state) {
    if (!transit_active(state))
        throw std::logic_error("step_frame: transit already terminated");

    advance_drops(state.field, state.cfg);
    resolve_exits(state.field, state.rng, state.cfg);

    const double radius = state.cfg.collision_radius;
    HitSet hits;
    if (state.cfg.detector == Detector::Grid) {
        const GridIndex grid = build_grid(state.field, radius);
        hits = detect_grid(state.body, grid, state.field, radius);
    } else {
        hits = detect_bruteforce(state.body, state.field, radius);
    }

    FrameStats stats;
    stats.mean_body_x = mean_body_x(state.body);
    stats.hits = hits.count();

    // Hit drops leave the simulation and re-enter along y=1.
    const double spread = state.cfg.angle_spread_deg * std::numbers::pi / 180.0;
    for (int d : hits.indices) {
        auto& p = state.field.positions[static_cast<std::size_t>(d)];
        p.x = state.rng.uniform();
        p.y = 1.0;
        state.field.angles_rad[static_cast<std::size_t>(d)] = state.rng.uniform(-spread, spread);
    }

    advance_body(state.body, state.cfg);
    state.frames_done += 1;
    stats.frame_index = state.frames_done;
    return stats;
}

RunResult run_transit(const SimConfig& cfg, std::uint64_t seed, const FrameSink& sink) {
    RunState state = init_run(cfg, seed);
    RunResult result;
    result.seed = seed;
    while (transit_active(state)) {
        const FrameStats stats = step_frame(state);
        result.hits_per_frame.push_back(stats.hits);
        if (sink)
            sink(stats);
    }
    result.frame_count = static_cast<int>(result.hits_per_frame.size());
    result.total_hits = std::accumulate(result.hits_per_frame.begin(),
                                        result.hits_per_frame.end(), 0LL);
    return result;
}

}  // namespace stormpath
