#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "stormpath/precip.hpp"

namespace stormpath {

/// Where the collision-minimizing body speed was found.
struct OptimumReport {
    double best_speed = 0.0;
    double best_mean_hits = 0.0;
    double bracket_low = 0.0;   // final refinement bracket
    double bracket_high = 0.0;
    int evaluations = 0;        // repeats x unique speeds probed
    bool significant = false;   // best beat both bracket edges by > 1 pooled std
};

enum class Ordering { ALower, BLower, Tie };

struct CompareResult {
    Ordering order = Ordering::Tie;
    bool significant = false;  // |mean_a - mean_b| > pooled population std
    double mean_a = 0.0;
    double mean_b = 0.0;
    double pooled_std = 0.0;
};

/// Which sample mean is lower and whether the gap beats the pooled
/// population std, sqrt((var_a + var_b)/2). Throws std::invalid_argument
/// when either sample has fewer than 2 values.
CompareResult compare_means(const std::vector<double>& sample_a,
                            const std::vector<double>& sample_b);

struct RefineOptions {
    int grid_points = 5;
    double shrink = 2.0;  // bracket half-width divisor per level
};

/// Objective: mean-able value of one run at (speed, repeat k, derived seed).
using SpeedObjective = std::function<double(double speed, int repeat_k, std::uint64_t seed)>;

/// Observer of each level's bracket before evaluation (test instrumentation).
using BracketObserver = std::function<void(int level, double lo, double hi)>;

/// Grid refinement with common random numbers: evaluates `grid_points`
/// speeds across [lo, hi] (repeat k always uses the same derived seed, at
/// every speed and level), recenters on the best point with the bracket
/// half-width shrunk by `shrink`, and repeats for `levels` grids total.
/// Deterministic in its arguments. Throws std::invalid_argument for an
/// invalid bracket, levels < 1, or repeats < 2.
OptimumReport refine_minimum_with(const SpeedObjective& objective, double speed_lo,
                                  double speed_hi, int levels, int repeats,
                                  std::uint64_t master_seed,
                                  const RefineOptions& options = {},
                                  const BracketObserver& observer = {});

/// Production objective: total transit hits of cfg at the probed body speed.
OptimumReport refine_minimum(const SimConfig& cfg, double speed_lo, double speed_hi,
                             int levels, int repeats, std::uint64_t master_seed,
                             const RefineOptions& options = {});

}  // namespace stormpath
