#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stormpath/precip.hpp"
#include "stormpath/transit.hpp"

namespace stormpath {

/// A body-speed sweep: multiplier j in 1..trials runs at j * base_speed,
/// each repeated `repeats` times with seeds derived from master_seed.
struct SweepSpec {
    SimConfig base_cfg;
    double base_speed = 0.001;  // speed at multiplier 1
    int trials = 10;
    int repeats = 10;
    std::uint64_t master_seed = 0;

    bool operator==(const SweepSpec&) const = default;
};

std::vector<std::string> validation_errors(const SweepSpec& spec);
void validate(const SweepSpec& spec);

/// Statistics for one multiplier: mean and population std (divisor N) of
/// the raw per-run totals.
struct MultiplierStats {
    int multiplier = 0;
    double speed = 0.0;
    double mean_hits = 0.0;
    double std_hits = 0.0;
    std::vector<long long> raw_totals;

    bool operator==(const MultiplierStats&) const = default;
};

/// Detected curve features, all at the significance gates defined by
/// detect_local_min / detect_plateau.
struct CurveFeatures {
    std::optional<int> local_min_multiplier;
    std::optional<int> plateau_multiplier;
    bool monotone_decreasing = false;

    bool operator==(const CurveFeatures&) const = default;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<MultiplierStats> per_multiplier;

    std::vector<double> means() const;
    std::vector<double> stds() const;

    /// Axis annotations: each multiplier's speed in multiples of the fall
    /// speed, and of the wind speed (NaN entries when wind is 0).
    std::vector<double> speeds_x_fall() const;
    std::vector<double> speeds_x_wind() const;

    bool operator==(const SweepResult&) const = default;
};

/// Seed for (multiplier j, repeat k): SplitMix64 finalizer applied to
/// master_seed XOR (j * 2^32 + k). Injective over any (j, k) range with
/// k < 2^32.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t multiplier_j,
                          std::uint64_t repeat_k);

/// Arithmetic mean and population std (divisor N). Throws
/// std::invalid_argument for fewer than 2 values.
std::pair<double, double> aggregate(const std::vector<double>& values);

/// Runs the sweep. `workers` = 0 picks a thread count automatically; 1 runs
/// serially. Seeds are index-derived, so the result is identical for any
/// worker count and any execution order.
SweepResult run_sweep(const SweepSpec& spec, unsigned workers = 1);

/// Returns the named figure preset (master_seed left 0 for the caller to
/// set). Throws std::invalid_argument listing the valid names.
SweepSpec preset(const std::string& name);

/// All preset names, figure order.
std::vector<std::string> preset_names();

/// Smallest interior index j (1-based) with means[j] below both neighbors
/// by more than the pooled std, max(stds[j-1..j+1]). Empty when no dip
/// clears the gate. Throws std::invalid_argument for fewer than 3 entries.
std::optional<int> detect_local_min(const std::vector<double>& means,
                                    const std::vector<double>& stds);

/// Earliest index j (1-based) from which every mean stays within
/// max(std_i, 1) of the tail value (mean of the last 2 entries); empty when
/// only the last 2 qualify. Throws std::invalid_argument for fewer than 4.
std::optional<int> detect_plateau(const std::vector<double>& means,
                                  const std::vector<double>& stds);

/// Features of a sweep (detectors applied where lengths permit).
CurveFeatures detect_features(const SweepResult& sweep);

/// Per-multiplier ratios of mean hits between two sweeps that differ only
/// in drop count. An index with zero denominator mean is undefined
/// (nullopt) and excluded from the mean ratio.
struct DensityRatio {
    std::vector<std::optional<double>> ratios;
    double mean_ratio = 0.0;  // NaN when no index is defined
    int defined_count = 0;
};

DensityRatio density_ratio(const SweepResult& sweep_hi, const SweepResult& sweep_lo);

}  // namespace stormpath
