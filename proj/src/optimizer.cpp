#include "stormpath/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "stormpath/experiment.hpp"
#include "stormpath/transit.hpp"

namespace stormpath {

CompareResult compare_means(const std::vector<double>& sample_a,
                            const std::vector<double>& sample_b) {
    if (sample_a.size() < 2 || sample_b.size() < 2)
        throw std::invalid_argument("compare_means: both samples need >= 2 values");
    const auto [mean_a, std_a] = aggregate(sample_a);
    const auto [mean_b, std_b] = aggregate(sample_b);

    CompareResult out;
    out.mean_a = mean_a;
    out.mean_b = mean_b;
    out.pooled_std = std::sqrt((std_a * std_a + std_b * std_b) / 2.0);
    if (mean_a < mean_b)
        out.order = Ordering::ALower;
    else if (mean_b < mean_a)
        out.order = Ordering::BLower;
    else
        out.order = Ordering::Tie;
    out.significant = std::abs(mean_a - mean_b) > out.pooled_std;
    return out;
}

namespace {

struct Sample {
    std::vector<double> values;
    double mean = 0.0;
};

}  // namespace

OptimumReport refine_minimum_with(const SpeedObjective& objective, double speed_lo,
                                  double speed_hi, int levels, int repeats,
                                  std::uint64_t master_seed, const RefineOptions& options,
                                  const BracketObserver& observer) {
    if (!(speed_lo > 0.0) || !(speed_lo < speed_hi))
        throw std::invalid_argument("refine_minimum: bracket must satisfy 0 < lo < hi");
    if (levels < 1)
        throw std::invalid_argument("refine_minimum: levels must be >= 1");
    if (repeats < 2)
        throw std::invalid_argument("refine_minimum: repeats must be >= 2");
    if (options.grid_points < 3)
        throw std::invalid_argument("refine_minimum: grid_points must be >= 3");
    if (!(options.shrink > 1.0))
        throw std::invalid_argument("refine_minimum: shrink must be > 1");

    // Common random numbers: repeat k keeps the same derived seed at every
    // probed speed, so speed comparisons see paired noise.
    std::vector<std::uint64_t> seeds;
    seeds.reserve(static_cast<std::size_t>(repeats));
    for (int k = 1; k <= repeats; ++k)
        seeds.push_back(derive_seed(master_seed, 0, static_cast<std::uint64_t>(k)));

    std::map<double, Sample> cache;
    auto evaluate = [&](double speed) -> const Sample& {
        auto it = cache.find(speed);
        if (it != cache.end())
            return it->second;
        Sample s;
        s.values.reserve(seeds.size());
        double sum = 0.0;
        for (int k = 0; k < repeats; ++k) {
            const double v = objective(speed, k + 1, seeds[static_cast<std::size_t>(k)]);
            s.values.push_back(v);
            sum += v;
        }
        s.mean = sum / static_cast<double>(repeats);
        return cache.emplace(speed, std::move(s)).first->second;
    };

    double lo = speed_lo;
    double hi = speed_hi;
    double best_speed = lo;
    for (int level = 1; level <= levels; ++level) {
        if (observer)
            observer(level, lo, hi);
        std::vector<double> points;
        points.reserve(static_cast<std::size_t>(options.grid_points));
        points.push_back(lo);
        for (int i = 1; i + 1 < options.grid_points; ++i)
            points.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                      static_cast<double>(options.grid_points - 1));
        points.push_back(hi);  // endpoints exact so the bracket edges stay cached

        best_speed = points.front();
        double best_mean = evaluate(points.front()).mean;
        for (std::size_t i = 1; i < points.size(); ++i) {
            const double mean = evaluate(points[i]).mean;
            if (mean < best_mean) {
                best_mean = mean;
                best_speed = points[i];
            }
        }
        if (level < levels) {
            const double half = (hi - lo) / 2.0 / options.shrink;
            const double nlo = std::max(lo, best_speed - half);
            const double nhi = std::min(hi, best_speed + half);
            lo = nlo;
            hi = nhi;
        }
    }

    OptimumReport report;
    report.best_speed = best_speed;
    report.best_mean_hits = cache.at(best_speed).mean;
    report.bracket_low = lo;
    report.bracket_high = hi;
    report.evaluations = repeats * static_cast<int>(cache.size());

    const auto& best = cache.at(best_speed);
    const auto& edge_lo = cache.at(lo);
    const auto& edge_hi = cache.at(hi);
    const auto vs_lo = compare_means(best.values, edge_lo.values);
    const auto vs_hi = compare_means(best.values, edge_hi.values);
    report.significant = vs_lo.order == Ordering::ALower && vs_lo.significant &&
                         vs_hi.order == Ordering::ALower && vs_hi.significant;
    return report;
}

OptimumReport refine_minimum(const SimConfig& cfg, double speed_lo, double speed_hi,
                             int levels, int repeats, std::uint64_t master_seed,
                             const RefineOptions& options) {
    SpeedObjective objective = [cfg](double speed, int, std::uint64_t seed) {
        SimConfig probe = cfg;
        probe.body_speed = speed;
        return static_cast<double>(run_transit(probe, seed).total_hits);
    };
    return refine_minimum_with(objective, speed_lo, speed_hi, levels, repeats, master_seed,
                               options);
}

}  // namespace stormpath
