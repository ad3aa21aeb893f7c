#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "stormpath/experiment.hpp"
#include "support.hpp"

using namespace stormpath;

TEST_SUITE("experiment") {

TEST_CASE("derive_seed is pure and collision-free at test scale") {
    CHECK(derive_seed(0xABCDEF, 3, 7) == derive_seed(0xABCDEF, 3, 7));

    std::vector<std::uint64_t> seeds;
    seeds.reserve(1024 * 1024);
    for (std::uint64_t j = 0; j < 1024; ++j)
        for (std::uint64_t k = 0; k < 1024; ++k)
            seeds.push_back(derive_seed(0xD1CE, j, k));
    std::sort(seeds.begin(), seeds.end());
    CHECK(std::adjacent_find(seeds.begin(), seeds.end()) == seeds.end());

    SplitMix64 rng(555);
    for (int i = 0; i < 10000; ++i) {
        const std::uint64_t s = rng.next();
        CHECK(derive_seed(s, 1, 1) != derive_seed(s, 1, 2));
    }
}

TEST_CASE("aggregate computes mean and population std") {
    {
        const auto [mean, stdev] = aggregate({4.0, 4.0, 4.0});
        CHECK(mean == 4.0);
        CHECK(stdev == 0.0);
    }
    {
        const auto [mean, stdev] = aggregate({2.0, 4.0});
        CHECK(mean == 3.0);
        CHECK(stdev == 1.0);
    }
    {
        const auto [mean, stdev] = aggregate({0.0, 0.0, 6.0});
        CHECK(mean == 2.0);
        CHECK(stdev == doctest::Approx(2.8284271247461903).epsilon(1e-12));
    }
    CHECK_THROWS_AS(aggregate({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(aggregate({}), std::invalid_argument);
}

TEST_CASE("zero-field sweep is all zeros") {
    SweepSpec spec;
    spec.base_cfg.drop_count = 0;
    spec.base_speed = 0.01;
    spec.trials = 1;
    spec.repeats = 2;
    const SweepResult result = run_sweep(spec);
    REQUIRE(result.per_multiplier.size() == 1);
    CHECK(result.per_multiplier[0].mean_hits == 0.0);
    CHECK(result.per_multiplier[0].std_hits == 0.0);
}

TEST_CASE("sweeps are deterministic and order independent") {
    SweepSpec spec;
    spec.base_cfg.drop_count = 60;
    spec.base_cfg.wind_speed = 0.005;
    spec.base_speed = 0.004;
    spec.trials = 3;
    spec.repeats = 4;
    spec.master_seed = 2718;

    const SweepResult serial = run_sweep(spec, 1);
    CHECK(run_sweep(spec, 1) == serial);
    CHECK(run_sweep(spec, 4) == serial);
    CHECK(run_sweep(spec, 8) == serial);

    // Raw totals follow derive_seed indexing regardless of worker count.
    SimConfig cfg = spec.base_cfg;
    cfg.body_speed = 2.0 * spec.base_speed;
    CHECK(serial.per_multiplier[1].raw_totals[2] ==
          run_transit(cfg, derive_seed(2718, 2, 3)).total_hits);
}

TEST_CASE("sweep validation rejects bad specs") {
    SweepSpec spec;
    spec.repeats = 1;
    CHECK_THROWS_AS(run_sweep(spec), ValidationError);
    spec.repeats = 10;
    spec.base_speed = 0.0;
    CHECK_THROWS_AS(run_sweep(spec), ValidationError);
    spec.base_speed = 0.2;
    spec.trials = 6;  // 6 * 0.2 >= 1
    CHECK_THROWS_AS(run_sweep(spec), ValidationError);
}

TEST_CASE("presets match the figure captions") {
    const SweepSpec fig9 = preset("fig9");
    CHECK(fig9.base_cfg.wind_speed == 0.0);
    CHECK(fig9.base_cfg.angle_spread_deg == 45.0);
    CHECK(fig9.base_cfg.drop_count == 250);
    CHECK(fig9.trials == 12);
    CHECK(fig9.base_speed == doctest::Approx(0.001));

    const SweepSpec fig1c = preset("fig1c");
    CHECK(fig1c.base_cfg.drop_count == 1000);
    CHECK(fig1c.base_cfg.direction == Direction::WithWind);

    const SweepSpec fig6a = preset("fig6a");
    CHECK(fig6a.base_cfg.wind_speed == fig6a.base_cfg.fall_speed);
    CHECK(fig6a.base_cfg.direction == Direction::WithWind);
    CHECK(fig6a.base_cfg.drop_count == 250);

    const SweepSpec fig5b = preset("fig5b");
    CHECK(fig5b.trials == 16);
    CHECK(fig5b.base_cfg.direction == Direction::AgainstWind);

    CHECK(preset_names().size() == 25);
    for (const auto& name : preset_names()) {
        const SweepSpec spec = preset(name);
        CHECK(validation_errors(spec).empty());
        CHECK(spec.repeats == 10);
        CHECK(spec.base_cfg.fall_speed == 0.01);
    }

    CHECK_THROWS_AS(preset("fig77"), std::invalid_argument);
    try {
        preset("fig77");
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        CHECK(what.find("fig1a") != std::string::npos);
        CHECK(what.find("fig9") != std::string::npos);
    }
}

TEST_CASE("detect_local_min applies the significance gate") {
    const std::vector<double> flat_stds(5, 0.2);
    CHECK(detect_local_min({5, 3, 2, 3, 4}, flat_stds) == 3);
    CHECK(!detect_local_min({5, 4, 3, 2, 1}, {1, 1, 1, 1, 1}).has_value());
    CHECK(!detect_local_min({5, 3, 2.9, 3.0, 4}, std::vector<double>(5, 0.5)).has_value());
    CHECK_THROWS_AS(detect_local_min({1, 2}, {0, 0}), std::invalid_argument);
}

TEST_CASE("detect_local_min never returns an endpoint") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 3 + static_cast<int>(rng.next() % 10);
        std::vector<double> means, stds;
        for (int i = 0; i < n; ++i) {
            means.push_back(rng.uniform(0.0, 100.0));
            stds.push_back(rng.uniform(0.0, 5.0));
        }
        const auto min = detect_local_min(means, stds);
        if (min) {
            CHECK(*min > 1);
            CHECK(*min < n);
        }
    }
}

TEST_CASE("detect_plateau finds the earliest settled index") {
    CHECK(detect_plateau({10, 5, 3, 2.1, 2.0, 2.0, 2.0}, std::vector<double>(7, 0.3)) == 4);
    CHECK(detect_plateau({3, 3, 3, 3, 3}, std::vector<double>(5, 0.0)) == 1);
    CHECK(!detect_plateau({10, 8, 6, 4}, std::vector<double>(4, 0.0)).has_value());
    CHECK_THROWS_AS(detect_plateau({1, 2, 3}, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("density_ratio flags undefined indices and self-ratios to one") {
    SweepResult hi, lo;
    hi.spec.trials = lo.spec.trials = 3;
    for (int j = 1; j <= 3; ++j) {
        MultiplierStats h, l;
        h.multiplier = l.multiplier = j;
        h.mean_hits = 8.0 * j;
        l.mean_hits = 2.0 * j;
        hi.per_multiplier.push_back(h);
        lo.per_multiplier.push_back(l);
    }

    const DensityRatio self = density_ratio(hi, hi);
    for (const auto& r : self.ratios) {
        REQUIRE(r.has_value());
        CHECK(*r == 1.0);
    }

    const DensityRatio four = density_ratio(hi, lo);
    CHECK(four.mean_ratio == doctest::Approx(4.0));
    CHECK(four.defined_count == 3);

    lo.per_multiplier[1].mean_hits = 0.0;
    const DensityRatio gap = density_ratio(hi, lo);
    CHECK(!gap.ratios[1].has_value());
    CHECK(gap.defined_count == 2);

    SweepResult zero = lo;
    for (auto& m : zero.per_multiplier)
        m.mean_hits = 0.0;
    const DensityRatio undef = density_ratio(hi, zero);
    CHECK(undef.defined_count == 0);
    CHECK(std::isnan(undef.mean_ratio));

    SweepResult shorter = hi;
    shorter.per_multiplier.pop_back();
    CHECK_THROWS_AS(density_ratio(hi, shorter), std::invalid_argument);
}

TEST_CASE("axis annotations scale speeds by fall and wind") {
    SweepSpec spec;
    spec.base_cfg.drop_count = 0;
    spec.base_cfg.wind_speed = 0.005;
    spec.base_cfg.fall_speed = 0.01;
    spec.base_speed = 0.005;
    spec.trials = 3;
    spec.repeats = 2;
    SweepResult result = run_sweep(spec);
    CHECK(result.speeds_x_wind() == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(result.speeds_x_fall() == std::vector<double>{0.5, 1.0, 1.5});

    result.spec.base_cfg.wind_speed = 0.0;
    for (double v : result.speeds_x_wind())
        CHECK(std::isnan(v));
}

TEST_CASE("fig1a means fall steeply with speed") {
    SweepSpec spec = preset("fig1a");
    spec.master_seed = 0xD1CE;
    const SweepResult result = run_sweep(spec, 0);
    std::vector<double> multipliers;
    for (const auto& m : result.per_multiplier) {
        multipliers.push_back(m.multiplier);
        CHECK(m.mean_hits > 0.0);
    }
    CHECK(testsupport::spearman(multipliers, result.means()) <= -0.9);
}

}  // TEST_SUITE
