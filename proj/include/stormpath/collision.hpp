#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "stormpath/precip.hpp"

namespace stormpath {

/// Drop indices in collision this frame, ascending. A drop within radius of
/// several body points still appears exactly once.
struct HitSet {
    std::vector<int> indices;

    int count() const { return static_cast<int>(indices.size()); }
    bool operator==(const HitSet&) const = default;
};

/// Uniform-grid broad phase over the drop field. Bucket coordinate is
/// floor(position / cell_size) componentwise; every drop index lives in
/// exactly one bucket.
struct GridIndex {
    double cell_size = 0.0;
    int indexed_count = 0;
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;

    static std::uint64_t key(std::int64_t ix, std::int64_t iy) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(ix)) << 32) |
               static_cast<std::uint64_t>(static_cast<std::uint32_t>(iy));
    }
};

/// Oracle detector: a drop hits when its squared distance to at least one
/// body point is <= radius^2 (inclusive; no epsilon).
HitSet detect_bruteforce(const BodyCloud& body, const DropField& field, double radius);

/// Buckets every drop by floored cell coordinates.
GridIndex build_grid(const DropField& field, double cell_size);

/// Broad-phase detector. Examines every bucket overlapping the disc of
/// `radius` around each body point, so any cell_size > 0 works. Must return
/// exactly detect_bruteforce's hit set. Throws std::invalid_argument when
/// the grid was built from a different drop count than `field`.
HitSet detect_grid(const BodyCloud& body, const GridIndex& grid, const DropField& field,
                   double radius);

}  // namespace stormpath
