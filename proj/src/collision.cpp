#include "stormpath/collision.hpp"

#include <cmath>
#include <stdexcept>

namespace stormpath {

namespace {

// Both detectors must evaluate the exact same expression so they agree
// bit-for-bit on inclusive-boundary cases.
inline bool within(const Vec2& drop, const Vec2& point, double radius_sq) {
    const double dx = drop.x - point.x;
    const double dy = drop.y - point.y;
    return dx * dx + dy * dy <= radius_sq;
}

inline std::int64_t cell_of(double v, double cell_size) {
    return static_cast<std::int64_t>(std::floor(v / cell_size));
}

}  // namespace

HitSet detect_bruteforce(const BodyCloud& body, const DropField& field, double radius) {
    HitSet hits;
    const double r2 = radius * radius;
    const int n = field.size();
    for (int d = 0; d < n; ++d) {
        const Vec2& drop = field.positions[static_cast<std::size_t>(d)];
        for (const auto& p : body.points) {
            if (within(drop, p, r2)) {
                hits.indices.push_back(d);
                break;
            }
        }
    }
    return hits;
}

GridIndex build_grid(const DropField& field, double cell_size) {
    GridIndex grid;
    grid.cell_size = cell_size;
    grid.indexed_count = field.size();
    for (int d = 0; d < grid.indexed_count; ++d) {
        const Vec2& p = field.positions[static_cast<std::size_t>(d)];
        grid.buckets[GridIndex::key(cell_of(p.x, cell_size), cell_of(p.y, cell_size))]
            .push_back(d);
    }
    return grid;
}

HitSet detect_grid(const BodyCloud& body, const GridIndex& grid, const DropField& field,
                   double radius) {
    if (grid.indexed_count != field.size())
        throw std::invalid_argument("detect_grid: stale grid (drop count mismatch)");

    const double r2 = radius * radius;
    const double cs = grid.cell_size;
    std::vector<char> hit(static_cast<std::size_t>(field.size()), 0);
    for (const auto& p : body.points) {
        const std::int64_t x0 = cell_of(p.x - radius, cs);
        const std::int64_t x1 = cell_of(p.x + radius, cs);
        const std::int64_t y0 = cell_of(p.y - radius, cs);
        const std::int64_t y1 = cell_of(p.y + radius, cs);
        for (std::int64_t ix = x0; ix <= x1; ++ix) {
            for (std::int64_t iy = y0; iy <= y1; ++iy) {
                const auto it = grid.buckets.find(GridIndex::key(ix, iy));
                if (it == grid.buckets.end())
                    continue;
                for (int d : it->second) {
                    if (!hit[static_cast<std::size_t>(d)] &&
                        within(field.positions[static_cast<std::size_t>(d)], p, r2))
                        hit[static_cast<std::size_t>(d)] = 1;
                }
            }
        }
    }

    HitSet hits;
    for (int d = 0; d < field.size(); ++d)
        if (hit[static_cast<std::size_t>(d)])
            hits.indices.push_back(d);
    return hits;
}

}  // namespace stormpath
