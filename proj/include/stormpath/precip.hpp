#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "stormpath/rng.hpp"

namespace stormpath {

/// Dimensionless grid coordinate on the unit field.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Whether the body moves in the same x-direction the wind pushes the
/// drops (WithWind) or opposite to it (AgainstWind). The body always
/// travels toward -x, so WithWind means the wind term is -wind_speed.
enum class Direction { WithWind, AgainstWind };

/// Which collision detector a run uses. Grid is the default; BruteForce
/// exists as the oracle route and must produce identical hit sets.
enum class Detector { Grid, BruteForce };

/// All tunables of one transit run.
struct SimConfig {
    int drop_count = 250;
    double angle_spread_deg = 0.0;   // per-drop fall angle ~ U[-spread, +spread]
    double fall_speed = 0.01;        // grid units per frame
    double wind_speed = 0.001;       // magnitude; sign comes from direction
    Direction direction = Direction::WithWind;
    double body_speed = 0.001;       // grid units per frame, toward -x
    double collision_radius = 0.01;
    int body_points = 200;
    double body_width = 0.03;
    double body_height = 0.25;
    Detector detector = Detector::Grid;

    bool operator==(const SimConfig&) const = default;
};

/// Thrown when a config violates its invariants; the message lists every
/// offending field.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Collects human-readable constraint violations; empty means valid.
std::vector<std::string> validation_errors(const SimConfig& cfg);

/// Throws ValidationError listing all offending fields.
void validate(const SimConfig& cfg);

/// Signed per-frame wind term: -wind_speed for WithWind, +wind_speed for
/// AgainstWind.
double signed_wind(const SimConfig& cfg);

/// The 200-ish point pedestrian approximation. Rigid: every frame applies
/// the same displacement to all points.
struct BodyCloud {
    std::vector<Vec2> points;
};

/// Positions plus per-drop fall angles for the whole precipitation field.
struct DropField {
    std::vector<Vec2> positions;
    std::vector<double> angles_rad;

    int size() const { return static_cast<int>(positions.size()); }
};

/// Indices of drops respawned by each edge rule this frame. Disjoint after
/// precedence resolution (right overrides left overrides bottom).
struct ExitReport {
    std::vector<int> bottom_exits;
    std::vector<int> left_exits;
    std::vector<int> right_exits;

    bool empty() const {
        return bottom_exits.empty() && left_exits.empty() && right_exits.empty();
    }
};

/// Samples body_points points uniformly, then maps them into
/// [1, 1+body_width] x [0, body_height]. Draw order: per point, x then y.
BodyCloud spawn_body(SplitMix64& rng, const SimConfig& cfg);

/// Samples drop positions uniformly on [0,1]^2 and angles uniformly on
/// [-angle_spread, +angle_spread] (converted to radians).
/// Draw order: all x, then all y, then all angles.
DropField spawn_field(SplitMix64& rng, const SimConfig& cfg);

/// One kinematic step: x += fall_speed*tan(angle) + signed_wind,
/// y -= fall_speed.
void advance_drops(DropField& field, const SimConfig& cfg);

/// Resets drops that left the field, evaluated on the pre-reset state:
///   y <= 0 -> (uniform x, 1);  x <= 0 -> (1, uniform y);  x >= 1 -> (0, uniform y)
/// with precedence bottom -> left -> right, later rules overriding. Every
/// reset drop draws a fresh fall angle. Drops are processed in index order;
/// each affected drop draws its coordinate, then its angle.
ExitReport resolve_exits(DropField& field, SplitMix64& rng, const SimConfig& cfg);

/// Rigid translation: every point's x decreases by body_speed.
void advance_body(BodyCloud& body, const SimConfig& cfg);

/// Mean x-coordinate of the body points (the transit termination statistic).
double mean_body_x(const BodyCloud& body);

/// Linear unit mapping from a physical speed (m/s) into grid units per
/// frame, anchored by a reference fall speed (e.g. rain: 10 m/s <-> 0.01).
/// Throws std::invalid_argument for a non-positive anchor.
double physical_to_sim(double speed_mps, double fall_anchor_mps, double fall_anchor_sim);

}  // namespace stormpath
