#include "stormpath/precip.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace stormpath {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

}  // namespace

std::vector<std::string> validation_errors(const SimConfig& cfg) {
    std::vector<std::string> errors;
    for (double v : {cfg.angle_spread_deg, cfg.fall_speed, cfg.wind_speed, cfg.body_speed,
                     cfg.collision_radius, cfg.body_width, cfg.body_height}) {
        if (!std::isfinite(v)) {
            errors.push_back("all numeric fields must be finite");
            break;
        }
    }
    if (cfg.drop_count < 0)
        errors.push_back("drop_count must be >= 0");
    if (!(cfg.angle_spread_deg >= 0.0 && cfg.angle_spread_deg < 90.0))
        errors.push_back("angle_spread_deg must lie in [0, 90)");
    if (!(cfg.fall_speed > 0.0 && cfg.fall_speed < 1.0))
        errors.push_back("fall_speed must lie in (0, 1)");
    if (!(cfg.wind_speed >= 0.0 && cfg.wind_speed < 1.0))
        errors.push_back("wind_speed must lie in [0, 1)");
    if (!(cfg.body_speed > 0.0 && cfg.body_speed < 1.0))
        errors.push_back("body_speed must lie in (0, 1)");
    if (!(cfg.collision_radius > 0.0))
        errors.push_back("collision_radius must be > 0");
    else if (!(cfg.collision_radius < cfg.body_height))
        errors.push_back("collision_radius must be < body_height");
    if (cfg.body_points < 1)
        errors.push_back("body_points must be >= 1");
    if (cfg.body_width < 0.0)
        errors.push_back("body_width must be >= 0");
    if (cfg.body_height < 0.0)
        errors.push_back("body_height must be >= 0");
    return errors;
}

void validate(const SimConfig& cfg) {
    auto errors = validation_errors(cfg);
    if (errors.empty())
        return;
    std::ostringstream msg;
    msg << "invalid config:";
    for (const auto& e : errors)
        msg << " " << e << ";";
    throw ValidationError(msg.str());
}

double signed_wind(const SimConfig& cfg) {
    return cfg.direction == Direction::WithWind ? -cfg.wind_speed : cfg.wind_speed;
}

BodyCloud spawn_body(SplitMix64& rng, const SimConfig& cfg) {
    BodyCloud body;
    body.points.resize(static_cast<std::size_t>(cfg.body_points));
    for (auto& p : body.points) {
        p.x = 1.0 + cfg.body_width * rng.uniform();
        p.y = cfg.body_height * rng.uniform();
    }
    return body;
}

DropField spawn_field(SplitMix64& rng, const SimConfig& cfg) {
    DropField field;
    const auto n = static_cast<std::size_t>(cfg.drop_count);
    field.positions.resize(n);
    field.angles_rad.resize(n);
    for (auto& p : field.positions)
        p.x = rng.uniform();
    for (auto& p : field.positions)
        p.y = rng.uniform();
    const double spread = cfg.angle_spread_deg * kDegToRad;
    for (auto& a : field.angles_rad)
        a = rng.uniform(-spread, spread);
    return field;
}

void advance_drops(DropField& field, const SimConfig& cfg) {
    const double wind = signed_wind(cfg);
    const std::size_t n = field.positions.size();
    for (std::size_t i = 0; i < n; ++i) {
        field.positions[i].x += cfg.fall_speed * std::tan(field.angles_rad[i]) + wind;
        field.positions[i].y -= cfg.fall_speed;
    }
}

ExitReport resolve_exits(DropField& field, SplitMix64& rng, const SimConfig& cfg) {
    ExitReport report;
    const double spread = cfg.angle_spread_deg * kDegToRad;
    const int n = field.size();
    for (int i = 0; i < n; ++i) {
        auto& p = field.positions[static_cast<std::size_t>(i)];
        // Membership is evaluated on the pre-reset position; right overrides
        // left overrides bottom.
        const bool bottom = p.y <= 0.0;
        const bool left = p.x <= 0.0;
        const bool right = p.x >= 1.0;
        if (!(bottom || left || right))
            continue;
        if (right) {
            report.right_exits.push_back(i);
            p.x = 0.0;
            p.y = rng.uniform();
        } else if (left) {
            report.left_exits.push_back(i);
            p.x = 1.0;
            p.y = rng.uniform();
        } else {
            report.bottom_exits.push_back(i);
            p.x = rng.uniform();
            p.y = 1.0;
        }
        field.angles_rad[static_cast<std::size_t>(i)] = rng.uniform(-spread, spread);
    }
    return report;
}

void advance_body(BodyCloud& body, const SimConfig& cfg) {
    for (auto& p : body.points)
        p.x -= cfg.body_speed;
}

double mean_body_x(const BodyCloud& body) {
    double sum = 0.0;
    for (const auto& p : body.points)
        sum += p.x;
    return sum / static_cast<double>(body.points.size());
}

double physical_to_sim(double speed_mps, double fall_anchor_mps, double fall_anchor_sim) {
    if (!(fall_anchor_mps > 0.0))
        throw std::invalid_argument("physical_to_sim: fall_anchor_mps must be > 0");
    return speed_mps / fall_anchor_mps * fall_anchor_sim;
}

}  // namespace stormpath
