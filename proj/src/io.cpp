#include "stormpath/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace stormpath {

namespace {

using json = nlohmann::json;

// Shortest decimal that parses back to the exact double.
std::string fmt_exact(double value) {
    char buf[40];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
        if (std::strtod(buf, nullptr) == value)
            break;
    }
    return buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& key, const std::string& what) {
    std::ostringstream msg;
    msg << "config line " << line << ", key '" << key << "': " << what;
    throw ConfigError(msg.str());
}

[[noreturn]] void fail_line(int line, const std::string& what) {
    std::ostringstream msg;
    msg << "config line " << line << ": " << what;
    throw ConfigError(msg.str());
}

// Speeds may be given in grid/frame units or as "<value> mps", converted
// through the rain anchor (10 m/s falls 0.01 grid/frame).
double parse_speed(int line, const std::string& key, std::string value) {
    bool mps = false;
    if (value.size() >= 3 && value.substr(value.size() - 3) == "mps") {
        mps = true;
        value = trim(value.substr(0, value.size() - 3));
    }
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        fail(line, key, "unparsable number '" + value + "'");
    }
    if (pos != value.size())
        fail(line, key, "trailing characters in '" + value + "'");
    return mps ? physical_to_sim(v, 10.0, 0.01) : v;
}

double parse_double(int line, const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        fail(line, key, "unparsable number '" + value + "'");
    }
    if (pos != value.size())
        fail(line, key, "trailing characters in '" + value + "'");
    return v;
}

long long parse_int(int line, const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(value, &pos);
    } catch (const std::exception&) {
        fail(line, key, "unparsable integer '" + value + "'");
    }
    if (pos != value.size())
        fail(line, key, "trailing characters in '" + value + "'");
    return v;
}

std::uint64_t parse_u64(int line, const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(value, &pos, 0);  // base 0: decimal or 0x-prefixed
    } catch (const std::exception&) {
        fail(line, key, "unparsable seed '" + value + "'");
    }
    if (pos != value.size())
        fail(line, key, "trailing characters in '" + value + "'");
    return v;
}

const char* direction_name(Direction d) {
    return d == Direction::WithWind ? "with" : "against";
}

const char* detector_name(Detector d) {
    return d == Detector::Grid ? "grid" : "brute";
}

}  // namespace

std::string fmt6(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

ParsedConfig parse_config(const std::string& text) {
    ParsedConfig out;
    SweepSpec& spec = out.spec;

    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw = raw.substr(0, hash);
        const std::string line = trim(raw);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail_line(line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            fail_line(line_no, "missing key before '='");
        if (value.empty())
            fail(line_no, key, "missing value");

        if (key == "drop_count") {
            spec.base_cfg.drop_count = static_cast<int>(parse_int(line_no, key, value));
        } else if (key == "angle_spread_deg") {
            spec.base_cfg.angle_spread_deg = parse_double(line_no, key, value);
        } else if (key == "fall_speed") {
            spec.base_cfg.fall_speed = parse_speed(line_no, key, value);
        } else if (key == "wind_speed") {
            spec.base_cfg.wind_speed = parse_speed(line_no, key, value);
        } else if (key == "direction") {
            if (value == "with")
                spec.base_cfg.direction = Direction::WithWind;
            else if (value == "against")
                spec.base_cfg.direction = Direction::AgainstWind;
            else
                fail(line_no, key, "expected 'with' or 'against'");
        } else if (key == "collision_radius") {
            spec.base_cfg.collision_radius = parse_double(line_no, key, value);
        } else if (key == "body_points") {
            spec.base_cfg.body_points = static_cast<int>(parse_int(line_no, key, value));
        } else if (key == "body_width") {
            spec.base_cfg.body_width = parse_double(line_no, key, value);
        } else if (key == "body_height") {
            spec.base_cfg.body_height = parse_double(line_no, key, value);
        } else if (key == "detector") {
            if (value == "grid")
                spec.base_cfg.detector = Detector::Grid;
            else if (value == "brute")
                spec.base_cfg.detector = Detector::BruteForce;
            else
                fail(line_no, key, "expected 'grid' or 'brute'");
        } else if (key == "base_speed") {
            spec.base_speed = parse_speed(line_no, key, value);
        } else if (key == "trials") {
            spec.trials = static_cast<int>(parse_int(line_no, key, value));
        } else if (key == "repeats") {
            spec.repeats = static_cast<int>(parse_int(line_no, key, value));
        } else if (key == "master_seed") {
            spec.master_seed = parse_u64(line_no, key, value);
        } else {
            fail(line_no, key, "unknown key");
        }
        out.keys_seen.insert(key);
    }

    validate(spec);
    return out;
}

std::string emit_config(const SweepSpec& spec) {
    std::ostringstream out;
    out << "drop_count = " << spec.base_cfg.drop_count << "\n";
    out << "angle_spread_deg = " << fmt_exact(spec.base_cfg.angle_spread_deg) << "\n";
    out << "fall_speed = " << fmt_exact(spec.base_cfg.fall_speed) << "\n";
    out << "wind_speed = " << fmt_exact(spec.base_cfg.wind_speed) << "\n";
    out << "direction = " << direction_name(spec.base_cfg.direction) << "\n";
    out << "collision_radius = " << fmt_exact(spec.base_cfg.collision_radius) << "\n";
    out << "body_points = " << spec.base_cfg.body_points << "\n";
    out << "body_width = " << fmt_exact(spec.base_cfg.body_width) << "\n";
    out << "body_height = " << fmt_exact(spec.base_cfg.body_height) << "\n";
    out << "detector = " << detector_name(spec.base_cfg.detector) << "\n";
    out << "base_speed = " << fmt_exact(spec.base_speed) << "\n";
    out << "trials = " << spec.trials << "\n";
    out << "repeats = " << spec.repeats << "\n";
    out << "master_seed = " << spec.master_seed << "\n";
    return out.str();
}

std::string emit_csv(const SweepResult& sweep) {
    std::ostringstream out;
    out << "multiplier,speed,speed_x_wind,speed_x_fall,mean_hits,std_hits\n";
    const double wind = sweep.spec.base_cfg.wind_speed;
    const double fall = sweep.spec.base_cfg.fall_speed;
    for (const auto& m : sweep.per_multiplier) {
        out << m.multiplier << "," << fmt6(m.speed) << ",";
        if (wind > 0.0)
            out << fmt6(m.speed / wind);
        out << "," << fmt6(m.speed / fall) << "," << fmt6(m.mean_hits) << ","
            << fmt6(m.std_hits) << "\n";
    }
    return out.str();
}

namespace {

json spec_to_json(const SweepSpec& spec) {
    json j;
    j["drop_count"] = spec.base_cfg.drop_count;
    j["angle_spread_deg"] = spec.base_cfg.angle_spread_deg;
    j["fall_speed"] = spec.base_cfg.fall_speed;
    j["wind_speed"] = spec.base_cfg.wind_speed;
    j["direction"] = direction_name(spec.base_cfg.direction);
    j["collision_radius"] = spec.base_cfg.collision_radius;
    j["body_points"] = spec.base_cfg.body_points;
    j["body_width"] = spec.base_cfg.body_width;
    j["body_height"] = spec.base_cfg.body_height;
    j["detector"] = detector_name(spec.base_cfg.detector);
    j["base_speed"] = spec.base_speed;
    j["trials"] = spec.trials;
    j["repeats"] = spec.repeats;
    j["master_seed"] = spec.master_seed;
    return j;
}

}  // namespace

std::string emit_json(const SweepResult& sweep) {
    json doc;
    doc["version"] = kVersion;
    doc["spec"] = spec_to_json(sweep.spec);

    const double wind = sweep.spec.base_cfg.wind_speed;
    const double fall = sweep.spec.base_cfg.fall_speed;
    json rows = json::array();
    for (const auto& m : sweep.per_multiplier) {
        json row;
        row["multiplier"] = m.multiplier;
        row["speed"] = m.speed;
        row["speed_x_fall"] = m.speed / fall;
        if (wind > 0.0)
            row["speed_x_wind"] = m.speed / wind;
        else
            row["speed_x_wind"] = nullptr;
        row["mean_hits"] = m.mean_hits;
        row["std_hits"] = m.std_hits;
        row["raw_totals"] = m.raw_totals;
        rows.push_back(std::move(row));
    }
    doc["multipliers"] = std::move(rows);

    const CurveFeatures features = detect_features(sweep);
    json f;
    if (features.local_min_multiplier)
        f["local_min_multiplier"] = *features.local_min_multiplier;
    else
        f["local_min_multiplier"] = nullptr;
    if (features.plateau_multiplier)
        f["plateau_multiplier"] = *features.plateau_multiplier;
    else
        f["plateau_multiplier"] = nullptr;
    f["monotone_decreasing"] = features.monotone_decreasing;
    doc["features"] = std::move(f);

    return doc.dump(2) + "\n";
}

std::string emit_json(const RunResult& run) {
    json doc;
    doc["version"] = kVersion;
    doc["seed"] = run.seed;
    doc["frame_count"] = run.frame_count;
    doc["total_hits"] = run.total_hits;
    return doc.dump(2) + "\n";
}

std::string emit_json(const OptimumReport& report) {
    json doc;
    doc["version"] = kVersion;
    doc["best_speed"] = report.best_speed;
    doc["best_mean_hits"] = report.best_mean_hits;
    doc["bracket_low"] = report.bracket_low;
    doc["bracket_high"] = report.bracket_high;
    doc["evaluations"] = report.evaluations;
    doc["significant"] = report.significant;
    return doc.dump(2) + "\n";
}

SweepResult parse_sweep_json(const std::string& text) {
    const json doc = json::parse(text);
    SweepResult sweep;

    const json& s = doc.at("spec");
    sweep.spec.base_cfg.drop_count = s.at("drop_count").get<int>();
    sweep.spec.base_cfg.angle_spread_deg = s.at("angle_spread_deg").get<double>();
    sweep.spec.base_cfg.fall_speed = s.at("fall_speed").get<double>();
    sweep.spec.base_cfg.wind_speed = s.at("wind_speed").get<double>();
    sweep.spec.base_cfg.direction = s.at("direction").get<std::string>() == "with"
                                        ? Direction::WithWind
                                        : Direction::AgainstWind;
    sweep.spec.base_cfg.collision_radius = s.at("collision_radius").get<double>();
    sweep.spec.base_cfg.body_points = s.at("body_points").get<int>();
    sweep.spec.base_cfg.body_width = s.at("body_width").get<double>();
    sweep.spec.base_cfg.body_height = s.at("body_height").get<double>();
    sweep.spec.base_cfg.detector = s.at("detector").get<std::string>() == "grid"
                                       ? Detector::Grid
                                       : Detector::BruteForce;
    sweep.spec.base_speed = s.at("base_speed").get<double>();
    sweep.spec.trials = s.at("trials").get<int>();
    sweep.spec.repeats = s.at("repeats").get<int>();
    sweep.spec.master_seed = s.at("master_seed").get<std::uint64_t>();

    for (const json& row : doc.at("multipliers")) {
        MultiplierStats m;
        m.multiplier = row.at("multiplier").get<int>();
        m.speed = row.at("speed").get<double>();
        m.mean_hits = row.at("mean_hits").get<double>();
        m.std_hits = row.at("std_hits").get<double>();
        m.raw_totals = row.at("raw_totals").get<std::vector<long long>>();
        sweep.per_multiplier.push_back(std::move(m));
    }
    return sweep;
}

namespace {

// Chart geometry shared by the SVG builders.
struct ChartLayout {
    double width = 640.0;
    double height = 480.0;
    double left = 70.0;
    double right = 600.0;
    double top = 60.0;
    double bottom = 420.0;
};

double x_pos(const ChartLayout& L, double multiplier, int trials) {
    return L.left + (L.right - L.left) * multiplier / (trials + 1.0);
}

double y_pos(const ChartLayout& L, double value, double y_max) {
    return L.bottom - (L.bottom - L.top) * value / y_max;
}

}  // namespace

std::string emit_svg(const SweepResult& sweep) {
    const ChartLayout L;
    const int trials = static_cast<int>(sweep.per_multiplier.size());
    const double wind = sweep.spec.base_cfg.wind_speed;
    const double fall = sweep.spec.base_cfg.fall_speed;

    double y_max = 0.0;
    double std_max = 0.0;
    for (const auto& m : sweep.per_multiplier) {
        y_max = std::max(y_max, m.mean_hits);
        std_max = std::max(std_max, m.std_hits);
    }
    y_max += 2.0 * std_max;
    if (y_max <= 0.0)
        y_max = 1.0;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt6(L.width)
        << "\" height=\"" << fmt6(L.height) << "\" viewBox=\"0 0 " << fmt6(L.width) << " "
        << fmt6(L.height) << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << fmt6(L.width) << "\" height=\""
        << fmt6(L.height) << "\" fill=\"white\"/>\n";

    // Frame
    out << "  <g id=\"frame\" stroke=\"black\" fill=\"none\">\n";
    out << "    <rect x=\"" << fmt6(L.left) << "\" y=\"" << fmt6(L.top) << "\" width=\""
        << fmt6(L.right - L.left) << "\" height=\"" << fmt6(L.bottom - L.top) << "\"/>\n";
    out << "  </g>\n";

    // Bottom axis: speed in multiples of the fall speed.
    out << "  <g id=\"bottom-axis\" font-size=\"12\" text-anchor=\"middle\">\n";
    for (const auto& m : sweep.per_multiplier) {
        const double x = x_pos(L, m.multiplier, trials);
        out << "    <line x1=\"" << fmt6(x) << "\" y1=\"" << fmt6(L.bottom) << "\" x2=\""
            << fmt6(x) << "\" y2=\"" << fmt6(L.bottom + 5.0)
            << "\" stroke=\"black\"/>\n";
        out << "    <text x=\"" << fmt6(x) << "\" y=\"" << fmt6(L.bottom + 20.0) << "\">"
            << fmt6(m.speed / fall) << "</text>\n";
    }
    out << "    <text x=\"" << fmt6((L.left + L.right) / 2.0) << "\" y=\""
        << fmt6(L.bottom + 40.0) << "\">Multiples of fall speed</text>\n";
    out << "  </g>\n";

    // Top axis: speed in multiples of the wind speed (wind-free sweeps skip it).
    if (wind > 0.0) {
        out << "  <g id=\"top-axis\" font-size=\"12\" text-anchor=\"middle\">\n";
        for (const auto& m : sweep.per_multiplier) {
            const double x = x_pos(L, m.multiplier, trials);
            out << "    <line x1=\"" << fmt6(x) << "\" y1=\"" << fmt6(L.top) << "\" x2=\""
                << fmt6(x) << "\" y2=\"" << fmt6(L.top - 5.0) << "\" stroke=\"black\"/>\n";
            out << "    <text x=\"" << fmt6(x) << "\" y=\"" << fmt6(L.top - 10.0) << "\">"
                << fmt6(m.speed / wind) << "</text>\n";
        }
        out << "    <text x=\"" << fmt6((L.left + L.right) / 2.0) << "\" y=\""
            << fmt6(L.top - 30.0) << "\">Multiples of wind speed</text>\n";
        out << "  </g>\n";
    }

    // Y axis: 5 ticks plus the rotated hits label.
    out << "  <g id=\"y-axis\" font-size=\"12\" text-anchor=\"end\">\n";
    for (int t = 0; t <= 5; ++t) {
        const double v = y_max * t / 5.0;
        const double y = y_pos(L, v, y_max);
        out << "    <line x1=\"" << fmt6(L.left - 5.0) << "\" y1=\"" << fmt6(y)
            << "\" x2=\"" << fmt6(L.left) << "\" y2=\"" << fmt6(y)
            << "\" stroke=\"black\"/>\n";
        out << "    <text x=\"" << fmt6(L.left - 8.0) << "\" y=\"" << fmt6(y + 4.0) << "\">"
            << fmt6(v) << "</text>\n";
    }
    out << "    <text x=\"20\" y=\"" << fmt6((L.top + L.bottom) / 2.0)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
        << fmt6((L.top + L.bottom) / 2.0) << ")\">" << "# of hits" << "</text>\n";
    out << "  </g>\n";

    // Data: one error bar and one mean marker per multiplier.
    out << "  <g id=\"data\">\n";
    for (const auto& m : sweep.per_multiplier) {
        const double x = x_pos(L, m.multiplier, trials);
        const double y_lo = y_pos(L, m.mean_hits - m.std_hits, y_max);
        const double y_hi = y_pos(L, m.mean_hits + m.std_hits, y_max);
        out << "    <line class=\"errbar\" x1=\"" << fmt6(x) << "\" y1=\"" << fmt6(y_lo)
            << "\" x2=\"" << fmt6(x) << "\" y2=\"" << fmt6(y_hi)
            << "\" stroke=\"black\"/>\n";
    }
    for (const auto& m : sweep.per_multiplier) {
        const double x = x_pos(L, m.multiplier, trials);
        const double y = y_pos(L, m.mean_hits, y_max);
        out << "    <circle class=\"mean\" cx=\"" << fmt6(x) << "\" cy=\"" << fmt6(y)
            << "\" r=\"3\" fill=\"black\"/>\n";
    }
    out << "  </g>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace stormpath
