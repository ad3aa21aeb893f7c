#pragma once

#include <set>
#include <string>

#include "stormpath/experiment.hpp"
#include "stormpath/optimizer.hpp"
#include "stormpath/transit.hpp"

namespace stormpath {

inline constexpr const char* kVersion = "0.1.0";

/// Thrown on malformed config text; the message names the line and key.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// A parsed config plus the set of keys the document actually set (the CLI
/// uses this to tell explicit values from defaults).
struct ParsedConfig {
    SweepSpec spec;
    std::set<std::string> keys_seen;
};

/// Parses `key = value` lines (# starts a comment). Unknown keys are
/// rejected with the line number. Speed values may carry an `mps` suffix,
/// converted through the rain anchor 10 m/s <-> 0.01 grid/frame. Missing
/// keys keep their defaults; the result is validated.
ParsedConfig parse_config(const std::string& text);

/// Emits a spec as config text that parse_config round-trips exactly.
std::string emit_config(const SweepSpec& spec);

/// CSV: header multiplier,speed,speed_x_wind,speed_x_fall,mean_hits,std_hits
/// then one row per multiplier, 6 significant digits, byte-deterministic.
/// speed_x_wind is empty when wind_speed is 0.
std::string emit_csv(const SweepResult& sweep);

/// Single JSON document: spec echo, per-multiplier stats with raw totals,
/// detected curve features, and the software version. Keys sorted;
/// byte-deterministic.
std::string emit_json(const SweepResult& sweep);

/// JSON for a transit run.
std::string emit_json(const RunResult& run);

/// JSON for an optimizer report.
std::string emit_json(const OptimumReport& report);

/// Standalone SVG: mean markers with vertical +-1 std error bars, bottom
/// axis in multiples of fall speed, top axis in multiples of wind speed
/// (omitted when wind is 0), y-axis "# of hits".
std::string emit_svg(const SweepResult& sweep);

/// Reads per-multiplier stats back out of emit_json output (round-trip
/// support; exact doubles).
SweepResult parse_sweep_json(const std::string& text);

/// Shared numeric formatting: %.6g (the CSV/SVG contract).
std::string fmt6(double value);

}  // namespace stormpath
