// stormpath command line: transit runs, figure sweeps, and the speed
// optimizer, with CSV/JSON/SVG emission.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stormpath/io.hpp"

namespace {

using namespace stormpath;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct CommonArgs {
    std::string preset_name;
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> repeats;
    std::optional<int> trials;
    std::optional<int> drops;
    std::optional<double> wind;
    std::optional<double> fall;
    std::optional<double> base_speed;
    std::optional<std::string> direction;
    std::optional<double> angle_deg;
    std::optional<std::string> detector;
    std::string out_path;
    std::string format = "csv";
};

void add_common_options(CLI::App* cmd, CommonArgs& args, bool with_format) {
    cmd->add_option("--preset", args.preset_name, "Figure preset name (see list-presets)");
    cmd->add_option("--config", args.config_path, "Path to a key = value config file");
    cmd->add_option("--seed", args.seed, "Master seed (decimal)");
    cmd->add_option("--repeats", args.repeats, "Repeats per speed");
    cmd->add_option("--trials", args.trials, "Number of speed multipliers");
    cmd->add_option("--drops", args.drops, "Drops per field");
    cmd->add_option("--wind", args.wind, "Wind speed, grid/frame");
    cmd->add_option("--fall", args.fall, "Fall speed, grid/frame");
    cmd->add_option("--base-speed", args.base_speed, "Body speed at multiplier 1, grid/frame");
    cmd->add_option("--direction", args.direction, "with | against")
        ->check(CLI::IsMember({"with", "against"}));
    cmd->add_option("--angle-deg", args.angle_deg, "Fall-angle spread, degrees in [0, 90)");
    cmd->add_option("--detector", args.detector, "grid | brute")
        ->check(CLI::IsMember({"grid", "brute"}));
    cmd->add_option("--out", args.out_path, "Write output here instead of stdout");
    if (with_format)
        cmd->add_option("--format", args.format, "csv | json | svg")
            ->check(CLI::IsMember({"csv", "json", "svg"}));
}

// Defaults, then config file, then flags.
SweepSpec resolve_spec(const CommonArgs& args, bool& seed_given) {
    SweepSpec spec;
    seed_given = false;

    if (!args.preset_name.empty() && !args.config_path.empty())
        throw ConfigError("give either --preset or --config, not both");
    if (!args.preset_name.empty())
        spec = preset(args.preset_name);
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in)
            throw std::runtime_error("cannot open config file: " + args.config_path);
        std::ostringstream text;
        text << in.rdbuf();
        ParsedConfig parsed = parse_config(text.str());
        spec = parsed.spec;
        seed_given = parsed.keys_seen.count("master_seed") > 0;
    }

    if (args.drops) spec.base_cfg.drop_count = *args.drops;
    if (args.wind) spec.base_cfg.wind_speed = *args.wind;
    if (args.fall) spec.base_cfg.fall_speed = *args.fall;
    if (args.angle_deg) spec.base_cfg.angle_spread_deg = *args.angle_deg;
    if (args.direction)
        spec.base_cfg.direction =
            *args.direction == "with" ? Direction::WithWind : Direction::AgainstWind;
    if (args.detector)
        spec.base_cfg.detector =
            *args.detector == "grid" ? Detector::Grid : Detector::BruteForce;
    if (args.base_speed) spec.base_speed = *args.base_speed;
    if (args.trials) spec.trials = *args.trials;
    if (args.repeats) spec.repeats = *args.repeats;
    if (args.seed) {
        spec.master_seed = *args.seed;
        seed_given = true;
    }
    return spec;
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + out_path);
    out << payload;
}

unsigned worker_count() {
    const char* env = std::getenv("STORMPATH_THREADS");
    if (env == nullptr || *env == '\0')
        return 0;  // auto
    const long v = std::strtol(env, nullptr, 10);
    return v < 0 ? 0 : static_cast<unsigned>(v);
}

int run_command(const CommonArgs& args, const std::string& frame_dump) {
    bool seed_given = false;
    SweepSpec spec = resolve_spec(args, seed_given);
    SimConfig cfg = spec.base_cfg;
    cfg.body_speed = spec.base_speed;
    const std::uint64_t seed = args.seed ? *args.seed : spec.master_seed;

    FrameSink sink;
    std::ofstream dump;
    if (!frame_dump.empty()) {
        dump.open(frame_dump, std::ios::binary);
        if (!dump)
            throw std::runtime_error("cannot open frame dump file: " + frame_dump);
        dump << "frame,mean_body_x,hits\n";
        sink = [&dump](const FrameStats& f) {
            char buf[48];
            std::snprintf(buf, sizeof(buf), "%.9g", f.mean_body_x);
            dump << f.frame_index << "," << buf << "," << f.hits << "\n";
        };
    }

    const RunResult result = run_transit(cfg, seed, sink);
    write_output(args.out_path, emit_json(result));
    return kExitOk;
}

int sweep_command(const CommonArgs& args) {
    bool seed_given = false;
    SweepSpec spec = resolve_spec(args, seed_given);
    if (!seed_given)
        throw ConfigError("sweep requires --seed (or master_seed in the config file)");

    const SweepResult result = run_sweep(spec, worker_count());
    std::string payload;
    if (args.format == "csv")
        payload = emit_csv(result);
    else if (args.format == "json")
        payload = emit_json(result);
    else
        payload = emit_svg(result);
    write_output(args.out_path, payload);
    return kExitOk;
}

int optimize_command(const CommonArgs& args, std::optional<double> lo,
                     std::optional<double> hi, int levels) {
    bool seed_given = false;
    SweepSpec spec = resolve_spec(args, seed_given);
    if (!seed_given)
        throw ConfigError("optimize requires --seed (or master_seed in the config file)");

    const double anchor = spec.base_cfg.wind_speed > 0.0 ? spec.base_cfg.wind_speed
                                                         : spec.base_cfg.fall_speed;
    const double speed_lo = lo ? *lo : 0.2 * anchor;
    const double speed_hi = hi ? *hi : 3.0 * anchor;
    const int repeats = spec.repeats;

    const OptimumReport report = refine_minimum(spec.base_cfg, speed_lo, speed_hi, levels,
                                                repeats, spec.master_seed);
    write_output(args.out_path, emit_json(report));
    return kExitOk;
}

int preset_command(const std::string& name, const std::string& out_path) {
    write_output(out_path, emit_config(preset(name)));
    return kExitOk;
}

int list_presets_command() {
    for (const auto& name : preset_names())
        std::cout << name << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stormpath: a pedestrian-in-precipitation transit simulator"};
    app.require_subcommand(1);

    CommonArgs run_args;
    std::string frame_dump;
    CLI::App* run_cmd = app.add_subcommand("run", "Run one transit and print its totals");
    add_common_options(run_cmd, run_args, false);
    run_cmd->add_option("--frame-dump", frame_dump, "Write per-frame CSV here");

    CommonArgs sweep_args;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Sweep body speed over multipliers with repeats");
    add_common_options(sweep_cmd, sweep_args, true);

    CommonArgs opt_args;
    std::optional<double> opt_lo;
    std::optional<double> opt_hi;
    int opt_levels = 3;
    CLI::App* opt_cmd =
        app.add_subcommand("optimize", "Locate the collision-minimizing body speed");
    add_common_options(opt_cmd, opt_args, false);
    opt_cmd->add_option("--lo", opt_lo, "Bracket low edge, grid/frame (default 0.2x wind)");
    opt_cmd->add_option("--hi", opt_hi, "Bracket high edge, grid/frame (default 3x wind)");
    opt_cmd->add_option("--levels", opt_levels, "Refinement levels (default 3)");

    std::string preset_name;
    std::string preset_out;
    CLI::App* preset_cmd =
        app.add_subcommand("preset", "Print a preset as a config document");
    preset_cmd->add_option("name", preset_name, "Preset name")->required();
    preset_cmd->add_option("--out", preset_out, "Write output here instead of stdout");

    CLI::App* list_cmd = app.add_subcommand("list-presets", "List preset names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run_cmd->parsed())
            return run_command(run_args, frame_dump);
        if (sweep_cmd->parsed())
            return sweep_command(sweep_args);
        if (opt_cmd->parsed())
            return optimize_command(opt_args, opt_lo, opt_hi, opt_levels);
        if (preset_cmd->parsed())
            return preset_command(preset_name, preset_out);
        if (list_cmd->parsed())
            return list_presets_command();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
