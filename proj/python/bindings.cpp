#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stormpath/io.hpp"

namespace py = pybind11;
using namespace stormpath;

PYBIND11_MODULE(_stormpath, m) {
    m.doc() = "Monte Carlo simulator of a point-cloud pedestrian crossing a field "
              "of falling rain or snow.";
    m.attr("__version__") = kVersion;

    py::enum_<Direction>(m, "Direction")
        .value("WithWind", Direction::WithWind)
        .value("AgainstWind", Direction::AgainstWind);

    py::enum_<Detector>(m, "Detector")
        .value("Grid", Detector::Grid)
        .value("BruteForce", Detector::BruteForce);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("drop_count", &SimConfig::drop_count)
        .def_readwrite("angle_spread_deg", &SimConfig::angle_spread_deg)
        .def_readwrite("fall_speed", &SimConfig::fall_speed)
        .def_readwrite("wind_speed", &SimConfig::wind_speed)
        .def_readwrite("direction", &SimConfig::direction)
        .def_readwrite("body_speed", &SimConfig::body_speed)
        .def_readwrite("collision_radius", &SimConfig::collision_radius)
        .def_readwrite("body_points", &SimConfig::body_points)
        .def_readwrite("body_width", &SimConfig::body_width)
        .def_readwrite("body_height", &SimConfig::body_height)
        .def_readwrite("detector", &SimConfig::detector)
        .def("__eq__", [](const SimConfig& a, const SimConfig& b) { return a == b; });

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("total_hits", &RunResult::total_hits)
        .def_readonly("hits_per_frame", &RunResult::hits_per_frame)
        .def_readonly("frame_count", &RunResult::frame_count)
        .def_readonly("seed", &RunResult::seed);

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("base_cfg", &SweepSpec::base_cfg)
        .def_readwrite("base_speed", &SweepSpec::base_speed)
        .def_readwrite("trials", &SweepSpec::trials)
        .def_readwrite("repeats", &SweepSpec::repeats)
        .def_readwrite("master_seed", &SweepSpec::master_seed);

    py::class_<MultiplierStats>(m, "MultiplierStats")
        .def_readonly("multiplier", &MultiplierStats::multiplier)
        .def_readonly("speed", &MultiplierStats::speed)
        .def_readonly("mean_hits", &MultiplierStats::mean_hits)
        .def_readonly("std_hits", &MultiplierStats::std_hits)
        .def_readonly("raw_totals", &MultiplierStats::raw_totals);

    py::class_<CurveFeatures>(m, "CurveFeatures")
        .def_readonly("local_min_multiplier", &CurveFeatures::local_min_multiplier)
        .def_readonly("plateau_multiplier", &CurveFeatures::plateau_multiplier)
        .def_readonly("monotone_decreasing", &CurveFeatures::monotone_decreasing);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("spec", &SweepResult::spec)
        .def_readonly("per_multiplier", &SweepResult::per_multiplier)
        .def("means", &SweepResult::means)
        .def("stds", &SweepResult::stds)
        .def("speeds_x_fall", &SweepResult::speeds_x_fall)
        .def("speeds_x_wind", &SweepResult::speeds_x_wind)
        .def("__eq__", [](const SweepResult& a, const SweepResult& b) { return a == b; });

    py::class_<DensityRatio>(m, "DensityRatio")
        .def_readonly("ratios", &DensityRatio::ratios)
        .def_readonly("mean_ratio", &DensityRatio::mean_ratio)
        .def_readonly("defined_count", &DensityRatio::defined_count);

    py::class_<OptimumReport>(m, "OptimumReport")
        .def_readonly("best_speed", &OptimumReport::best_speed)
        .def_readonly("best_mean_hits", &OptimumReport::best_mean_hits)
        .def_readonly("bracket_low", &OptimumReport::bracket_low)
        .def_readonly("bracket_high", &OptimumReport::bracket_high)
        .def_readonly("evaluations", &OptimumReport::evaluations)
        .def_readonly("significant", &OptimumReport::significant);

    m.def("run_transit",
          [](const SimConfig& cfg, std::uint64_t seed) { return run_transit(cfg, seed); },
          py::arg("cfg"), py::arg("seed"),
          "Run one transit; deterministic in (cfg, seed).");
    m.def("run_sweep", &run_sweep, py::arg("spec"), py::arg("workers") = 1,
          "Run a body-speed sweep; workers=0 picks a thread count automatically.");
    m.def("preset", &preset, py::arg("name"));
    m.def("preset_names", &preset_names);
    m.def("derive_seed", &derive_seed, py::arg("master_seed"), py::arg("multiplier_j"),
          py::arg("repeat_k"));
    m.def("aggregate", &aggregate, py::arg("values"),
          "Mean and population std (divisor N).");
    m.def("physical_to_sim", &physical_to_sim, py::arg("speed_mps"),
          py::arg("fall_anchor_mps"), py::arg("fall_anchor_sim"));
    m.def("detect_local_min", &detect_local_min, py::arg("means"), py::arg("stds"));
    m.def("detect_plateau", &detect_plateau, py::arg("means"), py::arg("stds"));
    m.def("detect_features", &detect_features, py::arg("sweep"));
    m.def("density_ratio", &density_ratio, py::arg("sweep_hi"), py::arg("sweep_lo"));
    m.def("refine_minimum",
          [](const SimConfig& cfg, double lo, double hi, int levels, int repeats,
             std::uint64_t master_seed) {
              return refine_minimum(cfg, lo, hi, levels, repeats, master_seed);
          },
          py::arg("cfg"), py::arg("speed_lo"), py::arg("speed_hi"), py::arg("levels"),
          py::arg("repeats"), py::arg("master_seed"));
    m.def("emit_csv", &emit_csv, py::arg("sweep"));
    m.def("emit_json", py::overload_cast<const SweepResult&>(&emit_json), py::arg("sweep"));
    m.def("emit_run_json", py::overload_cast<const RunResult&>(&emit_json), py::arg("run"));
    m.def("emit_report_json", py::overload_cast<const OptimumReport&>(&emit_json),
          py::arg("report"));
    m.def("emit_svg", &emit_svg, py::arg("sweep"));
    m.def("emit_config", &emit_config, py::arg("spec"));
    m.def("parse_config",
          [](const std::string& text) { return parse_config(text).spec; },
          py::arg("text"));
}
