"""Monte Carlo simulator of a pedestrian point cloud crossing falling rain or snow."""

from ._stormpath import (
    CurveFeatures,
    DensityRatio,
    Detector,
    Direction,
    MultiplierStats,
    OptimumReport,
    RunResult,
    SimConfig,
    SweepResult,
    SweepSpec,
    __version__,
    aggregate,
    density_ratio,
    derive_seed,
    detect_features,
    detect_local_min,
    detect_plateau,
    emit_config,
    emit_csv,
    emit_json,
    emit_report_json,
    emit_run_json,
    emit_svg,
    parse_config,
    physical_to_sim,
    preset,
    preset_names,
    refine_minimum,
    run_sweep,
    run_transit,
)

__all__ = [
    "CurveFeatures",
    "DensityRatio",
    "Detector",
    "Direction",
    "MultiplierStats",
    "OptimumReport",
    "RunResult",
    "SimConfig",
    "SweepResult",
    "SweepSpec",
    "__version__",
    "aggregate",
    "density_ratio",
    "derive_seed",
    "detect_features",
    "detect_local_min",
    "detect_plateau",
    "emit_config",
    "emit_csv",
    "emit_json",
    "emit_report_json",
    "emit_run_json",
    "emit_svg",
    "parse_config",
    "physical_to_sim",
    "preset",
    "preset_names",
    "refine_minimum",
    "run_sweep",
    "run_transit",
]
