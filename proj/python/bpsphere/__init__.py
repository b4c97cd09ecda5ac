"""Blaschke-Petkantschin type formulas for spheres."""

from ._core import (
    DegenerateInput,
    EstimatorReport,
    InvalidInput,
    TheoremConfig,
    UnsupportedTheorem,
    ball_volume,
    cli,
    compare,
    density_at,
    draw_tuple,
    estimate_lhs,
    estimate_rhs,
    factorial,
    fd_density_at,
    grassmannian_measure,
    is_chart_free,
    roundtrip_error,
    run_default_suite,
    simplex_volume,
    sphere_surface_area,
)

__all__ = [
    "DegenerateInput",
    "EstimatorReport",
    "InvalidInput",
    "TheoremConfig",
    "UnsupportedTheorem",
    "ball_volume",
    "cli",
    "compare",
    "density_at",
    "draw_tuple",
    "estimate_lhs",
    "estimate_rhs",
    "factorial",
    "fd_density_at",
    "grassmannian_measure",
    "is_chart_free",
    "roundtrip_error",
    "run_default_suite",
    "simplex_volume",
    "sphere_surface_area",
]
