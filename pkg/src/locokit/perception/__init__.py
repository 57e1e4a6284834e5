"""Depth-camera analysis, depth image processing, domain randomization."""

from locokit.perception.depth import (
    CROP_SHAPE,
    RENDER_SHAPE,
    DepthAugmentParams,
    DepthImage,
    augment_depth,
    center_crop,
    read_depth,
    write_depth,
)
from locokit.perception.randomization import (
    RANDOMIZATION_RANGES,
    RandomizationDraw,
    sample_randomization,
)
from locokit.perception.resolution import (
    CameraConfig,
    ResolutionResult,
    SweepPoint,
    mark_pareto,
    min_height_feasible,
    resolution_sweep,
    vertical_resolution,
)

__all__ = [
    "CROP_SHAPE",
    "RANDOMIZATION_RANGES",
    "RENDER_SHAPE",
    "CameraConfig",
    "DepthAugmentParams",
    "DepthImage",
    "RandomizationDraw",
    "ResolutionResult",
    "SweepPoint",
    "augment_depth",
    "center_crop",
    "mark_pareto",
    "min_height_feasible",
    "read_depth",
    "resolution_sweep",
    "sample_randomization",
    "vertical_resolution",
    "write_depth",
]
