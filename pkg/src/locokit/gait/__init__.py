"""Template library and velocity-conditioned reference gait generation."""

from locokit.gait.generator import (
    BatchGenerator,
    GaitCommand,
    GeneratorState,
    ReferenceFrame,
    advance_phase,
    blend_period,
    blend_pose,
    contact_indicators,
    neighbor_select,
    step,
)
from locokit.gait.library import TemplateLibrary

__all__ = [
    "BatchGenerator",
    "GaitCommand",
    "GeneratorState",
    "ReferenceFrame",
    "TemplateLibrary",
    "advance_phase",
    "blend_period",
    "blend_pose",
    "contact_indicators",
    "neighbor_select",
    "step",
]
