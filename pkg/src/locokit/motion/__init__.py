"""Motion-clip ingestion and preprocessing into gait templates."""

from locokit.motion.clips import (
    ClipCycle,
    ClipFormatError,
    ContactTimeline,
    FootContactTrack,
    InsufficientCyclesError,
    RawClip,
    detect_contacts,
    extract_cycle,
    load_raw_clip,
    save_raw_clip,
    segment_cycles,
)
from locokit.motion.smoothing import gaussian_kernel, smooth_gaussian
from locokit.motion.templates import (
    GaitTemplate,
    NonPeriodicCycleError,
    load_template,
    resample_phase,
    save_template,
)

__all__ = [
    "ClipCycle",
    "ClipFormatError",
    "ContactTimeline",
    "FootContactTrack",
    "GaitTemplate",
    "InsufficientCyclesError",
    "NonPeriodicCycleError",
    "RawClip",
    "detect_contacts",
    "extract_cycle",
    "gaussian_kernel",
    "load_raw_clip",
    "load_template",
    "resample_phase",
    "save_raw_clip",
    "save_template",
    "segment_cycles",
    "smooth_gaussian",
]
