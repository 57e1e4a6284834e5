"""Depth-camera vertical resolution analysis and Pareto sweeps.

For a camera at mount height z0, pitched down by alpha, with vertical
field of view beta spread over h pixel rows, one pixel row subtends
delta = -beta / h and the ground footprint of that row is

    r_v = z0 * sin(-delta) / (sin(alpha) * sin(alpha + delta))
        = z0 * sin(beta / h) / (sin(alpha) * sin(alpha - beta / h)).

Smaller r_v resolves finer terrain features; more pixel rows cost more
to render and process, hence the Pareto sweep over configurations.
"""

import math
from dataclasses import dataclass
from itertools import product


@dataclass
class CameraConfig:
    """Depth camera geometry.  Angles in radians."""

    mount_height: float          # z0, m
    pitch: float                 # alpha, downward pitch
    vertical_fov: float          # beta
    height_px: int
    width_px: int = 64

    def __post_init__(self):
        if not self.mount_height > 0:
            raise ValueError(f"mount height must be positive, got {self.mount_height}")
        if not 0 < self.pitch < math.pi / 2:
            raise ValueError(f"pitch must lie in (0, pi/2), got {self.pitch}")
        if not 0 < self.vertical_fov < math.pi:
            raise ValueError(
                f"vertical FOV must lie in (0, pi), got {self.vertical_fov}"
            )
        if self.height_px < 1 or self.width_px < 1:
            raise ValueError("image dimensions must be at least 1 pixel")
        if not self.pitch - self.vertical_fov / self.height_px > 0:
            raise ValueError(
                "invalid geometry: pitch must exceed the per-row FOV "
                f"(alpha={self.pitch}, beta/h={self.vertical_fov / self.height_px})"
            )

    @property
    def pixel_count(self):
        return self.height_px * self.width_px


@dataclass
class ResolutionResult:
    resolution: float    # r_v, meters of ground per pixel row
    distance: float      # implied measurement distance z0 / sin(alpha), m


def vertical_resolution(cfg):
    """Evaluate r_v; returns (r_v, measurement distance).

    Both algebraic forms (in delta and in beta / h) are evaluated and
    must agree to 1e-12; a disagreement would mean the substitution
    delta = -beta / h was broken by an edit.
    """
    delta = -cfg.vertical_fov / cfg.height_px
    if cfg.pitch + delta <= 0:
        raise ValueError(
            f"invalid geometry: alpha + delta = {cfg.pitch + delta} <= 0"
        )
    denom = math.sin(cfg.pitch) * math.sin(cfg.pitch + delta)
    r_delta_form = cfg.mount_height * math.sin(-delta) / denom
    r_sub_form = (
        cfg.mount_height
        * math.sin(cfg.vertical_fov / cfg.height_px)
        / (math.sin(cfg.pitch) * math.sin(cfg.pitch - cfg.vertical_fov / cfg.height_px))
    )
    assert abs(r_delta_form - r_sub_form) <= 1e-12 * max(1.0, abs(r_sub_form))
    distance = cfg.mount_height / math.sin(cfg.pitch)
    return ResolutionResult(resolution=r_sub_form, distance=distance)


def min_height_feasible(cfg, feature_height):
    """True iff the camera resolves features of the given height:
    r_v(cfg) < feature_height."""
    return vertical_resolution(cfg).resolution < feature_height


@dataclass
class SweepPoint:
    mount_height: float
    pitch_deg: float
    fov_deg: float
    height_px: int
    width_px: int
    resolution: float
    distance: float
    pixels: int
    pareto: bool = False


def resolution_sweep(mount_heights, pitches_deg, fovs_deg, heights_px,
                     widths_px=(64,)):
    """Enumerate camera configs and mark the Pareto-optimal ones.

    Angles are taken in degrees (converted internally).  Enumeration
    order is the nested product (z0, pitch, fov, h, w) over the inputs
    as given, so output ordering is deterministic.  A point is Pareto
    optimal iff no other point has both strictly smaller r_v and
    strictly fewer pixels; the optimal set does not depend on input
    ordering.
    """
    lists = [list(mount_heights), list(pitches_deg), list(fovs_deg),
             list(heights_px), list(widths_px)]
    for name, vals in zip(("mount_heights", "pitches_deg", "fovs_deg",
                           "heights_px", "widths_px"), lists):
        if not vals:
            raise ValueError(f"empty range: {name}")
    points = []
    for z0, pitch_deg, fov_deg, h, w in product(*lists):
        cfg = CameraConfig(
            mount_height=float(z0),
            pitch=math.radians(pitch_deg),
            vertical_fov=math.radians(fov_deg),
            height_px=int(h),
            width_px=int(w),
        )
        res = vertical_resolution(cfg)
        points.append(SweepPoint(
            mount_height=float(z0),
            pitch_deg=float(pitch_deg),
            fov_deg=float(fov_deg),
            height_px=int(h),
            width_px=int(w),
            resolution=res.resolution,
            distance=res.distance,
            pixels=cfg.pixel_count,
        ))
    mark_pareto(points)
    return points


def mark_pareto(points):
    """Set the pareto flag in place: dominated iff some other point is
    strictly better on both (resolution, pixels).

    Sort by pixel count and sweep once, carrying the best resolution
    seen among strictly cheaper points; O(n log n) instead of the
    quadratic pairwise filter.
    """
    order = sorted(range(len(points)), key=lambda i: points[i].pixels)
    best_cheaper = math.inf
    i = 0
    while i < len(order):
        # process all points tied on pixel count together: ties cannot
        # dominate each other (dominance needs strictly fewer pixels)
        j = i
        while j < len(order) and points[order[j]].pixels == points[order[i]].pixels:
            j += 1
        group = order[i:j]
        for idx in group:
            points[idx].pareto = not best_cheaper < points[idx].resolution
        best_cheaper = min(
            [best_cheaper] + [points[idx].resolution for idx in group]
        )
        i = j
    return points
