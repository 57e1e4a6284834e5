"""Domain randomization sampling.

One uniform draw per randomized simulation parameter; the base position
offset row covers two axes, so it draws x and y separately.  The depth
noise sigma and hole probability are fixed pipeline parameters (see
locokit.perception.depth.DepthAugmentParams), not per-episode draws.

Draw order follows RANDOMIZATION_RANGES, so a seeded generator
reproduces the exact sequence.
"""

import math
from dataclasses import dataclass, fields

# field -> inclusive uniform range, in field/draw order
RANDOMIZATION_RANGES = {
    "payload_kg": (-5.0, 5.0),
    "link_mass_factor": (0.8, 1.2),
    "com_shift_m": (-0.15, 0.15),
    "friction": (0.2, 1.5),
    "kp_factor": (0.9, 1.1),
    "kd_factor": (0.9, 1.1),
    "joint_armature": (2e-3, 2e-2),      # kg m^2
    "base_pos_x": (-0.5, 0.5),           # m
    "base_pos_y": (-0.5, 0.5),           # m
    "base_yaw": (-math.pi, math.pi),     # rad
    "base_lin_vel": (-0.5, 0.5),         # m/s
    "base_ang_vel": (-0.5, 0.5),         # rad/s
    "joint_pos_scale": (0.5, 1.5),
    "depth_bias_m": (-0.04, 0.04),
}


@dataclass
class RandomizationDraw:
    payload_kg: float
    link_mass_factor: float
    com_shift_m: float
    friction: float
    kp_factor: float
    kd_factor: float
    joint_armature: float
    base_pos_x: float
    base_pos_y: float
    base_yaw: float
    base_lin_vel: float
    base_ang_vel: float
    joint_pos_scale: float
    depth_bias_m: float

    def __post_init__(self):
        for f in fields(self):
            lo, hi = RANDOMIZATION_RANGES[f.name]
            v = getattr(self, f.name)
            if not lo <= v <= hi:
                raise ValueError(
                    f"{f.name} = {v} outside randomization range [{lo}, {hi}]"
                )

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


def sample_randomization(rng):
    """Draw every randomized parameter uniformly from its range."""
    values = {
        name: float(rng.uniform(lo, hi))
        for name, (lo, hi) in RANDOMIZATION_RANGES.items()
    }
    return RandomizationDraw(**values)
