"""Per-step snapshot and reward configuration types.

A StepSnapshot is the single input record all reward and observation
functions consume: everything is a pure function of one snapshot (plus a
reference frame where tracking is involved), so evaluation can run
anywhere, including offline over logged rollouts.
"""

from dataclasses import dataclass, field

import numpy as np

from locokit.robot import DEFAULT_ANKLE_INDICES, FEET, NUM_JOINTS

GRAVITY_NORM_TOL = 1e-6


def _vec(value, n, name):
    arr = np.asarray(value, dtype=np.float64)
    if arr.shape != (n,):
        raise ValueError(f"{name}: expected {n} entries, got shape {arr.shape}")
    return arr


@dataclass
class FootState:
    """Per-foot measurements for one control step.

    air_time is the duration of the flight phase that ended if the foot
    touched down this step, else 0 for a foot in continuing contact and
    the running flight time for an airborne foot.  A touchdown event is
    therefore contact and air_time > 0.  edge_distance is the horizontal
    distance from the foot center to the nearest terrain discontinuity
    (a heightmap cell step larger than 5 cm); use inf on open ground.
    """

    contact: bool = False
    force: np.ndarray = None         # (3,) contact force, N
    velocity: np.ndarray = None      # (3,) foot velocity, m/s
    height: float = 0.0              # height above local terrain, m
    air_time: float = 0.0            # s
    edge_distance: float = float("inf")  # m

    def __post_init__(self):
        self.force = _vec(self.force if self.force is not None else np.zeros(3),
                          3, "foot force")
        self.velocity = _vec(
            self.velocity if self.velocity is not None else np.zeros(3),
            3, "foot velocity",
        )


def _default_feet():
    return {foot: FootState(contact=True) for foot in FEET}


@dataclass
class StepSnapshot:
    """Everything observed at one control step.

    Dimensions are validated at construction; gravity must be a unit
    vector.  heightmap is optional and only required by the critic
    observation.  joint_delta is the measured per-step joint position
    change (for the motion-tracking error); walking mirrors the gait
    generator's mode and gates the double-air penalty.
    """

    ang_vel: np.ndarray = None       # (3,) body angular velocity
    gravity: np.ndarray = None       # (3,) gravity direction in body frame
    command: np.ndarray = None       # (3,) velocity command (vx, vy, wz)
    joint_pos: np.ndarray = None     # (12,)
    joint_vel: np.ndarray = None     # (12,)
    prev_action: np.ndarray = None   # (12,)
    base_lin_vel: np.ndarray = None  # (3,) actual base linear velocity
    heightmap: np.ndarray = None     # (H, W) ground-truth height grid or None
    phase: float = 0.0
    joint_delta: np.ndarray = None   # (12,) measured per-step joint change
    walking: bool = True
    feet: dict = field(default_factory=_default_feet)

    def __post_init__(self):
        self.ang_vel = _vec(
            self.ang_vel if self.ang_vel is not None else np.zeros(3),
            3, "angular velocity",
        )
        if self.gravity is None:
            self.gravity = np.array([0.0, 0.0, -1.0])
        self.gravity = _vec(self.gravity, 3, "gravity direction")
        norm = float(np.linalg.norm(self.gravity))
        if abs(norm - 1.0) > GRAVITY_NORM_TOL:
            raise ValueError(
                f"gravity direction must be a unit vector, got norm {norm}"
            )
        self.command = _vec(
            self.command if self.command is not None else np.zeros(3),
            3, "velocity command",
        )
        for name in ("joint_pos", "joint_vel", "prev_action", "joint_delta"):
            val = getattr(self, name)
            if val is None:
                val = np.zeros(NUM_JOINTS)
            setattr(self, name, _vec(val, NUM_JOINTS, name.replace("_", " ")))
        self.base_lin_vel = _vec(
            self.base_lin_vel if self.base_lin_vel is not None else np.zeros(3),
            3, "base linear velocity",
        )
        if self.heightmap is not None:
            self.heightmap = np.asarray(self.heightmap, dtype=np.float64)
            if self.heightmap.ndim != 2:
                raise ValueError(
                    f"heightmap: expected a 2D grid, got shape {self.heightmap.shape}"
                )
        for foot in FEET:
            if foot not in self.feet:
                raise ValueError(f"missing foot state '{foot}'")


@dataclass
class RewardConfig:
    """Weights, scales, and thresholds for the reward terms.

    gait_weights / gait_scales follow the term order (pos, vel, delta,
    ankle).  Landing formulas and their thresholds are documented in
    locokit.rewards.landing.
    """

    gait_weights: tuple = (0.10, 0.05, 0.05, 0.05)
    gait_scales: tuple = (5.0, 4.0, 10.0, 5.0)
    ankle_indices: tuple = DEFAULT_ANKLE_INDICES

    air_weight: float = 1.25
    slide_weight: float = -0.10
    dbl_air_weight: float = -1.00
    swing_weight: float = -20.0
    stumble_weight: float = -30.0
    edge_weight: float = -2.00

    air_time_min: float = 0.1      # s, flights shorter than this earn nothing
    air_time_max: float = 0.5      # s, air-time credit saturates here
    slide_clamp: float = 4.0       # cap on the raw slide term
    swing_height_target: float = 0.08  # m
    stumble_force_ratio: float = 2.0   # horizontal / vertical force threshold
    edge_margin: float = 0.03     # m, planted foot closer than this is unsafe

    heightmap_shape: tuple = (11, 17)
    heightmap_spacing: float = 0.1  # m between grid points

    def __post_init__(self):
        if len(self.gait_weights) != 4 or len(self.gait_scales) != 4:
            raise ValueError("gait_weights and gait_scales must have 4 entries")
        if not all(np.isfinite(w) for w in self.gait_weights):
            raise ValueError("gait_weights must be finite")
        if not all(s > 0 for s in self.gait_scales):
            raise ValueError("gait_scales must be positive")
        if not all(0 <= j < NUM_JOINTS for j in self.ankle_indices):
            raise ValueError(f"ankle_indices out of range: {self.ankle_indices}")
