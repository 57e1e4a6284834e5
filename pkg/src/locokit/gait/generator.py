"""Velocity-conditioned reference gait generation.

Given a template library and a commanded base velocity, the generator
selects the two templates whose nominal speeds bracket the commanded
forward speed, blends their periods and pose grids with a single factor

    alpha = clip((|v_x| - u_lo) / (u_hi - u_lo + eps), 0, 1),

advances a normalized phase by dt / T_cmd per control step, and emits a
reference pose, per-step pose delta, and per-foot contact indicators.

Standing: when the planar speed and yaw rate both fall at or below the
library thresholds, the generator holds the stand pose, freezes the
phase, and reports both feet in contact.  Leaving standing requires
exceeding a threshold by the hysteresis band, so command noise at the
boundary cannot flap the mode within a step.  Phase is never reset on
the standing-to-walking transition; it resumes where it stopped.

The scalar `step` and the vectorized `BatchGenerator.step` share one
array core, so a batch row is bit-identical to the corresponding scalar
trajectory.
"""

from dataclasses import dataclass

import numpy as np

from locokit import kernels


@dataclass
class GaitCommand:
    """Commanded base velocity (v_x, v_y forward/lateral m/s, w_z rad/s)."""

    vx: float = 0.0
    vy: float = 0.0
    wz: float = 0.0

    def as_array(self):
        return np.array([self.vx, self.vy, self.wz], dtype=np.float64)


@dataclass
class GeneratorState:
    """Per-agent generator state; do not share between concurrent steppers."""

    phase: float = 0.0
    alpha: float = 0.0
    period: float = 1.0
    standing: bool = True


@dataclass
class ReferenceFrame:
    """One step of reference output."""

    theta_d: np.ndarray       # (12,) reference pose
    delta_theta_d: np.ndarray  # (12,) reference per-step pose delta
    contact_left: int
    contact_right: int
    phase: float


def _as_command_array(cmd):
    if isinstance(cmd, GaitCommand):
        return cmd.as_array()
    arr = np.asarray(cmd, dtype=np.float64)
    if arr.shape != (3,):
        raise ValueError(f"command must have 3 entries, got shape {arr.shape}")
    return arr


def _select_arrays(speeds, ux, epsilon):
    """Bracketing template indices and blend factor per command.

    Outside the covered speed range both indices collapse onto the
    nearest endpoint template; the clip then pins alpha to 0 below the
    slowest speed and 1 above the fastest.
    """
    u = np.abs(ux)
    m = speeds.shape[0]
    j = np.searchsorted(speeds, u, side="right")
    lo = np.clip(j - 1, 0, m - 1)
    hi = np.clip(j, 0, m - 1)
    alpha = np.clip((u - speeds[lo]) / (speeds[hi] - speeds[lo] + epsilon), 0.0, 1.0)
    return lo, hi, alpha


def _arc_lerp(a, b, alpha):
    # circular interpolation of phases along the shorter arc
    d = np.mod(b - a + 0.5, 1.0) - 0.5
    return np.mod(a + alpha * d, 1.0)


def _blend_window_arrays(lib, lo, hi, alpha):
    """Blend stance windows by interpolating interval endpoints."""
    a = alpha[:, None]
    on = _arc_lerp(lib._win_on[lo], lib._win_on[hi], a)
    off = _arc_lerp(lib._win_off[lo], lib._win_off[hi], a)
    length = np.mod(off - on, 1.0)
    return on, length


def _resolve_standing(lib, standing, speed, yaw_abs):
    enter = (speed <= lib.standing_threshold) & (yaw_abs <= lib.yaw_threshold)
    leave = (speed > lib.standing_threshold + lib.hysteresis) | (
        yaw_abs > lib.yaw_threshold + lib.hysteresis
    )
    return np.where(standing, ~leave, enter)


def _step_core(lib, phase, standing, commands, dt):
    """Array core shared by scalar and batch stepping."""
    vx = commands[:, 0]
    vy = commands[:, 1]
    wz = commands[:, 2]

    lo, hi, alpha = _select_arrays(lib._speeds, vx, lib.epsilon)
    period = (1.0 - alpha) * lib._periods[lo] + alpha * lib._periods[hi]

    speed = np.sqrt(vx * vx + vy * vy)
    standing_new = _resolve_standing(lib, standing, speed, np.abs(wz))

    phase_new = np.where(standing_new, phase, np.mod(phase + dt / period, 1.0))

    pose_new = kernels.blend_pose_batch(lib._grids, lo, hi, alpha, phase_new)
    pose_old = kernels.blend_pose_batch(lib._grids, lo, hi, alpha, phase)
    stand_col = standing_new[:, None]
    theta_d = np.where(stand_col, lib.stand_pose[None, :], pose_new)
    delta_d = np.where(stand_col, 0.0, pose_new - pose_old)

    on, length = _blend_window_arrays(lib, lo, hi, alpha)
    in_window = np.mod(phase_new[:, None] - on, 1.0) < length
    contacts = np.where(stand_col, True, in_window)

    return phase_new, alpha, period, standing_new, theta_d, delta_d, contacts


def neighbor_select(lib, ux):
    """Bracketing (lower, upper) templates and blend factor for a speed."""
    lo, hi, alpha = _select_arrays(
        lib._speeds, np.array([float(ux)]), lib.epsilon
    )
    return lib.templates[int(lo[0])], lib.templates[int(hi[0])], float(alpha[0])


def blend_period(t_lower, t_upper, alpha):
    """Commanded gait period: (1 - alpha) * t_lower + alpha * t_upper."""
    if not (t_lower > 0.0 and t_upper > 0.0):
        raise ValueError("periods must be positive")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return (1.0 - alpha) * t_lower + alpha * t_upper

def advance_phase(phase, dt, period):
    """Next phase: (phase + dt / period) mod 1, always in [0, 1)."""
    if not period > 0.0:
        raise ValueError(f"period must be positive, got {period}")
    if dt < 0.0:
        raise ValueError(f"dt must be non-negative, got {dt}")
    return float(np.mod(phase + dt / period, 1.0))


def _resolve_mode_scalar(lib, state, cmd_arr):
    speed = np.sqrt(cmd_arr[0] * cmd_arr[0] + cmd_arr[1] * cmd_arr[1])
    standing = _resolve_standing(
        lib,
        np.array([state.standing]),
        np.array([speed]),
        np.array([abs(cmd_arr[2])]),
    )
    return bool(standing[0])


def blend_pose(lib, state, cmd):
    """Reference pose at the state's phase for a command.

    Standing (resolved with hysteresis from the state's current mode)
    returns the stand pose; otherwise the two bracketing templates are
    evaluated at state.phase with wraparound linear interpolation and
    convex-combined with the command's alpha.
    """
    cmd_arr = _as_command_array(cmd)
    if _resolve_mode_scalar(lib, state, cmd_arr):
        return lib.stand_pose.copy()
    lo, hi, alpha = _select_arrays(
        lib._speeds, cmd_arr[:1], lib.epsilon
    )
    pose = kernels.blend_pose_batch(
        lib._grids, lo, hi, alpha, np.array([state.phase])
    )
    return pose[0]


def contact_indicators(state, lower, upper, alpha):
    """Per-foot contact indicators at the state's phase.

    Stance windows of the two templates are blended by interpolating
    their endpoints with alpha; the indicator is 1 iff the phase lies in
    the blended circular interval.  Standing forces both feet planted.
    """
    if state.standing:
        return 1, 1
    out = []
    for foot in ("left", "right"):
        on_l, off_l = lower.stance_window[foot]
        on_u, off_u = upper.stance_window[foot]
        on = float(_arc_lerp(np.float64(on_l), np.float64(on_u), alpha))
        off = float(_arc_lerp(np.float64(off_l), np.float64(off_u), alpha))
        length = (off - on) % 1.0
        out.append(int((state.phase - on) % 1.0 < length))
    return out[0], out[1]


def step(lib, state, cmd, dt):
    """Advance one control step: returns (new state, ReferenceFrame).

    Order of operations: resolve standing with hysteresis, select and
    blend the bracketing templates, advance the phase (frozen when
    standing), evaluate the reference pose and per-step delta, blend the
    stance windows into contact indicators.
    """
    cmd_arr = _as_command_array(cmd)
    phase, alpha, period, standing, theta_d, delta_d, contacts = _step_core(
        lib,
        np.array([state.phase]),
        np.array([state.standing]),
        cmd_arr[None, :],
        float(dt),
    )
    new_state = GeneratorState(
        phase=float(phase[0]),
        alpha=float(alpha[0]),
        period=float(period[0]),
        standing=bool(standing[0]),
    )
    frame = ReferenceFrame(
        theta_d=theta_d[0],
        delta_theta_d=delta_d[0],
        contact_left=int(contacts[0, 0]),
        contact_right=int(contacts[0, 1]),
        phase=float(phase[0]),
    )
    return new_state, frame


class BatchGenerator:
    """Vectorized generator for a batch of independent agents.

    Holds per-agent phase and mode arrays; `step` takes an (N, 3)
    command array and returns stacked reference outputs.  Row i of a
    batch is bit-identical to a scalar generator stepped with row i's
    commands, because both paths share the same array core.
    """

    def __init__(self, lib, num_agents):
        if num_agents < 1:
            raise ValueError("num_agents must be at least 1")
        self.lib = lib
        self.num_agents = int(num_agents)
        self.phase = np.zeros(self.num_agents, dtype=np.float64)
        self.alpha = np.zeros(self.num_agents, dtype=np.float64)
        self.period = np.ones(self.num_agents, dtype=np.float64)
        self.standing = np.ones(self.num_agents, dtype=bool)

    def reset(self, agent=None, phase=0.0):
        if agent is None:
            self.phase[:] = phase
            self.alpha[:] = 0.0
            self.period[:] = 1.0
            self.standing[:] = True
        else:
            self.phase[agent] = phase
            self.alpha[agent] = 0.0
            self.period[agent] = 1.0
            self.standing[agent] = True

    def step(self, commands, dt):
        """Advance every agent; returns (theta_d, delta_theta_d, contacts, phase).

        commands: (N, 3) float array of (v_x, v_y, w_z) rows.
        dt: control-step duration, a scalar or an (N,) per-agent array.
        contacts: (N, 2) 0/1 array, columns left then right.
        """
        commands = np.asarray(commands, dtype=np.float64)
        if commands.shape != (self.num_agents, 3):
            raise ValueError(
                f"commands must be ({self.num_agents}, 3), got {commands.shape}"
            )
        dt = np.asarray(dt, dtype=np.float64)
        if dt.ndim not in (0, 1) or (dt.ndim == 1 and dt.shape != (self.num_agents,)):
            raise ValueError(f"dt must be a scalar or ({self.num_agents},) array")
        if np.any(dt < 0.0):
            raise ValueError("dt must be non-negative")
        phase, alpha, period, standing, theta_d, delta_d, contacts = _step_core(
            self.lib, self.phase, self.standing, commands, dt
        )
        self.phase = phase
        self.alpha = alpha
        self.period = period
        self.standing = standing
        return theta_d, delta_d, contacts.astype(np.int8), phase.copy()
