"""PD action mapping and the gait tracking reward.

Every tracking error folds into the same exponential shape
r_i = exp(-lambda_i * e_i), then into a weighted sum.  The error and
exponential evaluation run through locokit.kernels so scalar calls,
batched calls, and the compiled backend all agree bit for bit; the final
weighted fold uses math.fsum, which is exact for the default weights
(0.10 + 0.05 + 0.05 + 0.05 == 0.25 in floating point).
"""

import math
from dataclasses import dataclass

import numpy as np

from locokit import kernels
from locokit.gait.generator import GaitCommand
from locokit.robot import NUM_JOINTS

DEFAULT_KP = 60.0
DEFAULT_KD = 2.0

GAIT_TERM_NAMES = ("pos", "vel", "delta", "ankle")


def target_joints(action, default_pose):
    """Target joint positions: the action modulates the default pose."""
    a = np.asarray(action, dtype=np.float64)
    d = np.asarray(default_pose, dtype=np.float64)
    if a.shape != d.shape:
        raise ValueError(f"action shape {a.shape} does not match default {d.shape}")
    return d + a


def pd_torque(target, joint_pos, joint_vel, kp=DEFAULT_KP, kd=DEFAULT_KD):
    """Joint torques: kp * (target - joint_pos) - kd * joint_vel."""
    if kp < 0 or kd < 0:
        raise ValueError("gains must be non-negative")
    t = np.asarray(target, dtype=np.float64)
    q = np.asarray(joint_pos, dtype=np.float64)
    qd = np.asarray(joint_vel, dtype=np.float64)
    return kp * (t - q) - kd * qd


def command_velocity(cmd):
    """Commanded base linear velocity as a 3-vector.

    A GaitCommand contributes (v_x, v_y, 0): the yaw rate is not a
    linear velocity, so the velocity-tracking error compares planar
    command against the full measured linear velocity (penalizing
    vertical motion).  Plain 3-vectors pass through unchanged.
    """
    if isinstance(cmd, GaitCommand):
        return np.array([cmd.vx, cmd.vy, 0.0])
    v = np.asarray(cmd, dtype=np.float64)
    if v.shape != (3,):
        raise ValueError(f"command velocity: expected 3, got shape {v.shape}")
    return v


def fold_terms(weights, terms):
    """Exactly-rounded weighted sum of reward terms."""
    return math.fsum(w * t for w, t in zip(weights, terms))


@dataclass
class GaitRewardResult:
    errors: dict     # term -> e_i
    terms: dict      # term -> r_i = exp(-lambda_i * e_i)
    weighted: dict   # term -> w_i * r_i
    total: float     # sum of weighted contributions


def _result_from_rows(errors_row, terms_row, weights):
    errors = dict(zip(GAIT_TERM_NAMES, (float(e) for e in errors_row)))
    terms = dict(zip(GAIT_TERM_NAMES, (float(r) for r in terms_row)))
    weighted = {
        name: w * terms[name] for name, w in zip(GAIT_TERM_NAMES, weights)
    }
    return GaitRewardResult(
        errors=errors,
        terms=terms,
        weighted=weighted,
        total=fold_terms(weights, (terms[n] for n in GAIT_TERM_NAMES)),
    )


def gait_reward(snapshot, ref, cmd, config):
    """Gait tracking reward for one step.

    Errors, in term order (pos, vel, delta, ankle):
        pos    squared joint position error against the reference pose
        vel    squared base linear velocity error against the command
        delta  L1 error of the per-step joint change against the reference
        ankle  squared position error over the ankle joints only
    """
    e, r = gait_terms_batch(
        snapshot.joint_pos[None, :],
        ref.theta_d[None, :],
        snapshot.base_lin_vel[None, :],
        command_velocity(cmd)[None, :],
        snapshot.joint_delta[None, :],
        ref.delta_theta_d[None, :],
        config,
    )
    return _result_from_rows(e[0], r[0], config.gait_weights)


def gait_terms_batch(joint_pos, joint_ref, base_vel, cmd_vel,
                     joint_delta, joint_delta_ref, config):
    """Batched (errors, terms) arrays of shape (N, 4), term order as above."""
    joint_pos = np.asarray(joint_pos, dtype=np.float64)
    if joint_pos.ndim != 2 or joint_pos.shape[1] != NUM_JOINTS:
        raise ValueError(
            f"joint positions: expected (N, {NUM_JOINTS}), got {joint_pos.shape}"
        )
    errors = kernels.gait_errors_batch(
        joint_pos, joint_ref, base_vel, cmd_vel, joint_delta, joint_delta_ref,
        np.asarray(config.ankle_indices, dtype=np.intp),
    )
    terms = kernels.exp_terms_batch(
        errors, np.asarray(config.gait_scales, dtype=np.float64)
    )
    return errors, terms


def gait_reward_batch(joint_pos, joint_ref, base_vel, cmd_vel,
                      joint_delta, joint_delta_ref, config):
    """Batched gait reward: (errors (N,4), terms (N,4), totals (N,)).

    Row i is bit-identical to the scalar gait_reward on row i's inputs.
    """
    errors, terms = gait_terms_batch(
        joint_pos, joint_ref, base_vel, cmd_vel, joint_delta, joint_delta_ref,
        config,
    )
    weights = config.gait_weights
    totals = np.empty(errors.shape[0], dtype=np.float64)
    for i in range(errors.shape[0]):
        totals[i] = fold_terms(weights, terms[i])
    return errors, terms, totals


def total_reward(*term_maps):
    """Fold weighted term maps into one scalar; keep the breakdown.

    Every map contributes its values as-is (they are already weighted);
    a term name appearing in more than one map is an error.  Returns
    (total, merged breakdown).
    """
    merged = {}
    for m in term_maps:
        for name, value in m.items():
            if name in merged:
                raise ValueError(f"duplicate reward term '{name}'")
            merged[name] = float(value)
    return math.fsum(merged.values()), merged
