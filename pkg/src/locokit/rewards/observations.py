"""Observation vector assembly and the estimator training loss.

Actor observation layout (209 dims):

    [ang_vel(3), gravity(3), command(3), joint_pos(12), joint_vel(12),
     prev_action(12)]                      45  proprioception
    estimator output                      163
    gait phase                              1

Critic observation prepends the noise-free base linear velocity to the
proprioceptive block, replaces the estimator output with the
ground-truth heightmap grid, and appends the phase.
"""

from dataclasses import dataclass

import numpy as np

PROPRIO_DIM = 45
ESTIMATOR_DIM = 163
ACTOR_OBS_DIM = PROPRIO_DIM + ESTIMATOR_DIM + 1  # 209

# (snapshot field, display name, width) in actor observation order
PROPRIO_FIELDS = (
    ("ang_vel", "angular velocity", 3),
    ("gravity", "gravity direction", 3),
    ("command", "velocity command", 3),
    ("joint_pos", "joint positions", 12),
    ("joint_vel", "joint velocities", 12),
    ("prev_action", "previous action", 12),
)


@dataclass
class EstimatorOutputLayout:
    """Slot widths of the estimator output vector."""

    base_vel: int = 3
    latent: int = 32
    height_latent: int = 128

    @property
    def total(self):
        return self.base_vel + self.latent + self.height_latent

    def split(self, estimator_out):
        """Split a layout-conformant vector into (v_hat, z, h)."""
        e = np.asarray(estimator_out, dtype=np.float64)
        if e.shape != (self.total,):
            raise ValueError(
                f"estimator output: expected {self.total}, got "
                f"{e.shape[0] if e.ndim == 1 else e.shape}"
            )
        a = self.base_vel
        b = a + self.latent
        return e[:a], e[a:b], e[b:]


def assemble_proprio(snapshot):
    """The 45-dim proprioceptive block, in layout order."""
    parts = []
    for attr, name, width in PROPRIO_FIELDS:
        v = np.asarray(getattr(snapshot, attr), dtype=np.float64)
        if v.shape != (width,):
            raise ValueError(f"{name}: expected {width}, got shape {v.shape}")
        parts.append(v)
    return np.concatenate(parts)


def assemble_actor_obs(snapshot, estimator_out, phase):
    """Concatenate [proprio(45), estimator(163), phase(1)] -> (209,)."""
    e = np.asarray(estimator_out, dtype=np.float64)
    if e.shape != (ESTIMATOR_DIM,):
        raise ValueError(
            f"estimator output: expected {ESTIMATOR_DIM}, got "
            f"{e.shape[0] if e.ndim == 1 else e.shape}"
        )
    return np.concatenate([assemble_proprio(snapshot), e, [float(phase)]])


@dataclass
class ActorObsView:
    """Slices of an actor observation, one per assembled field."""

    ang_vel: np.ndarray
    gravity: np.ndarray
    command: np.ndarray
    joint_pos: np.ndarray
    joint_vel: np.ndarray
    prev_action: np.ndarray
    estimator_out: np.ndarray
    phase: float


def slice_actor_obs(obs):
    """Inverse of assemble_actor_obs: recover every field exactly."""
    obs = np.asarray(obs, dtype=np.float64)
    if obs.shape != (ACTOR_OBS_DIM,):
        raise ValueError(
            f"actor observation: expected {ACTOR_OBS_DIM}, got "
            f"{obs.shape[0] if obs.ndim == 1 else obs.shape}"
        )
    fields = []
    offset = 0
    for _attr, _name, width in PROPRIO_FIELDS:
        fields.append(obs[offset:offset + width])
        offset += width
    estimator_out = obs[offset:offset + ESTIMATOR_DIM]
    phase = float(obs[-1])
    return ActorObsView(*fields, estimator_out, phase)


def assemble_critic_obs(snapshot, phase, heightmap_shape=None):
    """Concatenate [base_lin_vel(3), proprio(45), heightmap(H*W), phase(1)].

    heightmap_shape, when given, is validated against the snapshot's
    grid; the grid is flattened row-major.
    """
    if snapshot.heightmap is None:
        raise ValueError("heightmap missing: critic observation needs the grid")
    grid = np.asarray(snapshot.heightmap, dtype=np.float64)
    if heightmap_shape is not None and grid.shape != tuple(heightmap_shape):
        raise ValueError(
            f"heightmap: expected shape {tuple(heightmap_shape)}, got {grid.shape}"
        )
    v = np.asarray(snapshot.base_lin_vel, dtype=np.float64)
    if v.shape != (3,):
        raise ValueError(f"base linear velocity: expected 3, got shape {v.shape}")
    return np.concatenate(
        [v, assemble_proprio(snapshot), grid.ravel(), [float(phase)]]
    )


def critic_obs_dim(heightmap_shape=(11, 17)):
    h, w = heightmap_shape
    return 3 + PROPRIO_DIM + h * w + 1


def _mse(pred, target, name):
    p = np.asarray(pred, dtype=np.float64)
    t = np.asarray(target, dtype=np.float64)
    if p.shape != t.shape:
        raise ValueError(
            f"{name}: prediction shape {p.shape} does not match target {t.shape}"
        )
    d = p - t
    return float(np.mean(d * d))


def estimator_loss(v_hat, v, o_next_hat, o_next, m_hat, m):
    """Sum of mean squared errors over the three estimator heads:
    velocity, next proprioceptive observation, heightmap reconstruction.
    """
    return (
        _mse(v_hat, v, "velocity head")
        + _mse(o_next_hat, o_next, "next-observation head")
        + _mse(m_hat, m, "heightmap head")
    )
