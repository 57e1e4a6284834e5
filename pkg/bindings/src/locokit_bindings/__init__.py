"""Batch-first bindings over the locokit core for RL training hosts.

The host operates on environment batches, so every operation here is
batched; a scalar call is the N=1 case.  Arrays cross the boundary as
plain contiguous numeric buffers.  Outputs are bitwise identical to the
corresponding scalar core calls: the bindings reuse the core's kernels
instead of reimplementing any arithmetic.

Sessions share no state.  Each BoundSession owns its generator arrays,
its reward config, and its RNG, so two sessions created with the same
seed evolve identically and stepping one never disturbs another.

The bindings are version-locked to the core: load_library and
new_session refuse to run against a locokit release they were not built
for.
"""

import math

import numpy as np

import locokit
from locokit.gait.generator import BatchGenerator
from locokit.gait.library import TemplateLibrary
from locokit.perception.randomization import sample_randomization as _draw_one
from locokit.rewards.tracking import GAIT_TERM_NAMES, gait_reward_batch
from locokit.rewards.types import RewardConfig

__version__ = "0.1.0"

# core releases these bindings are built against
COMPATIBLE_CORE = ("0.1.0",)

__all__ = [
    "BoundSession",
    "CoreVersionError",
    "batch_gait_reward",
    "batch_step",
    "load_library",
    "new_session",
    "sample_randomization",
]


class CoreVersionError(ImportError):
    """The installed locokit core does not match these bindings."""


def _require_core():
    if locokit.__version__ not in COMPATIBLE_CORE:
        raise CoreVersionError(
            f"locokit-bindings {__version__} requires locokit "
            f"{' or '.join(COMPATIBLE_CORE)}, found {locokit.__version__}"
        )


def load_library(path):
    """Load a template library directory for session construction."""
    _require_core()
    return TemplateLibrary.load(path)


def _batch(mapping, key, n, cols):
    arr = np.ascontiguousarray(mapping[key], dtype=np.float64)
    if arr.shape != (n, cols):
        raise ValueError(f"{key}: expected ({n}, {cols}), got {arr.shape}")
    return arr


class BoundSession:
    """One batch of N independent agents bound to a template library.

    Agent i's outputs depend only on agent i's state and commands; the
    library handle is shared (it is immutable), everything else is
    per-session.
    """

    def __init__(self, library, n_agents, seed=0, config=None):
        _require_core()
        self._gen = BatchGenerator(library, n_agents)
        self.n_agents = self._gen.num_agents
        self.config = config if config is not None else RewardConfig()
        self._rng = np.random.default_rng(seed)

    @property
    def phase(self):
        return self._gen.phase.copy()

    def reset(self, agent=None, phase=0.0):
        self._gen.reset(agent, phase)

    def batch_step(self, commands, dt):
        """Advance all agents one control step.

        Args:
            commands: (N, 3) rows of (v_x, v_y, w_z).
            dt: scalar or (N,) step duration, seconds.

        Returns:
            (theta_d (N, 12), delta_theta_d (N, 12), contact_left (N,),
            contact_right (N,), phase (N,)).  Row i is bitwise equal to
            an independent scalar generator stepped with row i's inputs.
        """
        theta_d, delta_d, contacts, phase = self._gen.step(commands, dt)
        return (theta_d, delta_d, contacts[:, 0].copy(),
                contacts[:, 1].copy(), phase)

    def batch_gait_reward(self, snapshots, refs):
        """Gait tracking reward for a batch of steps.

        Args:
            snapshots: mapping with arrays joint_pos (N, 12),
                base_vel (N, 3), joint_delta (N, 12), command (N, 3).
            refs: mapping with arrays theta_d (N, 12),
                delta_theta_d (N, 12).

        Returns:
            List of N maps, each {"errors": {...}, "terms": {...},
            "weighted": {...}, "total": float}, identical to the scalar
            core evaluation of that row.
        """
        n = self.n_agents
        joint_pos = _batch(snapshots, "joint_pos", n, 12)
        base_vel = _batch(snapshots, "base_vel", n, 3)
        joint_delta = _batch(snapshots, "joint_delta", n, 12)
        command = _batch(snapshots, "command", n, 3)
        ref_pos = _batch(refs, "theta_d", n, 12)
        ref_delta = _batch(refs, "delta_theta_d", n, 12)

        cmd_vel = command.copy()
        cmd_vel[:, 2] = 0.0           # yaw rate is not a linear velocity
        errors, terms, totals = gait_reward_batch(
            joint_pos, ref_pos, base_vel, cmd_vel, joint_delta, ref_delta,
            self.config,
        )
        weights = self.config.gait_weights
        out = []
        for i in range(n):
            e = dict(zip(GAIT_TERM_NAMES, (float(v) for v in errors[i])))
            r = dict(zip(GAIT_TERM_NAMES, (float(v) for v in terms[i])))
            w = {name: wt * r[name] for name, wt in zip(GAIT_TERM_NAMES, weights)}
            out.append({"errors": e, "terms": r, "weighted": w,
                        "total": float(totals[i])})
        return out

    def sample_randomization(self, n):
        """Draw n physics randomizations from the session RNG."""
        return [_draw_one(self._rng).as_dict() for _ in range(n)]


def new_session(library, n_agents, seed=0, config=None):
    """Create an independent batch session over a loaded library."""
    return BoundSession(library, n_agents, seed=seed, config=config)


def batch_step(session, commands, dt):
    return session.batch_step(commands, dt)


def batch_gait_reward(session, snapshots, refs):
    return session.batch_gait_reward(snapshots, refs)


def sample_randomization(n, seed):
    """n physics randomization draws from a fresh RNG seeded with seed."""
    _require_core()
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = np.random.default_rng(seed)
    return [_draw_one(rng).as_dict() for _ in range(n)]
