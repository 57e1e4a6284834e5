"""Tiered observation buffering and memory-budget capacity planning.

Render output is transient: a fresh frame lives on the device only long
enough to be copied out, then history accumulates in bulk host memory.
TieredBuffer models the host tier as one small ring per environment,
sized history + slack so a producer can run ahead of its consumer by the
slack without dropping unread frames.  plan_capacity answers the sizing
question for the device tier: how many parallel environments fit a
given memory budget under each residency strategy.
"""

import threading
from dataclasses import dataclass

import numpy as np

DEVICE_RESIDENT = "DeviceResident"
HOST_OFFLOAD = "HostOffload"
STRATEGIES = (DEVICE_RESIDENT, HOST_OFFLOAD)

DEFAULT_HISTORY = 2      # frames per fetched stack
DEFAULT_SLACK = 2        # extra ring capacity to absorb producer lead
DEFAULT_FRAME_SHAPE = (36, 64)


@dataclass
class FrameStack:
    """fetch_stack result: exactly `history` frames, oldest first.

    When the environment has produced fewer frames than the stack
    length, the oldest slots are zero frames and padded is True.
    """

    env_id: int
    frames: np.ndarray     # (history, rows, cols)
    steps: tuple           # step index per slot; None for padded slots
    padded: bool


class TieredBuffer:
    """Per-environment frame rings with bounded capacity.

    Contract: one producer per environment (push), any number of
    readers (fetch_stack).  A per-environment lock makes each fetch a
    consistent snapshot; environments never contend with each other.
    Step indices must be strictly increasing per environment.
    """

    def __init__(self, num_envs, frame_shape=DEFAULT_FRAME_SHAPE,
                 history=DEFAULT_HISTORY, slack=DEFAULT_SLACK):
        if num_envs < 1:
            raise ValueError("num_envs must be at least 1")
        if history < 1:
            raise ValueError("history must be at least 1")
        if slack < 0:
            raise ValueError("slack must be non-negative")
        self.num_envs = int(num_envs)
        self.frame_shape = tuple(frame_shape)
        self.history = int(history)
        self.capacity = self.history + int(slack)
        self._frames = [[] for _ in range(self.num_envs)]
        self._steps = [[] for _ in range(self.num_envs)]
        self._locks = [threading.Lock() for _ in range(self.num_envs)]
        self._retained = 0
        self._high_water = 0
        self._count_lock = threading.Lock()

    def _check_env(self, env_id):
        if not 0 <= env_id < self.num_envs:
            raise KeyError(f"unknown env id {env_id}")

    def push(self, env_id, step, frame):
        """Append a frame; evicts the oldest once the ring is full."""
        self._check_env(env_id)
        frame = np.asarray(frame)
        if frame.shape != self.frame_shape:
            raise ValueError(
                f"frame shape {frame.shape} does not match "
                f"configured {self.frame_shape}"
            )
        with self._locks[env_id]:
            steps = self._steps[env_id]
            if steps and step <= steps[-1]:
                raise ValueError(
                    f"env {env_id}: step {step} not after last step {steps[-1]}"
                )
            frames = self._frames[env_id]
            frames.append(frame.copy())
            steps.append(int(step))
            evicted = 0
            while len(frames) > self.capacity:
                frames.pop(0)
                steps.pop(0)
                evicted += 1
        with self._count_lock:
            self._retained += 1 - evicted
            if self._retained > self._high_water:
                self._high_water = self._retained

    def fetch_stack(self, env_id):
        """Latest `history` frames, oldest to newest, zero-padded in front."""
        self._check_env(env_id)
        with self._locks[env_id]:
            frames = self._frames[env_id][-self.history:]
            steps = self._steps[env_id][-self.history:]
            stack = np.zeros((self.history,) + self.frame_shape,
                             dtype=frames[0].dtype if frames else np.float32)
            missing = self.history - len(frames)
            for i, f in enumerate(frames):
                stack[missing + i] = f
        return FrameStack(
            env_id=env_id,
            frames=stack,
            steps=(None,) * missing + tuple(steps),
            padded=missing > 0,
        )

    @property
    def retained_frames(self):
        """Frames currently held across all environments."""
        with self._count_lock:
            return self._retained

    @property
    def high_water(self):
        """Maximum of retained_frames over the buffer's lifetime."""
        with self._count_lock:
            return self._high_water


@dataclass
class CapacityPlan:
    """Inputs to the environment-count planner, all in bytes."""

    budget: int
    per_env_transient: int
    per_env_resident_device: int = 0
    per_env_resident_host: int = 0
    fixed_overhead: int = 0
    strategy: str = HOST_OFFLOAD

    def __post_init__(self):
        for name in ("budget", "per_env_transient", "per_env_resident_device",
                     "per_env_resident_host", "fixed_overhead"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.strategy not in STRATEGIES:
            raise ValueError(
                f"unknown strategy {self.strategy!r}, expected one of {STRATEGIES}"
            )
        if self.budget <= self.fixed_overhead:
            raise ValueError(
                f"budget {self.budget} does not exceed fixed overhead "
                f"{self.fixed_overhead}"
            )


def plan_capacity(plan):
    """Maximum parallel environments under the device memory budget.

    DeviceResident keeps per-env history on the device, so each env
    costs transient + resident bytes.  HostOffload moves history to
    host memory (assumed unconstrained at workstation scale), so only
    the transient render buffer counts against the device budget.
    """
    available = plan.budget - plan.fixed_overhead
    if plan.strategy == DEVICE_RESIDENT:
        per_env = plan.per_env_transient + plan.per_env_resident_device
    else:
        per_env = plan.per_env_transient
    if per_env <= 0:
        raise ValueError("per-env cost must be positive to plan a capacity")
    return available // per_env
