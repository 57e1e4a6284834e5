"""Terrain curriculum: weighted terrain sampling and level progression.

Terrains are sampled by normalized weight.  Each agent carries a
difficulty level in [0, num_levels); after an episode the level is
promoted when the agent traveled at least promote_frac of its commanded
distance, demoted below demote_frac, and left alone in between.  An
agent promoted off the top level re-enters at a random level
(graduation), which keeps the hardest terrains populated without
saturating every agent there.

The level maps linearly onto the terrain's difficulty parameter range
(step height for stairs, obstacle height for boxes; flat ground has no
parameter).
"""

from dataclasses import dataclass

import numpy as np

TERRAIN_KINDS = ("PyramidStairs", "InvertedStairs", "Boxes", "Plane")

DEFAULT_NUM_LEVELS = 10
# fractions of the commanded distance; defaults follow the common
# traveled-distance curriculum, tune per task
DEFAULT_PROMOTE_FRAC = 0.8
DEFAULT_DEMOTE_FRAC = 0.4


@dataclass
class TerrainSpec:
    """One terrain family: difficulty parameter range and sampling weight."""

    kind: str
    param_range: tuple = None      # (lo, hi) meters; None for Plane
    weight: float = 1.0
    num_levels: int = DEFAULT_NUM_LEVELS

    def __post_init__(self):
        if self.param_range is not None:
            lo, hi = self.param_range
            if lo > hi:
                raise ValueError(f"{self.kind}: inverted param_range {self.param_range}")
        if self.weight < 0:
            raise ValueError(f"{self.kind}: weight must be non-negative")
        if self.num_levels < 1:
            raise ValueError(f"{self.kind}: num_levels must be at least 1")


def default_terrain_specs():
    """Stairs (both orientations), boxes, and flat ground with the
    standard difficulty ranges and sampling weights."""
    return [
        TerrainSpec("PyramidStairs", (0.05, 0.23), 0.2),
        TerrainSpec("InvertedStairs", (0.05, 0.23), 0.2),
        TerrainSpec("Boxes", (0.05, 0.20), 0.2),
        TerrainSpec("Plane", None, 0.1),
    ]


def sample_terrain(rng, specs):
    """Draw one spec with probability weight / sum(weights)."""
    specs = list(specs)
    if not specs:
        raise ValueError("no terrain specs to sample from")
    weights = np.array([s.weight for s in specs], dtype=np.float64)
    total = weights.sum()
    if total <= 0:
        raise ValueError("all terrain weights are zero")
    idx = rng.choice(len(specs), p=weights / total)
    return specs[int(idx)]


def level_param(spec, level):
    """Difficulty parameter at a level: lo + (hi - lo) * level / (n - 1).

    Accepts fractional levels for interpolation queries.  Terrains
    without a parameter (Plane) return None.
    """
    if spec.param_range is None:
        return None
    if not 0 <= level <= spec.num_levels - 1:
        raise ValueError(
            f"level {level} out of range [0, {spec.num_levels - 1}]"
        )
    lo, hi = spec.param_range
    if spec.num_levels == 1:
        return lo
    return lo + (hi - lo) * level / (spec.num_levels - 1)


@dataclass
class EpisodeOutcome:
    """Result of one episode for one agent.

    terminated_early is carried for logging and future rules; the
    default progression rule uses only the distances.
    """

    agent: int
    traveled: float
    commanded: float
    terminated_early: bool = False


class CurriculumState:
    """Per-agent terrain kinds and difficulty levels.

    Updates are single-writer per agent; the aggregate mean is computed
    from the level array directly.
    """

    def __init__(self, kinds, num_levels=DEFAULT_NUM_LEVELS, levels=None,
                 rng=None, promote_frac=DEFAULT_PROMOTE_FRAC,
                 demote_frac=DEFAULT_DEMOTE_FRAC):
        self.kinds = list(kinds)
        if not self.kinds:
            raise ValueError("need at least one agent")
        if num_levels < 1:
            raise ValueError("num_levels must be at least 1")
        if not 0 <= demote_frac <= promote_frac:
            raise ValueError(
                "need 0 <= demote_frac <= promote_frac, got "
                f"{demote_frac}, {promote_frac}"
            )
        self.num_levels = int(num_levels)
        if levels is None:
            self.levels = np.zeros(len(self.kinds), dtype=np.int64)
        else:
            self.levels = np.asarray(levels, dtype=np.int64).copy()
            if self.levels.shape != (len(self.kinds),):
                raise ValueError("levels must have one entry per agent")
            if ((self.levels < 0) | (self.levels >= self.num_levels)).any():
                raise ValueError(f"levels must lie in [0, {self.num_levels})")
        self.rng = rng if rng is not None else np.random.default_rng(0)
        self.promote_frac = float(promote_frac)
        self.demote_frac = float(demote_frac)

    @property
    def num_agents(self):
        return len(self.kinds)

    @property
    def mean_level(self):
        return float(self.levels.mean())


def update_level(state, episode):
    """Apply one episode outcome; returns the agent's new level.

    With zero commanded distance the level is left unchanged: there was
    nothing to evaluate, and the literal promote rule (traveled >= 0)
    would promote every idle agent.
    """
    agent = episode.agent
    if not 0 <= agent < state.num_agents:
        raise IndexError(f"agent {agent} out of range")
    if episode.traveled < 0 or episode.commanded < 0:
        raise ValueError("distances must be non-negative")
    level = int(state.levels[agent])
    if episode.commanded == 0:
        return level
    if episode.traveled >= state.promote_frac * episode.commanded:
        if level >= state.num_levels - 1:
            # graduation: re-enter at a random level
            level = int(state.rng.integers(0, state.num_levels))
        else:
            level += 1
    elif episode.traveled < state.demote_frac * episode.commanded:
        level = max(level - 1, 0)
    state.levels[agent] = level
    return level
