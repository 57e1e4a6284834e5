"""Phase-normalized gait templates.

A template condenses one gait cycle into a K-row pose grid indexed by
phase k / K, plus per-foot stance statistics.  Templates are the unit the
gait generator blends between, keyed by nominal forward speed.
"""

import json
import warnings
from dataclasses import dataclass, field

import numpy as np

from locokit.ioutil import atomic_write_text
from locokit.robot import FEET, NUM_JOINTS

TEMPLATE_SCHEMA = "gait-template/1"

MIN_PHASE_SAMPLES = 8
DEFAULT_PHASE_SAMPLES = 100
# max per-joint position gap between cycle end and start, radians
DEFAULT_WRAP_TOLERANCE = 0.05


class NonPeriodicCycleError(ValueError):
    """Raised when a cycle's endpoints disagree beyond the wrap tolerance."""


@dataclass
class GaitTemplate:
    """One gait cycle resampled onto a fixed phase grid.

    theta_grid[k] is the pose at phase k / K; evaluation between rows is
    linear with wraparound from row K - 1 to row 0.  stance_window maps
    the (single, contiguous) contact interval of each foot to phase as
    [phi_on, phi_off); phi_off < phi_on means the window wraps past 1.
    """

    nominal_speed: float
    period: float
    theta_grid: np.ndarray                 # (K, 12)
    stance_ratio: dict                     # foot -> fraction of cycle in contact
    stance_window: dict                    # foot -> (phi_on, phi_off)
    joint_names: list = field(default_factory=lambda: [])
    source: str = ""

    def __post_init__(self):
        self.theta_grid = np.asarray(self.theta_grid, dtype=np.float64)
        if self.theta_grid.ndim != 2 or self.theta_grid.shape[1] != NUM_JOINTS:
            raise ValueError(
                f"theta_grid must be (K, {NUM_JOINTS}), got {self.theta_grid.shape}"
            )
        if self.num_phase_samples < MIN_PHASE_SAMPLES:
            raise ValueError(
                f"need at least {MIN_PHASE_SAMPLES} phase samples, "
                f"got {self.num_phase_samples}"
            )
        if not np.isfinite(self.theta_grid).all():
            raise ValueError("theta_grid contains non-finite values")
        if not (self.period > 0.0):
            raise ValueError(f"period must be positive, got {self.period}")
        for foot, rho in self.stance_ratio.items():
            if not 0.0 <= rho <= 1.0:
                raise ValueError(f"stance_ratio[{foot}] = {rho} outside [0, 1]")

    @property
    def num_phase_samples(self):
        return self.theta_grid.shape[0]

    @property
    def theta_delta_grid(self):
        """Per-phase-step pose deltas: row k is grid[(k+1) mod K] - grid[k]."""
        return np.roll(self.theta_grid, -1, axis=0) - self.theta_grid

    def window_start_length(self, foot):
        """Stance window as (phi_start, phase_length), handling wrap."""
        on, off = self.stance_window[foot]
        length = (off - on) % 1.0
        return on, length


def _interp_rows(series, positions):
    # linear interpolation along axis 0 with wraparound, positions in frames
    n = series.shape[0]
    i0 = np.floor(positions).astype(np.intp)
    frac = (positions - i0)[:, None]
    i0 = np.minimum(i0, n - 1)
    i1 = (i0 + 1) % n
    return series[i0] + frac * (series[i1] - series[i0])


def _longest_contact_run(mask):
    """Longest circular run of True; returns (start, length).

    Raises if the mask is constant or the contact is fragmented into more
    than one run: a multi-interval stance has no well-defined
    [phi_on, phi_off) and signals a segmentation problem upstream.
    """
    n = len(mask)
    total = int(mask.sum())
    if total == 0 or total == n:
        raise ValueError("constant contact state")
    prev = np.roll(mask, 1)
    starts = np.flatnonzero(mask & ~prev)
    runs = []
    for s in starts:
        length = 0
        while length < n and mask[(s + length) % n]:
            length += 1
        runs.append((int(s), length))
    best = max(runs, key=lambda r: r[1])
    if best[1] != total:
        raise ValueError(
            f"fragmented contact: {len(runs)} separate intervals "
            f"({total} contact frames, longest run {best[1]})"
        )
    return best


def resample_phase(cycle, phase_samples=DEFAULT_PHASE_SAMPLES,
                   contact_threshold=0.01,
                   wrap_tolerance=DEFAULT_WRAP_TOLERANCE,
                   on_nonperiodic="raise"):
    """Resample a clip cycle onto a K-row phase grid.

    theta_grid[k] interpolates the cycle's joints at normalized time
    k / K, i.e. frame position k * F / K, wrapping from the last frame
    back to the first.  Stance statistics come from thresholding the
    per-foot contact range at contact_threshold.

    A cycle whose end pose differs from its start pose by more than
    wrap_tolerance (per joint) is not periodic; on_nonperiodic chooses
    between "raise" (reject) and "warn" (keep going).
    """
    K = int(phase_samples)
    if K < MIN_PHASE_SAMPLES:
        raise ValueError(f"phase_samples must be >= {MIN_PHASE_SAMPLES}, got {K}")
    theta = np.asarray(cycle.theta, dtype=np.float64)
    F = theta.shape[0]

    gap = float(np.max(np.abs(theta[F - 1] - theta[0])))
    if gap > wrap_tolerance:
        msg = (
            f"non-periodic cycle: endpoint gap {gap:.4f} rad exceeds "
            f"tolerance {wrap_tolerance} (source {cycle.source!r})"
        )
        if on_nonperiodic == "warn":
            warnings.warn(msg)
        else:
            raise NonPeriodicCycleError(msg)

    positions = np.arange(K, dtype=np.float64) * F / K
    grid = _interp_rows(theta, positions)

    # seam continuity: the wrap step may be one interpolation step of
    # motion on top of the allowed endpoint mismatch, but no more
    seam = float(np.max(np.abs(grid[K - 1] - grid[0])))
    steps = np.abs(grid[1:] - grid[:-1]).max(axis=1)
    allowance = wrap_tolerance + (float(steps.max()) if len(steps) else 0.0)
    if seam > allowance:
        msg = (
            f"non-periodic cycle: grid seam gap {seam:.4f} rad exceeds "
            f"allowance {allowance:.4f} (source {cycle.source!r})"
        )
        if on_nonperiodic == "warn":
            warnings.warn(msg)
        else:
            raise NonPeriodicCycleError(msg)

    stance_ratio = {}
    stance_window = {}
    for foot in FEET:
        mask = cycle.contact[foot].sigma >= contact_threshold
        stance_ratio[foot] = float(mask.sum()) / F
        try:
            start, length = _longest_contact_run(mask)
        except ValueError as exc:
            raise ValueError(f"foot '{foot}': {exc}") from exc
        phi_on = start / F
        phi_off = ((start + length) % F) / F
        stance_window[foot] = (phi_on, phi_off)

    return GaitTemplate(
        nominal_speed=abs(float(cycle.nominal_velocity[0])),
        period=cycle.period,
        theta_grid=grid,
        stance_ratio=stance_ratio,
        stance_window=stance_window,
        joint_names=list(cycle.joint_names),
        source=cycle.source,
    )


def save_template(template, path):
    doc = {
        "schema": TEMPLATE_SCHEMA,
        "nominal_speed": template.nominal_speed,
        "period": template.period,
        "phase_samples": template.num_phase_samples,
        "joint_names": list(template.joint_names),
        "theta_grid": template.theta_grid.tolist(),
        "stance_ratio": dict(template.stance_ratio),
        "stance_window": {f: list(w) for f, w in template.stance_window.items()},
        "source": template.source,
    }
    atomic_write_text(path, json.dumps(doc))


def load_template(path):
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    schema = doc.get("schema")
    if schema != TEMPLATE_SCHEMA:
        raise ValueError(
            f"{path}: unsupported schema {schema!r}, expected {TEMPLATE_SCHEMA!r}"
        )
    return GaitTemplate(
        nominal_speed=float(doc["nominal_speed"]),
        period=float(doc["period"]),
        theta_grid=np.asarray(doc["theta_grid"], dtype=np.float64),
        stance_ratio={f: float(r) for f, r in doc["stance_ratio"].items()},
        stance_window={f: tuple(w) for f, w in doc["stance_window"].items()},
        joint_names=list(doc["joint_names"]),
        source=str(doc.get("source", "")),
    )
