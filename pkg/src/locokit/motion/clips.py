"""Raw motion clips: file IO, validation, contact detection, cycle segmentation.

A raw clip is a fixed-rate recording of a legged motion: joint positions
and velocities, base velocities, and per-foot contact tracks.  The contact
track stores a planar contact center (mu) and a contact range (sigma) per
frame; a foot counts as in contact on frames where sigma is at least the
contact range threshold.

Gait cycles are delimited by touchdowns of a reference foot: a cycle is
the half-open frame span [touchdown_i, touchdown_{i+1}).

On-disk format is a single JSON document per clip; see docs/FORMATS.md.
"""

import json
from dataclasses import dataclass, field

import numpy as np

from locokit.ioutil import atomic_write_text
from locokit.robot import FEET, JOINT_NAMES, NUM_JOINTS

# contact range at or above this many meters counts as foot contact
DEFAULT_CONTACT_THRESHOLD = 0.01

CLIP_SCHEMA = "gait-clip/1"


class ClipFormatError(ValueError):
    """Raised when a clip document violates the format contract."""


class InsufficientCyclesError(ValueError):
    """Raised when a clip has too few touchdowns to delimit a cycle."""


@dataclass
class FootContactTrack:
    """Per-frame contact description for one foot."""

    mu: np.ndarray      # (frames, 2) contact center in the foot frame
    sigma: np.ndarray   # (frames,) contact range, meters

    def __post_init__(self):
        self.mu = np.asarray(self.mu, dtype=np.float64)
        self.sigma = np.asarray(self.sigma, dtype=np.float64)


@dataclass
class RawClip:
    """A validated fixed-rate motion recording.

    All per-frame arrays share the same frame count.  Frame rate is
    1 / dt; nominal_velocity is the commanded (vx, vy, wz) the clip was
    recorded at.
    """

    name: str
    dt: float
    nominal_velocity: np.ndarray          # (3,)
    joint_names: list
    theta: np.ndarray                     # (frames, 12) joint positions
    theta_dot: np.ndarray                 # (frames, 12) joint velocities
    base_lin_vel: np.ndarray              # (frames, 3)
    base_ang_vel: np.ndarray              # (frames, 3)
    contact: dict = field(default_factory=dict)  # foot name -> FootContactTrack

    def __post_init__(self):
        if self.joint_names is None:
            self.joint_names = list(JOINT_NAMES)
        self.nominal_velocity = np.asarray(self.nominal_velocity, dtype=np.float64)
        self.theta = np.asarray(self.theta, dtype=np.float64)
        self.theta_dot = np.asarray(self.theta_dot, dtype=np.float64)
        self.base_lin_vel = np.asarray(self.base_lin_vel, dtype=np.float64)
        self.base_ang_vel = np.asarray(self.base_ang_vel, dtype=np.float64)
        self.validate()

    @property
    def num_frames(self):
        return self.theta.shape[0]

    def validate(self):
        if not (self.dt > 0.0):
            raise ClipFormatError(f"dt must be positive, got {self.dt}")
        if self.nominal_velocity.shape != (3,):
            raise ClipFormatError(
                f"nominal_velocity: expected 3 entries, got {self.nominal_velocity.shape}"
            )
        njoints = len(self.joint_names)
        if njoints != NUM_JOINTS:
            raise ClipFormatError(f"expected {NUM_JOINTS} joints, got {njoints}")
        if self.theta.ndim != 2 or self.theta.shape[1] != NUM_JOINTS:
            raise ClipFormatError(
                f"expected {NUM_JOINTS} joints, got theta shape {self.theta.shape}"
            )
        frames = self.theta.shape[0]
        if frames < 2:
            raise ClipFormatError(f"clip needs at least 2 frames, got {frames}")
        for fname, arr, width in (
            ("theta_dot", self.theta_dot, NUM_JOINTS),
            ("base_lin_vel", self.base_lin_vel, 3),
            ("base_ang_vel", self.base_ang_vel, 3),
        ):
            if arr.ndim != 2 or arr.shape[1] != width:
                raise ClipFormatError(
                    f"{fname}: expected width {width}, got shape {arr.shape}"
                )
            if arr.shape[0] != frames:
                raise ClipFormatError(
                    f"frame count mismatch: {fname} has {arr.shape[0]} frames, "
                    f"expected {frames}"
                )
        for foot in FEET:
            if foot not in self.contact:
                raise ClipFormatError(f"missing contact track for foot '{foot}'")
            track = self.contact[foot]
            if track.mu.ndim != 2 or track.mu.shape[1] != 2:
                raise ClipFormatError(
                    f"contact[{foot}].mu: expected (frames, 2), got {track.mu.shape}"
                )
            if track.mu.shape[0] != frames:
                raise ClipFormatError(
                    f"frame count mismatch: contact[{foot}].mu has "
                    f"{track.mu.shape[0]} frames, expected {frames}"
                )
            if track.sigma.shape != (frames,):
                raise ClipFormatError(
                    f"frame count mismatch: contact[{foot}].sigma has "
                    f"{track.sigma.shape[0] if track.sigma.ndim else 0} frames, "
                    f"expected {frames}"
                )
        for fname, arr in (
            ("theta", self.theta),
            ("theta_dot", self.theta_dot),
            ("base_lin_vel", self.base_lin_vel),
            ("base_ang_vel", self.base_ang_vel),
        ):
            if not np.isfinite(arr).all():
                raise ClipFormatError(f"{fname} contains non-finite values")


def load_raw_clip(path):
    """Load and validate a clip JSON document."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ClipFormatError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise ClipFormatError(f"{path}: clip document must be a JSON object")
    schema = doc.get("schema")
    if schema != CLIP_SCHEMA:
        raise ClipFormatError(
            f"{path}: unsupported schema {schema!r}, expected {CLIP_SCHEMA!r}"
        )
    required = (
        "name", "dt", "nominal_velocity", "joint_names",
        "theta", "theta_dot", "base_lin_vel", "base_ang_vel", "contact",
    )
    for key in required:
        if key not in doc:
            raise ClipFormatError(f"{path}: missing field '{key}'")
    contact = {}
    for foot, track in doc["contact"].items():
        if "mu" not in track or "sigma" not in track:
            raise ClipFormatError(
                f"{path}: contact[{foot}] needs 'mu' and 'sigma'"
            )
        contact[foot] = FootContactTrack(
            mu=np.asarray(track["mu"], dtype=np.float64),
            sigma=np.asarray(track["sigma"], dtype=np.float64),
        )
    try:
        return RawClip(
            name=str(doc["name"]),
            dt=float(doc["dt"]),
            nominal_velocity=np.asarray(doc["nominal_velocity"], dtype=np.float64),
            joint_names=list(doc["joint_names"]),
            theta=np.asarray(doc["theta"], dtype=np.float64),
            theta_dot=np.asarray(doc["theta_dot"], dtype=np.float64),
            base_lin_vel=np.asarray(doc["base_lin_vel"], dtype=np.float64),
            base_ang_vel=np.asarray(doc["base_ang_vel"], dtype=np.float64),
            contact=contact,
        )
    except ClipFormatError as exc:
        raise ClipFormatError(f"{path}: {exc}") from exc


def save_raw_clip(clip, path):
    """Write a clip back out as JSON (lossless float round trip)."""
    doc = {
        "schema": CLIP_SCHEMA,
        "name": clip.name,
        "dt": clip.dt,
        "nominal_velocity": clip.nominal_velocity.tolist(),
        "joint_names": list(clip.joint_names),
        "theta": clip.theta.tolist(),
        "theta_dot": clip.theta_dot.tolist(),
        "base_lin_vel": clip.base_lin_vel.tolist(),
        "base_ang_vel": clip.base_ang_vel.tolist(),
        "contact": {
            foot: {"mu": t.mu.tolist(), "sigma": t.sigma.tolist()}
            for foot, t in clip.contact.items()
        },
    }
    atomic_write_text(path, json.dumps(doc))


@dataclass
class ContactTimeline:
    """Boolean contact states and contact-change frames per foot.

    A touchdown is the rising edge (frame f is in contact, f-1 is not);
    a liftoff is the falling edge.  Frame 0 is never an edge: the state
    before the clip is unknown.
    """

    contact: dict       # foot -> (frames,) bool
    touchdowns: dict    # foot -> int frame indices, ascending
    liftoffs: dict


def detect_contacts(clip, threshold=DEFAULT_CONTACT_THRESHOLD):
    """Threshold the contact range into boolean states and find the edges."""
    contact = {}
    touchdowns = {}
    liftoffs = {}
    for foot, track in clip.contact.items():
        state = track.sigma >= threshold
        rising = state[1:] & ~state[:-1]
        falling = ~state[1:] & state[:-1]
        contact[foot] = state
        touchdowns[foot] = np.flatnonzero(rising) + 1
        liftoffs[foot] = np.flatnonzero(falling) + 1
    return ContactTimeline(contact=contact, touchdowns=touchdowns, liftoffs=liftoffs)


def segment_cycles(timeline, reference_foot="left"):
    """Split a clip into gait cycles on reference-foot touchdowns.

    Returns a list of half-open frame spans [start, end), one per full
    cycle.  Consecutive spans share their boundary frame, so together
    they partition the region between the first and last touchdown.
    """
    if reference_foot not in timeline.touchdowns:
        raise KeyError(f"unknown reference foot '{reference_foot}'")
    tds = timeline.touchdowns[reference_foot]
    if len(tds) < 2:
        raise InsufficientCyclesError(
            f"insufficient cycles: need at least 2 touchdowns of the "
            f"'{reference_foot}' foot, found {len(tds)}"
        )
    return [(int(tds[i]), int(tds[i + 1])) for i in range(len(tds) - 1)]


@dataclass
class ClipCycle:
    """One gait cycle cut out of a raw clip.

    Arrays cover the half-open span [start, end); the cycle duration is
    (end - start) * dt.  Clip metadata (dt, joint names, nominal
    velocity) is carried along for downstream template construction.
    """

    source: str
    span: tuple
    dt: float
    nominal_velocity: np.ndarray
    joint_names: list
    theta: np.ndarray
    theta_dot: np.ndarray
    base_lin_vel: np.ndarray
    base_ang_vel: np.ndarray
    contact: dict   # foot -> FootContactTrack over the span

    @property
    def num_frames(self):
        return self.theta.shape[0]

    @property
    def period(self):
        return (self.span[1] - self.span[0]) * self.dt


def extract_cycle(clip, spans, clip_range):
    """Pick one cycle from a clip by index into the segmented spans.

    clip_range is a 0-based index: with spans [A, B, C], clip_range=1
    selects the second cycle, B.
    """
    n = len(spans)
    if not 0 <= clip_range < n:
        raise ValueError(
            f"clip_range {clip_range} out of range: clip has {n} cycle(s)"
        )
    start, end = spans[clip_range]
    return ClipCycle(
        source=clip.name,
        span=(start, end),
        dt=clip.dt,
        nominal_velocity=clip.nominal_velocity.copy(),
        joint_names=list(clip.joint_names),
        theta=clip.theta[start:end].copy(),
        theta_dot=clip.theta_dot[start:end].copy(),
        base_lin_vel=clip.base_lin_vel[start:end].copy(),
        base_ang_vel=clip.base_ang_vel[start:end].copy(),
        contact={
            foot: FootContactTrack(
                mu=t.mu[start:end].copy(), sigma=t.sigma[start:end].copy()
            )
            for foot, t in clip.contact.items()
        },
    )
