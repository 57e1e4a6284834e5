"""Template libraries: ordered gait templates plus standing configuration.

A library is the immutable lookup structure the generator blends from.
On disk it is a directory of template documents plus a manifest listing
nominal speeds in ascending order; see docs/FORMATS.md.
"""

import json
import os

import numpy as np

from locokit.ioutil import atomic_write_text
from locokit.motion.templates import load_template, save_template
from locokit.robot import FEET, NUM_JOINTS

MANIFEST_SCHEMA = "gait-template-library/1"
MANIFEST_NAME = "manifest.json"

DEFAULT_STANDING_THRESHOLD = 0.1   # m/s, planar speed at or below which to stand
DEFAULT_YAW_THRESHOLD = 0.1        # rad/s
DEFAULT_HYSTERESIS = 0.02          # width of the stay-standing band
DEFAULT_EPSILON = 1e-8             # interpolation stabilizer


class TemplateLibrary:
    """Gait templates sorted by ascending nominal speed, plus a stand pose.

    Immutable after construction; safe to share across concurrent
    generators.  All templates must use the same phase sample count so
    their grids stack into one (M, K, 12) array for the blend kernels.
    """

    def __init__(self, templates, stand_pose,
                 standing_threshold=DEFAULT_STANDING_THRESHOLD,
                 yaw_threshold=DEFAULT_YAW_THRESHOLD,
                 hysteresis=DEFAULT_HYSTERESIS,
                 epsilon=DEFAULT_EPSILON):
        templates = list(templates)
        if not templates:
            raise ValueError("library needs at least one template")
        speeds = [t.nominal_speed for t in templates]
        for a, b in zip(speeds, speeds[1:]):
            if not a < b:
                raise ValueError(
                    f"template speeds must be strictly increasing, got {speeds}"
                )
        ks = {t.num_phase_samples for t in templates}
        if len(ks) != 1:
            raise ValueError(
                f"all templates must share one phase sample count, got {sorted(ks)}"
            )
        stand_pose = np.asarray(stand_pose, dtype=np.float64)
        if stand_pose.shape != (NUM_JOINTS,):
            raise ValueError(
                f"stand_pose must have {NUM_JOINTS} entries, got {stand_pose.shape}"
            )
        if not np.isfinite(stand_pose).all():
            raise ValueError("stand_pose contains non-finite values")

        self.templates = templates
        self.stand_pose = stand_pose
        self.standing_threshold = float(standing_threshold)
        self.yaw_threshold = float(yaw_threshold)
        self.hysteresis = float(hysteresis)
        self.epsilon = float(epsilon)

        # stacked views consumed by the blend kernels
        self._speeds = np.array(speeds, dtype=np.float64)
        self._periods = np.array([t.period for t in templates], dtype=np.float64)
        self._grids = np.ascontiguousarray(
            np.stack([t.theta_grid for t in templates]), dtype=np.float64
        )
        self._win_on = np.array(
            [[t.stance_window[f][0] for f in FEET] for t in templates],
            dtype=np.float64,
        )
        self._win_off = np.array(
            [[t.stance_window[f][1] for f in FEET] for t in templates],
            dtype=np.float64,
        )

    @property
    def num_templates(self):
        return len(self.templates)

    @property
    def speeds(self):
        return self._speeds.copy()

    def save(self, directory):
        os.makedirs(directory, exist_ok=True)
        files = []
        for i, t in enumerate(self.templates):
            fname = f"template_{i:02d}.json"
            save_template(t, os.path.join(directory, fname))
            files.append(fname)
        manifest = {
            "schema": MANIFEST_SCHEMA,
            "speeds": [t.nominal_speed for t in self.templates],
            "files": files,
            "stand_pose": self.stand_pose.tolist(),
            "standing_threshold": self.standing_threshold,
            "yaw_threshold": self.yaw_threshold,
            "hysteresis": self.hysteresis,
            "epsilon": self.epsilon,
        }
        atomic_write_text(
            os.path.join(directory, MANIFEST_NAME), json.dumps(manifest, indent=1)
        )

    @classmethod
    def load(cls, directory):
        path = os.path.join(directory, MANIFEST_NAME)
        with open(path, "r", encoding="utf-8") as fh:
            manifest = json.load(fh)
        schema = manifest.get("schema")
        if schema != MANIFEST_SCHEMA:
            raise ValueError(
                f"{path}: unsupported schema {schema!r}, expected {MANIFEST_SCHEMA!r}"
            )
        speeds = manifest["speeds"]
        files = manifest["files"]
        if len(speeds) != len(files):
            raise ValueError(f"{path}: speeds and files differ in length")
        templates = []
        for speed, fname in zip(speeds, files):
            t = load_template(os.path.join(directory, fname))
            if t.nominal_speed != speed:
                raise ValueError(
                    f"{fname}: template speed {t.nominal_speed} does not match "
                    f"manifest entry {speed}"
                )
            templates.append(t)
        return cls(
            templates,
            stand_pose=np.asarray(manifest["stand_pose"], dtype=np.float64),
            standing_threshold=float(
                manifest.get("standing_threshold", DEFAULT_STANDING_THRESHOLD)
            ),
            yaw_threshold=float(manifest.get("yaw_threshold", DEFAULT_YAW_THRESHOLD)),
            hysteresis=float(manifest.get("hysteresis", DEFAULT_HYSTERESIS)),
            epsilon=float(manifest.get("epsilon", DEFAULT_EPSILON)),
        )
