"""Depth images: crop, train-time augmentation, and binary IO.

Images carry a validity mask alongside the range values; invalid pixels
(holes) hold value 0 in memory and NaN on disk.  The file layout is a
16-byte header (magic "DIMG", uint32 version, rows, cols, all
little-endian) followed by row-major float32 range values; see
docs/FORMATS.md for the bit-exact description.
"""

import struct
from dataclasses import dataclass

import numpy as np

from locokit.ioutil import atomic_write_bytes

DEPTH_MAGIC = b"DIMG"
DEPTH_VERSION = 1
_HEADER = struct.Struct("<4sIII")

# native render buffer and post-crop sizes
RENDER_SHAPE = (45, 80)
CROP_SHAPE = (36, 64)


@dataclass
class DepthImage:
    """Range image with validity mask; values are float32 meters."""

    values: np.ndarray
    mask: np.ndarray = None   # True where the pixel is valid

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float32)
        if self.values.ndim != 2:
            raise ValueError(f"depth image must be 2D, got {self.values.shape}")
        if self.mask is None:
            self.mask = np.ones(self.values.shape, dtype=bool)
        else:
            self.mask = np.asarray(self.mask, dtype=bool)
            if self.mask.shape != self.values.shape:
                raise ValueError(
                    f"mask shape {self.mask.shape} does not match "
                    f"values {self.values.shape}"
                )
        if (self.values[self.mask] < 0).any():
            raise ValueError("valid depth values must be non-negative")

    @property
    def shape(self):
        return self.values.shape


def center_crop(img, out_shape=CROP_SHAPE):
    """Copy the centered out_shape window; offsets are floor((in-out)/2).

    With the default 45x80 render buffer this keeps rows 4..40 and
    columns 8..72.  Values are copied exactly, mask included.
    """
    rows, cols = img.shape
    out_rows, out_cols = out_shape
    if rows < out_rows or cols < out_cols:
        raise ValueError(
            f"cannot crop {out_shape} out of smaller image {img.shape}"
        )
    r0 = (rows - out_rows) // 2
    c0 = (cols - out_cols) // 2
    return DepthImage(
        values=img.values[r0:r0 + out_rows, c0:c0 + out_cols].copy(),
        mask=img.mask[r0:r0 + out_rows, c0:c0 + out_cols].copy(),
    )


@dataclass
class DepthAugmentParams:
    """Stochastic perturbation parameters.

    bias_range is drawn once per image; noise_std applies per pixel;
    hole_prob independently invalidates each pixel.
    """

    bias_range: tuple = (-0.04, 0.04)   # m
    noise_std: float = 0.02             # m
    hole_prob: float = 0.03

    def __post_init__(self):
        lo, hi = self.bias_range
        if lo > hi:
            raise ValueError(f"bias range is inverted: {self.bias_range}")
        if self.noise_std < 0:
            raise ValueError(f"noise std must be non-negative: {self.noise_std}")
        if not 0.0 <= self.hole_prob <= 1.0:
            raise ValueError(f"hole probability outside [0, 1]: {self.hole_prob}")


def augment_depth(img, rng, params=None):
    """Per-image bias + per-pixel Gaussian noise + random holes.

    Draw order is fixed (bias, noise field, hole field) so outputs are
    reproducible for a given rng state.  Results are clamped at 0;
    holes and previously invalid pixels end masked with value 0.
    """
    if params is None:
        params = DepthAugmentParams()
    lo, hi = params.bias_range
    bias = rng.uniform(lo, hi)
    noise = rng.normal(0.0, params.noise_std, size=img.shape)
    holes = rng.random(img.shape) < params.hole_prob

    out = img.values.astype(np.float64) + bias + noise
    np.maximum(out, 0.0, out=out)
    mask = img.mask & ~holes
    out[~mask] = 0.0
    return DepthImage(values=out.astype(np.float32), mask=mask)


def write_depth(img, path):
    """Write header + row-major float32 values; invalid pixels as NaN."""
    values = img.values.astype(np.float32).copy()
    values[~img.mask] = np.nan
    rows, cols = img.shape
    payload = _HEADER.pack(DEPTH_MAGIC, DEPTH_VERSION, rows, cols)
    payload += values.astype("<f4").tobytes(order="C")
    atomic_write_bytes(path, payload)


def read_depth(path):
    """Inverse of write_depth; NaN pixels come back masked with value 0."""
    with open(path, "rb") as fh:
        header = fh.read(_HEADER.size)
        if len(header) != _HEADER.size:
            raise ValueError(f"{path}: truncated header")
        magic, version, rows, cols = _HEADER.unpack(header)
        if magic != DEPTH_MAGIC:
            raise ValueError(f"{path}: bad magic {magic!r}")
        if version != DEPTH_VERSION:
            raise ValueError(f"{path}: unsupported version {version}")
        payload = fh.read(rows * cols * 4)
    if len(payload) != rows * cols * 4:
        raise ValueError(f"{path}: truncated pixel data")
    values = np.frombuffer(payload, dtype="<f4").reshape(rows, cols).copy()
    mask = ~np.isnan(values)
    values[~mask] = 0.0
    return DepthImage(values=values.astype(np.float32), mask=mask)
