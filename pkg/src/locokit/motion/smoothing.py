"""Circular Gaussian smoothing for periodic joint trajectories."""

import math

import numpy as np


def gaussian_kernel(sigma):
    """Normalized Gaussian taps with radius ceil(3 * sigma), in frames."""
    if sigma < 0:
        raise ValueError(f"sigma must be non-negative, got {sigma}")
    if sigma == 0:
        return np.array([1.0])
    radius = math.ceil(3.0 * sigma)
    x = np.arange(-radius, radius + 1, dtype=np.float64)
    k = np.exp(-0.5 * (x / sigma) ** 2)
    return k / k.sum()


def smooth_gaussian(series, sigma):
    """Convolve along axis 0 with wraparound boundary handling.

    The series is treated as one full period, so taps that run off either
    end wrap to the other.  A normalized kernel keeps the per-column mean
    unchanged up to rounding.  sigma == 0 returns a copy.
    """
    series = np.asarray(series, dtype=np.float64)
    if series.shape[0] < 1:
        raise ValueError("series must have at least 1 sample")
    if sigma == 0:
        return series.copy()
    kernel = gaussian_kernel(sigma)
    radius = (len(kernel) - 1) // 2
    n = series.shape[0]
    # (taps, n) index matrix; works even when the kernel wraps several times
    idx = (np.arange(n)[None, :] + np.arange(-radius, radius + 1)[:, None]) % n
    return np.tensordot(kernel, series[idx], axes=1)
