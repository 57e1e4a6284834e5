"""Pure numpy/python backend for the hot kernels.

This module is the semantic reference for locokit.kernels._native.  Both
backends must produce bit-identical float64 outputs, so the arithmetic
contract below is strict:

* all math in float64,
* elementwise operations evaluated in the written order,
* reductions accumulated strictly left to right (no pairwise or SIMD
  reassociation),
* exponentials through the C library exp (math.exp here, exp() in C).

Because of the reduction rule, the error sums below use explicit loops
instead of numpy reductions; numpy's pairwise summation reassociates.
"""

import math

import numpy as np


def blend_pose_batch(grids, lo, hi, alpha, phi, out=None):
    """Sample and blend per-speed pose grids at given phases.

    Args:
        grids: (M, K, J) float64, per-template pose rows over one cycle.
            Row k holds the pose at phase k / K; interpolation wraps from
            row K - 1 back to row 0.
        lo, hi: (N,) integer template indices bracketing each command.
        alpha: (N,) blend factor in [0, 1] toward the hi template.
        phi: (N,) phase in [0, 1).
        out: optional (N, J) float64 output buffer.

    Returns:
        (N, J) float64: (1 - alpha) * grids[lo](phi) + alpha * grids[hi](phi)
        with wraparound linear interpolation along the phase axis.
    """
    grids = np.ascontiguousarray(grids, dtype=np.float64)
    M, K, J = grids.shape
    lo = np.asarray(lo, dtype=np.intp)
    hi = np.asarray(hi, dtype=np.intp)
    alpha = np.asarray(alpha, dtype=np.float64)
    phi = np.asarray(phi, dtype=np.float64)
    n = phi.shape[0]
    if out is None:
        out = np.empty((n, J), dtype=np.float64)

    p = phi * K
    i0f = np.floor(p)
    # phi < 1 keeps p < K, but rounding of phi * K can land exactly on K
    i0f = np.minimum(i0f, float(K - 1))
    frac = (p - i0f)[:, None]
    i0 = i0f.astype(np.intp)
    i1 = (i0 + 1) % K

    g_lo0 = grids[lo, i0]
    g_lo1 = grids[lo, i1]
    g_hi0 = grids[hi, i0]
    g_hi1 = grids[hi, i1]
    pose_lo = g_lo0 + frac * (g_lo1 - g_lo0)
    pose_hi = g_hi0 + frac * (g_hi1 - g_hi0)
    a = alpha[:, None]
    out[:] = (1.0 - a) * pose_lo + a * pose_hi
    return out


def gait_errors_batch(joint_pos, joint_ref, base_vel, cmd_vel,
                      joint_delta, joint_delta_ref, ankle_indices):
    """Per-row tracking errors for the gait reward.

    Columns of the result:
        0: sum_j (joint_pos - joint_ref)^2        whole-body posture
        1: sum_k (base_vel - cmd_vel)^2           base velocity, k over xyz
        2: sum_j |joint_delta - joint_delta_ref|  per-step joint motion
        3: sum_{j in ankle_indices} (joint_pos - joint_ref)^2

    All sums run left to right in index order.
    """
    joint_pos = np.asarray(joint_pos, dtype=np.float64)
    joint_ref = np.asarray(joint_ref, dtype=np.float64)
    base_vel = np.asarray(base_vel, dtype=np.float64)
    cmd_vel = np.asarray(cmd_vel, dtype=np.float64)
    joint_delta = np.asarray(joint_delta, dtype=np.float64)
    joint_delta_ref = np.asarray(joint_delta_ref, dtype=np.float64)
    ankle = tuple(int(j) for j in ankle_indices)

    n, J = joint_pos.shape
    e = np.empty((n, 4), dtype=np.float64)
    for i in range(n):
        acc = 0.0
        for j in range(J):
            d = joint_pos[i, j] - joint_ref[i, j]
            acc += d * d
        e[i, 0] = acc
        acc = 0.0
        for k in range(3):
            d = base_vel[i, k] - cmd_vel[i, k]
            acc += d * d
        e[i, 1] = acc
        acc = 0.0
        for j in range(J):
            acc += abs(joint_delta[i, j] - joint_delta_ref[i, j])
        e[i, 2] = acc
        acc = 0.0
        for j in ankle:
            d = joint_pos[i, j] - joint_ref[i, j]
            acc += d * d
        e[i, 3] = acc
    return e


def exp_terms_batch(errors, scales, out=None):
    """r[i, k] = exp(-(scales[k] * errors[i, k])), via libm exp."""
    errors = np.asarray(errors, dtype=np.float64)
    scales = np.asarray(scales, dtype=np.float64)
    n, m = errors.shape
    if out is None:
        out = np.empty((n, m), dtype=np.float64)
    for i in range(n):
        for k in range(m):
            out[i, k] = math.exp(-(scales[k] * errors[i, k]))
    return out
