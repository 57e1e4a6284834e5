# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the hot kernels.

Must stay bit-identical to locokit.kernels.pure; see that module for the
arithmetic contract.  Compiled with -ffp-contract=off so no fused
multiply-adds creep in.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, fabs, floor

cnp.import_array()


def blend_pose_batch(grids, lo, hi, alpha, phi, out=None):
    """See locokit.kernels.pure.blend_pose_batch."""
    cdef cnp.ndarray[cnp.float64_t, ndim=3, mode="c"] g = \
        np.ascontiguousarray(grids, dtype=np.float64)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] lo_a = \
        np.ascontiguousarray(lo, dtype=np.intp)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] hi_a = \
        np.ascontiguousarray(hi, dtype=np.intp)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] a_a = \
        np.ascontiguousarray(alpha, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] phi_a = \
        np.ascontiguousarray(phi, dtype=np.float64)

    cdef Py_ssize_t K = g.shape[1]
    cdef Py_ssize_t J = g.shape[2]
    cdef Py_ssize_t n = phi_a.shape[0]
    if out is None:
        out = np.empty((n, J), dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] o = out

    cdef Py_ssize_t i, j, i0, i1, tl, tu
    cdef double p, i0f, frac, a, gl0, gl1, gu0, gu1, pose_lo, pose_hi
    for i in range(n):
        p = phi_a[i] * K
        i0f = floor(p)
        if i0f > K - 1:
            i0f = K - 1
        frac = p - i0f
        i0 = <Py_ssize_t>i0f
        i1 = (i0 + 1) % K
        tl = lo_a[i]
        tu = hi_a[i]
        a = a_a[i]
        for j in range(J):
            gl0 = g[tl, i0, j]
            gl1 = g[tl, i1, j]
            gu0 = g[tu, i0, j]
            gu1 = g[tu, i1, j]
            pose_lo = gl0 + frac * (gl1 - gl0)
            pose_hi = gu0 + frac * (gu1 - gu0)
            o[i, j] = (1.0 - a) * pose_lo + a * pose_hi
    return out


def gait_errors_batch(joint_pos, joint_ref, base_vel, cmd_vel,
                      joint_delta, joint_delta_ref, ankle_indices):
    """See locokit.kernels.pure.gait_errors_batch."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] q = \
        np.ascontiguousarray(joint_pos, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] qr = \
        np.ascontiguousarray(joint_ref, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] v = \
        np.ascontiguousarray(base_vel, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] vc = \
        np.ascontiguousarray(cmd_vel, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] dq = \
        np.ascontiguousarray(joint_delta, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] dqr = \
        np.ascontiguousarray(joint_delta_ref, dtype=np.float64)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] ank = \
        np.ascontiguousarray(ankle_indices, dtype=np.intp)

    cdef Py_ssize_t n = q.shape[0]
    cdef Py_ssize_t J = q.shape[1]
    cdef Py_ssize_t na = ank.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] e = \
        np.empty((n, 4), dtype=np.float64)

    cdef Py_ssize_t i, j, k
    cdef double acc, d
    for i in range(n):
        acc = 0.0
        for j in range(J):
            d = q[i, j] - qr[i, j]
            acc += d * d
        e[i, 0] = acc
        acc = 0.0
        for k in range(3):
            d = v[i, k] - vc[i, k]
            acc += d * d
        e[i, 1] = acc
        acc = 0.0
        for j in range(J):
            acc += fabs(dq[i, j] - dqr[i, j])
        e[i, 2] = acc
        acc = 0.0
        for k in range(na):
            d = q[i, ank[k]] - qr[i, ank[k]]
            acc += d * d
        e[i, 3] = acc
    return e


def exp_terms_batch(errors, scales, out=None):
    """See locokit.kernels.pure.exp_terms_batch."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] e = \
        np.ascontiguousarray(errors, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] s = \
        np.ascontiguousarray(scales, dtype=np.float64)
    cdef Py_ssize_t n = e.shape[0]
    cdef Py_ssize_t m = e.shape[1]
    if out is None:
        out = np.empty((n, m), dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] o = out

    cdef Py_ssize_t i, k
    for i in range(n):
        for k in range(m):
            o[i, k] = exp(-(s[k] * e[i, k]))
    return out
