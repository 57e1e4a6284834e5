"""Hot numeric kernels with a compiled backend and a pure fallback.

The compiled backend (locokit.kernels._native, built from Cython) is
selected at import when available; otherwise the pure numpy backend is
used.  Set LOCOKIT_PURE_KERNELS=1 to force the pure backend regardless.
Both produce bit-identical outputs; BACKEND reports which one is active.
"""

import os

from locokit.kernels import pure

if os.environ.get("LOCOKIT_PURE_KERNELS"):
    _impl = pure
    BACKEND = "pure"
else:
    try:
        from locokit.kernels import _native as _impl
        BACKEND = "native"
    except ImportError:
        _impl = pure
        BACKEND = "pure"

blend_pose_batch = _impl.blend_pose_batch
gait_errors_batch = _impl.gait_errors_batch
exp_terms_batch = _impl.exp_terms_batch

__all__ = [
    "BACKEND",
    "blend_pose_batch",
    "gait_errors_batch",
    "exp_terms_batch",
    "pure",
]
