"""Batch sign kernels for brute-force scans over integer point sets.

A functional with radical entries is stored as an int64 array
``coef[level, i, j]`` (entry ``i``, basis element ``j``, denominators
cleared per level).  For an integer point ``w`` the value at a level is
``sum_j c_j sqrt(d_j)`` with ``c = w @ coef[level]``; the kernel brackets it
between integer bounds built from ``isqrt(d_j * 4**BITS)``.  A point whose
bracket straddles zero is reported as undecided (code 2) and must be settled
by the exact scalar path; decided signs are certified.

``ORDLAB_KERNEL=numpy`` forces the pure-numpy path; otherwise numba is used
when importable.
"""

from __future__ import annotations

import os
from math import isqrt

import numpy as np

BITS = 24
UNDECIDED = 2
_LIMIT = 1 << 62

try:  # pragma: no cover - exercised by whichever backend is installed
    import numba
except ImportError:  # pragma: no cover
    numba = None


def backend() -> str:
    choice = os.environ.get("ORDLAB_KERNEL", "").strip().lower()
    if choice == "numpy" or numba is None:
        return "numpy"
    return "numba"


def sqrt_table(radicands) -> tuple[np.ndarray, np.ndarray]:
    sq = [1 << BITS] + [isqrt(d << (2 * BITS)) for d in radicands]
    err = [0] + [1] * len(radicands)
    return np.array(sq, dtype=np.int64), np.array(err, dtype=np.int64)


def fits_int64(coef: np.ndarray, points: np.ndarray, sq: np.ndarray) -> bool:
    if points.size == 0 or coef.size == 0:
        return True
    cmax = int(np.abs(coef).sum(axis=1).max()) * int(np.abs(points).max())
    return cmax * (int(sq.max()) + 1) * coef.shape[2] < _LIMIT


def _classify_numpy(coef, sq, err, points):
    npts = points.shape[0]
    sign = np.zeros(npts, dtype=np.int8)
    level = np.full(npts, -1, dtype=np.int64)
    open_ = np.ones(npts, dtype=bool)
    for lv in range(coef.shape[0]):
        idx = np.nonzero(open_)[0]
        if idx.size == 0:
            break
        c = points[idx] @ coef[lv]
        nonzero = np.any(c != 0, axis=1)
        center = c @ sq
        lo = center + np.minimum(c, 0) @ err
        hi = center + np.maximum(c, 0) @ err
        s = np.where(lo > 0, 1, np.where(hi < 0, -1, UNDECIDED)).astype(np.int8)
        hit = idx[nonzero]
        sign[hit] = s[nonzero]
        level[hit] = lv
        open_[hit] = False
    return sign, level


if numba is not None:

    @numba.njit(cache=True)
    def _classify_numba(coef, sq, err, points):  # pragma: no cover - compiled
        npts = points.shape[0]
        nlev, n, nb = coef.shape
        sign = np.zeros(npts, dtype=np.int8)
        level = np.full(npts, -1, dtype=np.int64)
        c = np.zeros(nb, dtype=np.int64)
        for p in range(npts):
            for lv in range(nlev):
                nz = False
                for j in range(nb):
                    acc = 0
                    for i in range(n):
                        acc += points[p, i] * coef[lv, i, j]
                    c[j] = acc
                    if acc != 0:
                        nz = True
                if not nz:
                    continue
                lo = 0
                hi = 0
                for j in range(nb):
                    t = c[j] * sq[j]
                    lo += t
                    hi += t
                    if c[j] < 0:
                        lo += c[j] * err[j]
                    else:
                        hi += c[j] * err[j]
                if lo > 0:
                    sign[p] = 1
                elif hi < 0:
                    sign[p] = -1
                else:
                    sign[p] = 2
                level[p] = lv
                break
        return sign, level

else:  # pragma: no cover
    _classify_numba = None


def classify_points(coef: np.ndarray, radicands, points: np.ndarray, kernel: str | None = None):
    """Per-point ``(sign, level)``; sign is +1, -1, 0 or ``UNDECIDED``.

    Raises OverflowError when the int64 bounds could overflow; callers fall
    back to exact arithmetic then.
    """
    sq, err = sqrt_table(radicands)
    points = np.ascontiguousarray(points, dtype=np.int64)
    coef = np.ascontiguousarray(coef, dtype=np.int64)
    if not fits_int64(coef, points, sq):
        raise OverflowError("coefficients too large for the int64 kernel")
    kernel = kernel or backend()
    if kernel == "numba" and _classify_numba is not None:
        return _classify_numba(coef, sq, err, points)
    return _classify_numpy(coef, sq, err, points)
