"""Enumeration kernels for fake-flat colouring counts.

Two interchangeable backends count, over a contiguous range of free-edge
assignments, how many make every face word land in the image of the
boundary map. The numba backend is used when numba imports and
``CCS_TQFT_DISABLE_NUMBA`` is unset (or "0"); otherwise the vectorized
numpy backend runs. Both return plain Python ints.

Assignment index ``idx`` decodes row-major: the first free slot is the
most significant digit in base |G|.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

_DISABLED = os.environ.get("CCS_TQFT_DISABLE_NUMBA", "0") not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError("numba disabled by CCS_TQFT_DISABLE_NUMBA")
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"

_BLOCK = 1 << 15


def count_range_numpy(table, inverse, in_image, colours, n_fixed,
                      face_ptr, word_slot, word_inv, start, stop) -> int:
    order = table.shape[0]
    n_free = colours.shape[0] - n_fixed
    weights = order ** np.arange(n_free - 1, -1, -1, dtype=np.int64)
    total = 0
    n_faces = face_ptr.shape[0] - 1
    for lo in range(start, stop, _BLOCK):
        idx = np.arange(lo, min(stop, lo + _BLOCK), dtype=np.int64)
        block = np.empty((idx.shape[0], colours.shape[0]), dtype=np.int64)
        block[:, :n_fixed] = colours[:n_fixed]
        if n_free:
            block[:, n_fixed:] = (idx[:, None] // weights[None, :]) % order
        ok = np.ones(idx.shape[0], dtype=np.bool_)
        for f in range(n_faces):
            p = np.zeros(idx.shape[0], dtype=np.int64)
            for t in range(face_ptr[f], face_ptr[f + 1]):
                c = block[:, word_slot[t]]
                if word_inv[t]:
                    c = inverse[c]
                p = table[p, c]
            ok &= in_image[p]
        total += int(np.count_nonzero(ok))
    return total


def _count_range_py(table, inverse, in_image, colours, n_fixed,
                    face_ptr, word_slot, word_inv, start, stop):
    order = table.shape[0]
    n_slots = colours.shape[0]
    col = colours.copy()
    rem = start
    for s in range(n_slots - 1, n_fixed - 1, -1):
        col[s] = rem % order
        rem //= order
    n_faces = face_ptr.shape[0] - 1
    count = 0
    for _ in range(start, stop):
        good = True
        for f in range(n_faces):
            p = 0
            for t in range(face_ptr[f], face_ptr[f + 1]):
                c = col[word_slot[t]]
                if word_inv[t]:
                    c = inverse[c]
                p = table[p, c]
            if not in_image[p]:
                good = False
                break
        if good:
            count += 1
        s = n_slots - 1
        while s >= n_fixed:
            col[s] += 1
            if col[s] < order:
                break
            col[s] = 0
            s -= 1
    return count


if HAVE_NUMBA:
    _count_range_jit = njit(cache=True, nogil=True)(_count_range_py)

    def count_range_numba(table, inverse, in_image, colours, n_fixed,
                          face_ptr, word_slot, word_inv, start, stop) -> int:
        return int(_count_range_jit(table, inverse, in_image, colours, n_fixed,
                                    face_ptr, word_slot, word_inv, start, stop))

    count_range = count_range_numba
else:
    count_range = count_range_numpy


def count_parallel(args: tuple, total: int, workers: int = 1, kernel=None) -> int:
    """Sum ``kernel`` over ``workers`` contiguous partitions of [0, total)."""
    kernel = kernel or count_range
    if workers <= 1 or total < 2 * workers:
        return kernel(*args, 0, total)
    bounds = [total * i // workers for i in range(workers + 1)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(lambda ab: kernel(*args, ab[0], ab[1]), zip(bounds, bounds[1:]))
        return sum(parts)
