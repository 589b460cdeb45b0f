"""Compiled inner loops of the cipher.

These must produce exactly what the pure-Python path in
:mod:`chaoslut.reference` produces; the test suite compares the two
bit for bit. ``fastmath`` stays off so no FMA contraction or
reassociation can change a rounding.
"""

import numba
import numpy as np

from .chaos import DEGENERATE_EPS
from .lut import LUT_SIZE, PIXEL_BURN_IN

_LO = DEGENERATE_EPS
_HI = 1.0 - DEGENERATE_EPS
_TWO_POW_40 = 1099511627776.0

# Kernels return -1 on success, otherwise the pixel index where the orbit collapsed.
OK = -1

_jit = numba.njit(cache=True, nogil=True, fastmath=False)


@_jit
def xor_keystream(n, x0, mu, burn, out):
    x = x0
    for _ in range(burn):
        x = (mu * x) * (1.0 - x)
        if x < _LO or x > _HI:
            return 0
    for i in range(n):
        x = (mu * x) * (1.0 - x)
        if x < _LO or x > _HI:
            return i
        out[i] = np.int64(x * _TWO_POW_40) & 0xFF
    return OK


@_jit
def _pixel_seed(x0, pc):
    s = x0 + (pc + 1) / 257.0
    t = s - np.floor(s)
    return 0.1 + 0.8 * t


@_jit
def _fill_orbit(seed, mu, vals):
    # returns False if the orbit collapsed
    x = seed
    for _ in range(PIXEL_BURN_IN):
        x = (mu * x) * (1.0 - x)
        if x < _LO or x > _HI:
            return False
    for j in range(LUT_SIZE):
        x = (mu * x) * (1.0 - x)
        if x < _LO or x > _HI:
            return False
        vals[j] = x
    return True


@_jit
def lut_encrypt(data, x0, mu0, out):
    vals = np.empty(LUT_SIZE, dtype=np.float64)
    pc = np.int64(x0 * _TWO_POW_40) & 0xFF
    carry = x0
    for i in range(data.shape[0]):
        if not _fill_orbit(_pixel_seed(carry, pc), mu0, vals):
            return i
        carry = vals[LUT_SIZE - 1]
        p = data[i]
        v = vals[p]
        # forward[p] is the stable rank of vals[p]; no full sort needed
        rank = 0
        for j in range(LUT_SIZE):
            w = vals[j]
            if w < v or (w == v and j < p):
                rank += 1
        out[i] = rank
        pc = rank
    return OK


@_jit
def _before(vals, a, b):
    return vals[a] < vals[b] or (vals[a] == vals[b] and a < b)


@_jit
def _select_rank(vals, idx, k):
    """Index of the element whose stable rank is ``k`` (quickselect)."""
    for j in range(LUT_SIZE):
        idx[j] = j
    lo = 0
    hi = LUT_SIZE - 1
    while lo < hi:
        mid = (lo + hi) // 2
        pivot = idx[mid]
        idx[mid] = idx[hi]
        idx[hi] = pivot
        store = lo
        for j in range(lo, hi):
            if _before(vals, idx[j], pivot):
                tmp = idx[j]
                idx[j] = idx[store]
                idx[store] = tmp
                store += 1
        idx[hi] = idx[store]
        idx[store] = pivot
        if store == k:
            return pivot
        if store < k:
            lo = store + 1
        else:
            hi = store - 1
    return idx[lo]


@_jit
def lut_decrypt(data, x0, mu0, out):
    vals = np.empty(LUT_SIZE, dtype=np.float64)
    idx = np.empty(LUT_SIZE, dtype=np.int64)
    pc = np.int64(x0 * _TWO_POW_40) & 0xFF
    carry = x0
    for i in range(data.shape[0]):
        if not _fill_orbit(_pixel_seed(carry, pc), mu0, vals):
            return i
        carry = vals[LUT_SIZE - 1]
        c = data[i]
        out[i] = _select_rank(vals, idx, c)
        pc = c
    return OK
