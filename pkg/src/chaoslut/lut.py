"""Dynamic 256-entry substitution tables built from logistic orbits."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chaos import ChaosStream, burn_in
from .errors import LengthMismatch, OutOfRange

LUT_SIZE = 256
#: Orbit steps discarded after seeding each pixel's table.
PIXEL_BURN_IN = 16


def stable_ranks(values) -> np.ndarray:
    """Rank of every element in ascending order, ties broken by position.

    Works for any length; :func:`build_lut` is the 256-entry special case.
    """
    v = np.asarray(values, dtype=np.float64)
    order = np.argsort(v, kind="stable")
    ranks = np.empty(len(v), dtype=np.intp)
    ranks[order] = np.arange(len(v))
    return ranks


def _frozen_u8(a) -> np.ndarray:
    a = np.array(a, dtype=np.uint8)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Lut256:
    """A byte permutation together with its inverse."""

    forward: np.ndarray
    inverse: np.ndarray

    def __post_init__(self):
        fwd = _frozen_u8(self.forward)
        inv = _frozen_u8(self.inverse)
        if fwd.shape != (LUT_SIZE,) or inv.shape != (LUT_SIZE,):
            raise LengthMismatch("LUT arrays must hold exactly 256 entries")
        if not np.array_equal(inv[fwd], np.arange(LUT_SIZE)):
            raise ValueError("inverse table does not invert the forward table")
        object.__setattr__(self, "forward", fwd)
        object.__setattr__(self, "inverse", inv)

    def __eq__(self, other):
        if not isinstance(other, Lut256):
            return NotImplemented
        return np.array_equal(self.forward, other.forward)

    def __hash__(self):
        return hash(self.forward.tobytes())

    @classmethod
    def from_forward(cls, forward) -> Lut256:
        fwd = np.asarray(forward)
        if fwd.shape != (LUT_SIZE,):
            raise LengthMismatch("LUT arrays must hold exactly 256 entries")
        if not np.array_equal(np.sort(fwd), np.arange(LUT_SIZE)):
            raise ValueError("forward table is not a permutation of 0..255")
        inv = np.empty(LUT_SIZE, dtype=np.uint8)
        inv[fwd] = np.arange(LUT_SIZE, dtype=np.uint8)
        return cls(fwd, inv)

    @classmethod
    def identity(cls) -> Lut256:
        ident = np.arange(LUT_SIZE)
        return cls(ident, ident)


def build_lut(values) -> Lut256:
    """Turn 256 orbit values into a permutation by stable ranking.

    ``forward[i]`` is the rank of ``values[i]``; equal values keep index
    order, so the result is a bijection even when the orbit repeats.
    """
    v = np.asarray(values, dtype=np.float64)
    if v.shape != (LUT_SIZE,):
        raise LengthMismatch(f"need exactly {LUT_SIZE} values, got shape {v.shape}")
    if not np.all((v >= 0.0) & (v <= 1.0)):
        raise OutOfRange("LUT orbit values must lie in [0, 1]")
    order = np.argsort(v, kind="stable")
    forward = np.empty(LUT_SIZE, dtype=np.uint8)
    forward[order] = np.arange(LUT_SIZE, dtype=np.uint8)
    return Lut256(forward, order)


def invert(lut: Lut256) -> Lut256:
    return Lut256(lut.inverse, lut.forward)


def pixel_orbit(mu0: float, seed: float) -> list[float]:
    """The 256 orbit values behind one pixel's table (after a 16-step burn-in)."""
    stream = burn_in(ChaosStream(seed, mu0), PIXEL_BURN_IN)
    return stream.take(LUT_SIZE)


def generate_pixel_lut(mu0: float, seed: float) -> Lut256:
    """Fresh table for one pixel: seed an orbit, discard 16 steps, rank the next 256."""
    return build_lut(pixel_orbit(mu0, seed))
