"""Logistic map primitives: validation, iteration, byte quantization, seeds.

All arithmetic is plain IEEE-754 binary64 with a fixed evaluation order.
Ciphertexts are only portable if every implementation evaluates
``(mu * x) * (1 - x)`` in exactly that order without fused multiply-add.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateOrbit, NonFinite, OutOfRange

#: Lower (exclusive) bound on mu for the chaotic regime.
ACCUMULATION_POINT = 3.5784257
MU_MAX = 4.0
#: mu in [3.9, 4.0] makes the orbit cover the whole unit interval.
RECOMMENDED_MU = (3.9, 4.0)

#: Minimum distance an iterate must keep from the fixed points 0 and 1.
DEGENERATE_EPS = 1e-12

_TWO_POW_40 = 1099511627776.0  # 2**40


def _checked(x0, mu) -> tuple[float, float]:
    x0 = float(x0)
    mu = float(mu)
    if not (math.isfinite(x0) and math.isfinite(mu)):
        raise NonFinite(f"non-finite chaos parameter (x0={x0!r}, mu={mu!r})")
    if not 0.0 < x0 < 1.0:
        raise OutOfRange(f"x0={x0!r} outside (0, 1)")
    if not ACCUMULATION_POINT < mu <= MU_MAX:
        raise OutOfRange(f"mu={mu!r} outside ({ACCUMULATION_POINT}, {MU_MAX}]")
    return x0, mu


@dataclass(frozen=True)
class ChaosParams:
    """Initial condition and control parameter of one logistic map."""

    x0: float
    mu: float

    def __post_init__(self):
        x0, mu = _checked(self.x0, self.mu)
        object.__setattr__(self, "x0", x0)
        object.__setattr__(self, "mu", mu)


def validate_params(x0: float, mu: float) -> ChaosParams:
    """Check that ``(x0, mu)`` puts the logistic map in its chaotic regime.

    ``x0`` must lie in the open interval (0, 1) and ``mu`` in
    (3.5784257, 4.0]. Anything in that band is accepted, but mu between
    3.9 and 4.0 is recommended since only there does the orbit fill [0, 1].
    Raises :class:`NonFinite` for NaN/inf and :class:`OutOfRange` otherwise.
    """
    return ChaosParams(x0, mu)


def step(x: float, mu: float) -> float:
    """One logistic map iteration, ``(mu * x) * (1 - x)``."""
    return (mu * x) * (1.0 - x)


def is_degenerate(x: float) -> bool:
    return x < DEGENERATE_EPS or x > 1.0 - DEGENERATE_EPS


class ChaosStream:
    """Mutable iterator over one logistic orbit.

    Every produced iterate is checked against the degenerate-orbit guard;
    a hit raises :class:`DegenerateOrbit` and leaves the stream poisoned so
    that further use keeps failing instead of emitting a constant stream.
    """

    __slots__ = ("x", "mu", "steps_taken", "_poisoned")

    def __init__(self, x0: float, mu: float):
        params = validate_params(x0, mu)
        self.x = params.x0
        self.mu = params.mu
        self.steps_taken = 0
        self._poisoned = False

    def __repr__(self):
        return f"ChaosStream(x={self.x!r}, mu={self.mu!r}, steps_taken={self.steps_taken})"

    def __iter__(self):
        return self

    def __next__(self) -> float:
        if self._poisoned:
            raise DegenerateOrbit(f"stream already collapsed at step {self.steps_taken}")
        x = step(self.x, self.mu)
        self.x = x
        self.steps_taken += 1
        if is_degenerate(x):
            self._poisoned = True
            raise DegenerateOrbit(
                f"orbit reached {x!r} at step {self.steps_taken} (mu={self.mu!r})"
            )
        return x

    def take(self, n: int) -> list[float]:
        return [next(self) for _ in range(n)]

    def copy(self) -> ChaosStream:
        other = object.__new__(ChaosStream)
        other.x, other.mu, other.steps_taken = self.x, self.mu, self.steps_taken
        other._poisoned = self._poisoned
        return other


def burn_in(stream: ChaosStream, n: int) -> ChaosStream:
    """Advance ``stream`` by ``n`` steps in place and return it."""
    if n < 0:
        raise OutOfRange(f"negative burn-in length {n}")
    for _ in range(n):
        next(stream)
    return stream


def quantize_byte(x: float) -> int:
    """Map an orbit value in [0, 1) to a byte: ``floor(x * 2**40) mod 256``.

    Scaling by a power of two is exact, so the result is the 8 bits found
    33..40 places after the binary point of ``x``.
    """
    if not 0.0 <= x < 1.0:
        raise OutOfRange(f"cannot quantize {x!r}; expected 0 <= x < 1")
    return int(x * _TWO_POW_40) & 0xFF


def derive_pixel_seed(x0: float, pc: int) -> float:
    """Initial condition of a pixel's LUT orbit, given the previous cipher byte.

    ``0.1 + 0.8 * frac(x0 + (pc + 1) / 257)``, always in [0.1, 0.9).
    257 is prime, so the 256 possible bytes give 256 distinct offsets.
    """
    if not 0 <= pc <= 255:
        raise OutOfRange(f"pc={pc!r} is not a byte")
    s = x0 + (pc + 1) / 257.0
    t = s - math.floor(s)
    return 0.1 + 0.8 * t
