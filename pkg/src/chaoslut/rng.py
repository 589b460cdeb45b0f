"""The 64-bit linear congruential generator used for pair sampling and test keys.

Not a cryptographic generator. It exists so that sampled correlations and
``keygen --seed`` output are reproducible byte for byte on any platform.
"""

from __future__ import annotations

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg64:
    """``state <- (a * state + c) mod 2**64``; every draw advances first."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = int(seed) & _MASK

    def next_u64(self) -> int:
        self.state = (MULTIPLIER * self.state + INCREMENT) & _MASK
        return self.state

    def below(self, n: int) -> int:
        """Next state reduced modulo ``n``."""
        return self.next_u64() % n

    def uniform(self) -> float:
        """Float in [0, 1) from the top 53 bits of the next state."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))
