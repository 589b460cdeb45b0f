"""Statistical measurements of cipher images.

Histogram and chi-square uniformity, Shannon entropy, adjacent-pixel
correlation and the differential trio NPCR / UACI / MAE.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import EmptyImage, ImageTooSmall, SampleTooSmall, ValidationError, ZeroVariance
from .image import as_pixels, same_shape
from .rng import Lcg64

#: Upper 1% point of the chi-square distribution with 255 degrees of freedom.
CHI2_CRITICAL_255_ALPHA_01 = 310.45738821990585

DIRECTIONS = ("horizontal", "vertical", "diagonal")
_OFFSETS = {"horizontal": (0, 1), "vertical": (1, 0), "diagonal": (1, 1)}

DEFAULT_PAIRS = 2500
DEFAULT_SAMPLE_SEED = 42


def histogram(image) -> np.ndarray:
    """Count of each gray level 0..255."""
    return np.bincount(as_pixels(image).reshape(-1), minlength=256).astype(np.int64)


def chi_square_uniformity(hist) -> float:
    counts = np.asarray(hist, dtype=np.float64)
    if counts.shape != (256,):
        raise ValidationError("histogram must have 256 bins")
    total = counts.sum()
    if total <= 0:
        raise EmptyImage("histogram is empty")
    expected = total / 256.0
    return float(np.sum((counts - expected) ** 2) / expected)


def entropy(image) -> float:
    """Shannon entropy of the gray-level distribution, in bits per pixel."""
    counts = histogram(image)
    total = counts.sum()
    if total == 0:
        raise EmptyImage("cannot take the entropy of an empty image")
    p = counts[counts > 0] / total
    return float(-np.sum(p * np.log(p)) / math.log(2.0))


@dataclass(frozen=True, eq=False)
class PixelPairSample:
    x: np.ndarray
    y: np.ndarray
    direction: str
    sample_seed: int

    def __len__(self):
        return len(self.x)

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.x.tolist(), self.y.tolist()))


def sample_adjacent_pairs(
    image, direction: str, n: int = DEFAULT_PAIRS, sample_seed: int = DEFAULT_SAMPLE_SEED
) -> PixelPairSample:
    """Draw ``n`` neighbor pairs (with replacement) at LCG-chosen positions.

    The valid anchor positions (those whose right / lower / lower-right
    neighbor exists) are enumerated row-major; each draw takes the next LCG
    state modulo their count.
    """
    if direction not in _OFFSETS:
        raise ValidationError(f"unknown direction {direction!r}; expected one of {DIRECTIONS}")
    if n < 0:
        raise ValidationError("sample size must be non-negative")
    px = as_pixels(image)
    dr, dc = _OFFSETS[direction]
    rows, cols = px.shape[0] - dr, px.shape[1] - dc
    if rows < 1 or cols < 1:
        raise ImageTooSmall(f"{px.shape[1]}x{px.shape[0]} image has no {direction} neighbors")
    gen = Lcg64(sample_seed)
    count = rows * cols
    pos = np.array([gen.below(count) for _ in range(n)], dtype=np.int64)
    r, c = np.divmod(pos, cols)
    return PixelPairSample(
        x=px[r, c].astype(np.int64),
        y=px[r + dr, c + dc].astype(np.int64),
        direction=direction,
        sample_seed=int(sample_seed),
    )


def correlation(sample: PixelPairSample) -> float:
    """Pearson coefficient with population (1/N) moments."""
    x = np.asarray(sample.x, dtype=np.float64)
    y = np.asarray(sample.y, dtype=np.float64)
    if len(x) < 2:
        raise SampleTooSmall("correlation needs at least two pairs")
    dx = x - x.mean()
    dy = y - y.mean()
    var_x = np.mean(dx * dx)
    var_y = np.mean(dy * dy)
    if var_x == 0.0 or var_y == 0.0:
        raise ZeroVariance(f"constant {sample.direction} sequence; correlation undefined")
    cov = np.mean(dx * dy)
    r = cov / (math.sqrt(var_x) * math.sqrt(var_y))
    return float(min(1.0, max(-1.0, r)))


def adjacent_correlations(image, n=DEFAULT_PAIRS, sample_seed=DEFAULT_SAMPLE_SEED) -> dict:
    return {
        d: correlation(sample_adjacent_pairs(image, d, n, sample_seed)) for d in DIRECTIONS
    }


@dataclass(frozen=True)
class DiffMetrics:
    npcr: float
    uaci: float
    mae: float

    def as_dict(self) -> dict:
        return asdict(self)


def _abs_diff(c1, c2) -> np.ndarray:
    a, b = same_shape(c1, c2)
    return np.abs(a.astype(np.int64) - b.astype(np.int64))


def npcr(c1, c2) -> float:
    """Percentage of pixel positions where the two images differ."""
    a, b = same_shape(c1, c2)
    return float(np.count_nonzero(a != b) / a.size * 100.0)


def uaci(c1, c2) -> float:
    d = _abs_diff(c1, c2)
    return float(d.sum() / (255.0 * d.size) * 100.0)


def mae(c1, c2) -> float:
    d = _abs_diff(c1, c2)
    return float(d.sum() / d.size)


def diff_metrics(c1, c2) -> DiffMetrics:
    return DiffMetrics(npcr(c1, c2), uaci(c1, c2), mae(c1, c2))


METRICS = {"npcr": npcr, "uaci": uaci, "mae": mae}
