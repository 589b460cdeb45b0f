"""The JSON analysis report produced by ``chaoslut analyze``."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .analysis import center, plaintext_sensitivity
from .cipher import KEY_BITS, SecretKey, encrypt
from .errors import ImageTooSmall, SampleTooSmall, ValidationError, ZeroVariance
from .image import GrayImage
from .metrics import (
    CHI2_CRITICAL_255_ALPHA_01,
    DEFAULT_PAIRS,
    DEFAULT_SAMPLE_SEED,
    DIRECTIONS,
    DiffMetrics,
    chi_square_uniformity,
    correlation,
    entropy,
    histogram,
    sample_adjacent_pairs,
)

REPORT_VERSION = 1
#: Decimal places kept in JSON; hides last-ulp differences between libm implementations.
JSON_DECIMALS = 12


def _rounded(obj):
    if isinstance(obj, float):
        return round(obj, JSON_DECIMALS)
    if isinstance(obj, dict):
        return {k: _rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_rounded(v) for v in obj]
    return obj


@dataclass
class AnalysisReport:
    width: int
    height: int
    entropy: float
    entropy_plain: float
    chi_square: float
    chi_square_plain: float
    correlations: dict
    diff: DiffMetrics
    parameters: dict
    key_space_bits: int = KEY_BITS
    chi_square_critical: float = CHI2_CRITICAL_255_ALPHA_01
    version: int = field(default=REPORT_VERSION)

    def check(self) -> None:
        """Raise :class:`ValidationError` if any metric is outside its domain."""
        problems = []
        for name in ("entropy", "entropy_plain"):
            if not 0.0 <= getattr(self, name) <= 8.0:
                problems.append(name)
        for name in ("chi_square", "chi_square_plain"):
            if getattr(self, name) < 0.0:
                problems.append(name)
        if set(self.correlations) != set(DIRECTIONS):
            problems.append("correlations.directions")
        for d, pair in self.correlations.items():
            for which in ("plain", "encrypted"):
                v = pair[which]
                if v is not None and not -1.0 <= v <= 1.0:
                    problems.append(f"correlations.{d}.{which}")
        if not 0.0 <= self.diff.npcr <= 100.0:
            problems.append("diff.npcr")
        if not 0.0 <= self.diff.uaci <= 100.0:
            problems.append("diff.uaci")
        if not 0.0 <= self.diff.mae <= 255.0:
            problems.append("diff.mae")
        if self.key_space_bits != KEY_BITS:
            problems.append("key_space_bits")
        for needed in ("key_fingerprint", "sample_seed", "sample_size", "change_position"):
            if needed not in self.parameters:
                problems.append(f"parameters.{needed}")
        if problems:
            raise ValidationError("report fails invariants: " + ", ".join(problems))

    def to_json(self) -> str:
        return json.dumps(_rounded(asdict(self)), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> AnalysisReport:
        raw = json.loads(text)
        raw["diff"] = DiffMetrics(**raw["diff"])
        report = cls(**raw)
        report.check()
        return report


def _safe_correlations(image, n, seed) -> dict:
    # undefined correlations (constant or tiny images) are reported as null
    out = {}
    for d in DIRECTIONS:
        try:
            out[d] = correlation(sample_adjacent_pairs(image, d, n, seed))
        except (ZeroVariance, ImageTooSmall, SampleTooSmall):
            out[d] = None
    return out


def build_report(
    plain: GrayImage,
    key: SecretKey,
    sample_seed: int = DEFAULT_SAMPLE_SEED,
    sample_size: int = DEFAULT_PAIRS,
    change_position=None,
) -> AnalysisReport:
    cipher = encrypt(plain, key)
    row, col = change_position if change_position is not None else center(plain)
    plain_r = _safe_correlations(plain, sample_size, sample_seed)
    cipher_r = _safe_correlations(cipher, sample_size, sample_seed)
    report = AnalysisReport(
        width=plain.width,
        height=plain.height,
        entropy=entropy(cipher),
        entropy_plain=entropy(plain),
        chi_square=chi_square_uniformity(histogram(cipher)),
        chi_square_plain=chi_square_uniformity(histogram(plain)),
        correlations={d: {"plain": plain_r[d], "encrypted": cipher_r[d]} for d in DIRECTIONS},
        diff=plaintext_sensitivity(plain, key, row, col),
        parameters={
            "key_fingerprint": key.fingerprint(),
            "sample_seed": int(sample_seed),
            "sample_size": int(sample_size),
            "change_position": [int(row), int(col)],
        },
    )
    report.check()
    return report

