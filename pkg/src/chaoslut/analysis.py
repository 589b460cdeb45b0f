"""Sensitivity experiments and the known-plaintext keystream attack."""

from __future__ import annotations

import dataclasses
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .cipher import KEY_COMPONENTS, SecretKey, decrypt, encrypt
from .errors import OutOfRange, ValidationError
from .image import GrayImage, same_shape
from .metrics import METRICS, DiffMetrics, diff_metrics, npcr

DEFAULT_DELTA = 1e-15


@dataclass(frozen=True)
class KeyPerturbation:
    component: str
    delta: float = DEFAULT_DELTA

    def __post_init__(self):
        if self.component not in KEY_COMPONENTS:
            raise ValidationError(
                f"unknown key component {self.component!r}; expected one of {KEY_COMPONENTS}"
            )


def single_component_perturbations(delta: float = DEFAULT_DELTA) -> list[KeyPerturbation]:
    """One perturbation per key component, in key order (keys k1..k4)."""
    return [KeyPerturbation(c, delta) for c in KEY_COMPONENTS]


def perturb_key(key: SecretKey, p: KeyPerturbation) -> SecretKey:
    """Add ``p.delta`` to one component; the others stay bit-identical."""
    value = getattr(key, p.component) + p.delta
    try:
        return dataclasses.replace(key, **{p.component: value})
    except OutOfRange as exc:
        raise OutOfRange(f"perturbing {p.component} by {p.delta!r} leaves the valid range: {exc}") from None


def center(image) -> tuple[int, int]:
    h, w = image.shape
    return h // 2, w // 2


def plaintext_sensitivity(image, key: SecretKey, change_row=None, change_col=None) -> DiffMetrics:
    """Encrypt ``image`` and a copy with one pixel bumped by +1 (mod 256); compare ciphertexts.

    The changed pixel defaults to the image center.
    """
    img = image if isinstance(image, GrayImage) else GrayImage(image)
    r0, c0 = center(img)
    row = r0 if change_row is None else change_row
    col = c0 if change_col is None else change_col
    if not (0 <= row < img.height and 0 <= col < img.width):
        raise OutOfRange(f"change position ({row}, {col}) outside {img.width}x{img.height} image")
    bumped = img.with_pixel(row, col, (int(img.pixels[row, col]) + 1) % 256)
    c1, c2 = _parallel(lambda im: encrypt(im, key), [img, bumped])
    return diff_metrics(c1, c2)


@dataclass(frozen=True, eq=False)
class SensitivityMatrix:
    labels: tuple
    cells: np.ndarray
    metric: str

    def __post_init__(self):
        cells = np.asarray(self.cells, dtype=np.float64)
        n = len(self.labels)
        if cells.shape != (n, n):
            raise ValidationError(f"{cells.shape} grid does not match {n} labels")
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "cells", cells)

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.cells, self.cells.T))

    def has_zero_diagonal(self) -> bool:
        return bool(np.all(np.diag(self.cells) == 0.0))

    def cell(self, a: str, b: str) -> float:
        return float(self.cells[self.labels.index(a), self.labels.index(b)])

    def as_dict(self) -> dict:
        return {"metric": self.metric, "labels": list(self.labels), "cells": self.cells.tolist()}

    def to_csv(self) -> str:
        lines = ["," + ",".join(self.labels)]
        for label, row in zip(self.labels, self.cells):
            lines.append(label + "," + ",".join(repr(float(v)) for v in row))
        return "\n".join(lines) + "\n"


def _parallel(fn, items):
    # kernels release the GIL, so threads give real concurrency
    with ThreadPoolExecutor(max_workers=min(len(items), 8) or 1) as pool:
        return list(pool.map(fn, items))


def metric_matrix(images, labels, metric: str) -> SensitivityMatrix:
    if metric not in METRICS:
        raise ValidationError(f"unknown metric {metric!r}; expected one of {tuple(METRICS)}")
    fn = METRICS[metric]
    n = len(images)
    cells = np.zeros((n, n))
    for a in range(n):
        for b in range(a + 1, n):
            cells[a, b] = cells[b, a] = fn(images[a], images[b])
    return SensitivityMatrix(labels, cells, metric)


def _as_perturbations(deltas):
    if deltas is None:
        return single_component_perturbations()
    return [d if isinstance(d, KeyPerturbation) else KeyPerturbation(*d) for d in deltas]


def _cipher_images(image, base_key, deltas):
    keys = [base_key] + [perturb_key(base_key, p) for p in _as_perturbations(deltas)]
    ciphers = _parallel(lambda k: encrypt(image, k), keys)
    labels = ["I_C"] + [f"I_C{i}" for i in range(1, len(keys))] + ["I"]
    return ciphers + [image], labels


def _decipher_images(image, base_key, deltas):
    keys = [base_key] + [perturb_key(base_key, p) for p in _as_perturbations(deltas)]
    ciphertext = encrypt(image, base_key)
    plains = _parallel(lambda k: decrypt(ciphertext, k), keys)
    labels = ["I_D"] + [f"I_D{i}" for i in range(1, len(keys))] + ["I"]
    return plains + [image], labels


def cipher_key_sensitivity(image, base_key, deltas=None, metric="npcr") -> SensitivityMatrix:
    """Compare ciphertexts under the base key and each perturbed key (plain image last)."""
    images, labels = _cipher_images(image, base_key, deltas)
    return metric_matrix(images, labels, metric)


def decipher_key_sensitivity(image, base_key, deltas=None, metric="npcr") -> SensitivityMatrix:
    """Decrypt the base-key ciphertext with the base and perturbed keys (plain image last)."""
    images, labels = _decipher_images(image, base_key, deltas)
    return metric_matrix(images, labels, metric)


def sensitivity_tables(image, base_key, deltas=None) -> dict:
    """All six tables: ``{"cipher"|"decipher": {metric: SensitivityMatrix}}``.

    Each side encrypts/decrypts once and reuses the images for every metric.
    """
    out = {}
    for side, build in (("cipher", _cipher_images), ("decipher", _decipher_images)):
        images, labels = build(image, base_key, deltas)
        out[side] = {m: metric_matrix(images, labels, m) for m in METRICS}
    return out


def extract_keystream(plain, cipher) -> GrayImage:
    """Per-pixel XOR of a known plaintext/ciphertext pair."""
    a, b = same_shape(plain, cipher)
    return GrayImage(a ^ b)


def apply_keystream(keystream, cipher) -> GrayImage:
    a, b = same_shape(keystream, cipher)
    return GrayImage(a ^ b)


@dataclass(frozen=True, eq=False)
class AttackResult:
    known_cipher: GrayImage
    keystream: GrayImage
    recovered_known: GrayImage
    other_cipher: GrayImage
    recovered_other: GrayImage
    source_npcr: float
    transfer: DiffMetrics

    def summary(self) -> dict:
        return {
            "source_recovery_npcr": self.source_npcr,
            "source_recovered_exactly": self.source_npcr == 0.0,
            "transfer_npcr": self.transfer.npcr,
            "transfer_uaci": self.transfer.uaci,
            "transfer_mae": self.transfer.mae,
        }


def attack_demo(known_plain, other_plain, key: SecretKey) -> AttackResult:
    """Known-plaintext keystream attack: extract from one pair, try it on another ciphertext."""
    same_shape(known_plain, other_plain)
    known_cipher, other_cipher = _parallel(lambda im: encrypt(im, key), [known_plain, other_plain])
    ks = extract_keystream(known_plain, known_cipher)
    recovered = apply_keystream(ks, known_cipher)
    cracked = apply_keystream(ks, other_cipher)
    return AttackResult(
        known_cipher=known_cipher,
        keystream=ks,
        recovered_known=recovered,
        other_cipher=other_cipher,
        recovered_other=cracked,
        source_npcr=npcr(recovered, known_plain),
        transfer=diff_metrics(cracked, other_plain),
    )
