"""The two-stage image cipher: chaotic XOR whitening, then per-pixel dynamic LUTs.

Encryption runs the XOR stage (one logistic orbit, keyed by ``x0xor`` and
``mu0xor``) and then the LUT stage, where every pixel is substituted through
a table regenerated from ``mu0`` and a seed that mixes ``x0`` with the
previous ciphertext byte. Decryption applies the inverses in reverse order.
The heavy loops live in :mod:`chaoslut._kernels`; :mod:`chaoslut.reference`
holds a slow pure-Python twin used to cross-check them.
"""

from __future__ import annotations

import hashlib
import re
import struct
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .chaos import ChaosParams
from .errors import DegenerateOrbit, MalformedKey
from .image import GrayImage, as_pixels

#: Orbit steps discarded once per image before the XOR keystream starts.
XOR_BURN_IN = 1000

KEY_COMPONENTS = ("x0", "mu0", "x0xor", "mu0xor")
KEY_BITS = 64 * len(KEY_COMPONENTS)

_HEX_KEY = re.compile(r"[0-9a-fA-F]{64}")


@dataclass(frozen=True)
class SecretKey:
    """Four binary64 values: LUT-stage seed base and parameter, XOR-stage seed and parameter."""

    x0: float
    mu0: float
    x0xor: float
    mu0xor: float

    def __post_init__(self):
        lut = ChaosParams(self.x0, self.mu0)
        xor = ChaosParams(self.x0xor, self.mu0xor)
        object.__setattr__(self, "x0", lut.x0)
        object.__setattr__(self, "mu0", lut.mu)
        object.__setattr__(self, "x0xor", xor.x0)
        object.__setattr__(self, "mu0xor", xor.mu)

    def to_bytes(self) -> bytes:
        return struct.pack(">4d", self.x0, self.mu0, self.x0xor, self.mu0xor)

    def fingerprint(self) -> str:
        return hashlib.sha256(self.to_bytes()).hexdigest()[:16]


#: The reference key used throughout the experiments.
K0 = SecretKey(0.4, 3.9, 0.5002, 3.87001)


def parse_key(text: str) -> SecretKey:
    """Decode 64 hex digits (four big-endian binary64 patterns) into a key."""
    if not isinstance(text, str) or not _HEX_KEY.fullmatch(text):
        raise MalformedKey("key must be exactly 64 hexadecimal characters")
    values = struct.unpack(">4d", bytes.fromhex(text))
    return SecretKey(*values)


def serialize_key(key: SecretKey) -> str:
    return key.to_bytes().hex()


def _run(kernel, image, x0, mu0) -> GrayImage:
    src = as_pixels(image)
    flat = np.ascontiguousarray(src).reshape(-1)
    out = np.empty_like(flat)
    status = kernel(flat, x0, mu0, out)
    if status != _kernels.OK:
        raise DegenerateOrbit(
            f"LUT orbit collapsed at pixel {status} (x0={x0!r}, mu0={mu0!r})"
        )
    return GrayImage(out.reshape(src.shape))


def xor_keystream(n: int, x0xor: float, mu0xor: float) -> np.ndarray:
    """The quantized chaotic matrix of the XOR stage, flattened in raster order."""
    p = ChaosParams(x0xor, mu0xor)
    out = np.empty(n, dtype=np.uint8)
    status = _kernels.xor_keystream(n, p.x0, p.mu, XOR_BURN_IN, out)
    if status != _kernels.OK:
        raise DegenerateOrbit(f"XOR orbit collapsed (x0xor={x0xor!r}, mu0xor={mu0xor!r})")
    return out


def xor_stage(image, x0xor: float, mu0xor: float) -> GrayImage:
    """XOR each pixel with one quantized orbit value; its own inverse."""
    src = as_pixels(image)
    ks = xor_keystream(src.size, x0xor, mu0xor).reshape(src.shape)
    return GrayImage(src ^ ks)


def lut_stage_encrypt(image, x0: float, mu0: float) -> GrayImage:
    p = ChaosParams(x0, mu0)
    return _run(_kernels.lut_encrypt, image, p.x0, p.mu)


def lut_stage_decrypt(image, x0: float, mu0: float) -> GrayImage:
    p = ChaosParams(x0, mu0)
    return _run(_kernels.lut_decrypt, image, p.x0, p.mu)


def encrypt(image, key: SecretKey) -> GrayImage:
    return lut_stage_encrypt(xor_stage(image, key.x0xor, key.mu0xor), key.x0, key.mu0)


def decrypt(image, key: SecretKey) -> GrayImage:
    return xor_stage(lut_stage_decrypt(image, key.x0, key.mu0), key.x0xor, key.mu0xor)
