"""Pure-Python cipher built directly from the chaos and LUT primitives.

Orders of magnitude slower than :mod:`chaoslut.cipher`, and kept only as an
independent second route for cross-checking the compiled kernels on small
images.
"""

from __future__ import annotations

import numpy as np

from .chaos import ChaosStream, burn_in, derive_pixel_seed, quantize_byte
from .cipher import XOR_BURN_IN, SecretKey
from .image import GrayImage, as_pixels
from .lut import build_lut, pixel_orbit


def xor_stage(image, x0xor: float, mu0xor: float) -> GrayImage:
    src = as_pixels(image)
    stream = burn_in(ChaosStream(x0xor, mu0xor), XOR_BURN_IN)
    out = [int(p) ^ quantize_byte(next(stream)) for p in src.reshape(-1)]
    return GrayImage(np.array(out, dtype=np.uint8).reshape(src.shape))


def lut_stage_encrypt(image, x0: float, mu0: float) -> GrayImage:
    src = as_pixels(image)
    pc = quantize_byte(x0)
    carry = x0
    out = []
    for p in src.reshape(-1):
        orbit = pixel_orbit(mu0, derive_pixel_seed(carry, pc))
        lut = build_lut(orbit)
        carry = orbit[-1]
        pc = int(lut.forward[p])
        out.append(pc)
    return GrayImage(np.array(out, dtype=np.uint8).reshape(src.shape))


def lut_stage_decrypt(image, x0: float, mu0: float) -> GrayImage:
    src = as_pixels(image)
    pc = quantize_byte(x0)
    carry = x0
    out = []
    for c in src.reshape(-1):
        orbit = pixel_orbit(mu0, derive_pixel_seed(carry, pc))
        lut = build_lut(orbit)
        carry = orbit[-1]
        out.append(int(lut.inverse[c]))
        pc = int(c)
    return GrayImage(np.array(out, dtype=np.uint8).reshape(src.shape))


def encrypt(image, key: SecretKey) -> GrayImage:
    return lut_stage_encrypt(xor_stage(image, key.x0xor, key.mu0xor), key.x0, key.mu0)


def decrypt(image, key: SecretKey) -> GrayImage:
    return xor_stage(lut_stage_decrypt(image, key.x0, key.mu0), key.x0xor, key.mu0xor)
