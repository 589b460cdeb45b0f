"""Grayscale image cipher built on a per-pixel dynamic chaotic look-up table."""

from .analysis import (
    KeyPerturbation,
    SensitivityMatrix,
    apply_keystream,
    attack_demo,
    cipher_key_sensitivity,
    decipher_key_sensitivity,
    extract_keystream,
    perturb_key,
    plaintext_sensitivity,
    sensitivity_tables,
)
from .chaos import ChaosParams, ChaosStream, burn_in, derive_pixel_seed, quantize_byte, step, validate_params
from .cipher import (
    K0,
    SecretKey,
    decrypt,
    encrypt,
    lut_stage_decrypt,
    lut_stage_encrypt,
    parse_key,
    serialize_key,
    xor_stage,
)
from .image import GrayImage
from .lut import Lut256, build_lut, generate_pixel_lut, invert
from .metrics import (
    DiffMetrics,
    PixelPairSample,
    chi_square_uniformity,
    correlation,
    diff_metrics,
    entropy,
    histogram,
    mae,
    npcr,
    sample_adjacent_pairs,
    uaci,
)
from .pgm import read_pgm, write_pgm

__version__ = "0.1.0"
