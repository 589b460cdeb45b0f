"""Compute tests/data/golden.json from the independent oracles in tests/oracles.py.

Nothing here calls the package; the values are what the cipher must reproduce.
Usage: python tools/freeze_golden.py
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

import oracles as o  # noqa: E402

K0 = (0.4, 3.9, 0.5002, 3.87001)


def main():
    g = {}
    g["burn_in_0.4_3.9_1000"] = o.orbit(0.4, 3.9, 1000)[-1].hex()
    g["quantize_0.4"] = o.quantize(0.4)
    g["pixel_seed_0.4_127"] = o.pixel_seed(0.4, 127).hex()
    g["pixel_lut_3.9_0.4"] = bytes(o.ranks(o.pixel_orbit(3.9, 0.4))).hex()
    g["xor_2x2_zero_k0"] = o.xor_keystream(K0[2], K0[3], 4)
    g["lut_1x1_zero_0.4_3.9"] = o.lut_encrypt([0], 0.4, 3.9)
    # full cipher on a 4x4 ramp: XOR stage then LUT stage
    plain = [(17 * i) % 256 for i in range(16)]
    ks = o.xor_keystream(K0[2], K0[3], 16)
    g["encrypt_4x4_ramp_k0"] = o.lut_encrypt([p ^ k for p, k in zip(plain, ks)], K0[0], K0[1])
    # pair sampler on an 8x8 image with pixel value 8*r + c
    img = [[8 * r + c for c in range(8)] for r in range(8)]
    g["pairs_seed42_8x8"] = {
        d: o.bf_pairs(img, d, 10, 42) for d in ("horizontal", "vertical", "diagonal")
    }
    out = ROOT / "tests" / "data" / "golden.json"
    out.write_text(json.dumps(g, indent=2, sort_keys=True) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
