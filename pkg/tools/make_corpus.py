"""Regenerate tests/data/corpus/*.pgm from the sample images bundled with scikit-image.

Every image is reduced to 8-bit gray with integer BT.601 weights and center
cropped to 512x512, so the output is byte-identical wherever it is rebuilt.
Usage: python tools/make_corpus.py [OUTDIR]
"""

import sys
from pathlib import Path

import numpy as np
import skimage.data

from chaoslut.image import GrayImage
from chaoslut.pgm import save

NAMES = [
    "camera",
    "astronaut",
    "moon",
    "brick",
    "grass",
    "gravel",
    "immunohistochemistry",
    "hubble_deep_field",
    "retina",
    "cell",
]
SIZE = 512


def to_gray(a: np.ndarray) -> np.ndarray:
    if a.ndim == 2:
        return a.astype(np.uint8)
    rgb = a[..., :3].astype(np.int64)
    luma = (299 * rgb[..., 0] + 587 * rgb[..., 1] + 114 * rgb[..., 2] + 500) // 1000
    return luma.astype(np.uint8)


def center_crop(a: np.ndarray, size: int = SIZE) -> np.ndarray:
    h, w = a.shape
    top, left = (h - size) // 2, (w - size) // 2
    return a[top:top + size, left:left + size]


def main(outdir="tests/data/corpus"):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name in NAMES:
        img = GrayImage(center_crop(to_gray(getattr(skimage.data, name)())))
        save(img, out / f"{name}.pgm")
        print(f"{name}: {img.width}x{img.height}")


if __name__ == "__main__":
    main(*sys.argv[1:])
