from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, ValidationError


@dataclass(frozen=True, eq=False)
class GrayImage:
    """8-bit grayscale image stored row-major as a read-only ``(height, width)`` array."""

    pixels: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.pixels)
        if a.ndim != 2:
            raise ValidationError(f"expected a 2-D pixel grid, got shape {a.shape}")
        if a.shape[0] < 1 or a.shape[1] < 1:
            raise ValidationError(f"image must be at least 1x1, got {a.shape}")
        if a.dtype != np.uint8:
            if a.size and (a.min() < 0 or a.max() > 255):
                raise ValidationError("pixel values must fit in a byte")
        a = np.array(a, dtype=np.uint8, order="C")
        a.setflags(write=False)
        object.__setattr__(self, "pixels", a)

    @classmethod
    def from_bytes(cls, width: int, height: int, data) -> GrayImage:
        buf = np.frombuffer(bytes(data), dtype=np.uint8)
        if width < 1 or height < 1 or buf.size != width * height:
            raise ValidationError(
                f"{buf.size} bytes do not form a {width}x{height} image"
            )
        return cls(buf.reshape(height, width))

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.pixels.shape

    @property
    def size(self) -> int:
        return self.pixels.size

    @property
    def data(self) -> bytes:
        return self.pixels.tobytes()

    def flat(self) -> np.ndarray:
        return self.pixels.reshape(-1)

    def with_pixel(self, row: int, col: int, value: int) -> GrayImage:
        a = self.pixels.copy()
        a[row, col] = value
        return GrayImage(a)

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.pixels, other.pixels)

    def __repr__(self):
        return f"GrayImage({self.width}x{self.height})"


def as_pixels(image) -> np.ndarray:
    """Pixel array of a :class:`GrayImage` or anything array-like."""
    if isinstance(image, GrayImage):
        return image.pixels
    return GrayImage(image).pixels


def same_shape(a, b) -> tuple[np.ndarray, np.ndarray]:
    pa, pb = as_pixels(a), as_pixels(b)
    if pa.shape != pb.shape:
        raise DimensionMismatch(f"image shapes differ: {pa.shape} vs {pb.shape}")
    return pa, pb
