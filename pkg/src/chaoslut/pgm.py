"""Binary PGM (P5, maxval 255) reader and canonical writer."""

from __future__ import annotations

from pathlib import Path

from .errors import BadHeader, BadMagic, TruncatedData, UnsupportedMaxval
from .image import GrayImage

_WHITESPACE = b" \t\n\v\f\r"


def _header_tokens(buf: bytes, count: int):
    # returns the tokens and the offset of the whitespace byte ending the last one
    tokens = []
    i = 0
    n = len(buf)
    while len(tokens) < count:
        while i < n and buf[i] in _WHITESPACE:
            i += 1
        if i < n and buf[i] == ord("#"):
            while i < n and buf[i] not in b"\r\n":
                i += 1
            continue
        if i >= n:
            raise BadHeader("header ended early")
        start = i
        while i < n and buf[i] not in _WHITESPACE and buf[i] != ord("#"):
            i += 1
        tokens.append(buf[start:i])
    if i >= n or buf[i] not in _WHITESPACE:
        raise BadHeader("header must end with a single whitespace byte")
    return tokens, i


def read_pgm(data: bytes) -> GrayImage:
    data = bytes(data)
    if data[:2] != b"P5":
        raise BadMagic(f"not a binary PGM (magic {data[:2]!r})")
    tokens, end = _header_tokens(data[2:], 3)
    try:
        width, height, maxval = (int(t) for t in tokens)
    except ValueError:
        raise BadHeader(f"non-numeric header field in {tokens!r}") from None
    if width < 1 or height < 1:
        raise BadHeader(f"bad dimensions {width}x{height}")
    if maxval != 255:
        raise UnsupportedMaxval(f"maxval {maxval} not supported (only 255)")
    start = 2 + end + 1
    payload = data[start:start + width * height]
    if len(payload) < width * height:
        raise TruncatedData(f"expected {width * height} pixel bytes, found {len(payload)}")
    return GrayImage.from_bytes(width, height, payload)


def write_pgm(image: GrayImage) -> bytes:
    header = f"P5\n{image.width} {image.height}\n255\n".encode("ascii")
    return header + image.data


def load(path) -> GrayImage:
    return read_pgm(Path(path).read_bytes())


def save(image: GrayImage, path) -> None:
    Path(path).write_bytes(write_pgm(image))
