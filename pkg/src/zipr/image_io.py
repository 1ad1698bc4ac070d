"""Loading and saving test imagery: binary PGM (P5), PPM (P6), and ZVOL.

ZVOL is a minimal headered raw format for volumes: an ASCII line
``ZVOL <w> <h> <d> <channels> <bitdepth>\\n`` followed by the samples in
``(z, y, x, channel)`` order.  Multi-byte samples are big-endian in both
PNM and ZVOL.  All round trips are byte-exact.
"""

from __future__ import annotations

import numpy as np

from .blocking import ImageVolume
from .errors import ImageFormatError

__all__ = ["load_image", "save_image"]

_ZVOL_MAGIC = b"ZVOL"


def _read_pnm_header_tokens(data, start, count):
    """Read whitespace-separated ASCII tokens, honoring '#' comments."""
    tokens = []
    i = start
    while len(tokens) < count:
        while i < len(data) and data[i : i + 1].isspace():
            i += 1
        if i < len(data) and data[i] == ord("#"):
            while i < len(data) and data[i] != ord("\n"):
                i += 1
            continue
        j = i
        while j < len(data) and not data[j : j + 1].isspace():
            j += 1
        if j == i:
            raise ImageFormatError("PNM header ended before all fields were read")
        tokens.append(data[i:j])
        i = j
    if i >= len(data) or not data[i : i + 1].isspace():
        raise ImageFormatError("PNM header not terminated by whitespace")
    return tokens, i + 1  # skip the single whitespace before the raster


def _parse_pnm(data, channels):
    tokens, offset = _read_pnm_header_tokens(data, 2, 3)
    try:
        width, height, maxval = (int(t) for t in tokens)
    except ValueError:
        raise ImageFormatError(f"non-numeric PNM header fields {tokens}") from None
    if width < 1 or height < 1:
        raise ImageFormatError(f"bad PNM dimensions {width}x{height}")
    if maxval == 255:
        bitdepth, dtype = 8, np.dtype(">u1")
    elif maxval == 65535:
        bitdepth, dtype = 16, np.dtype(">u2")
    else:
        raise ImageFormatError(f"unsupported PNM maxval {maxval} (need 255 or 65535)")
    expected = width * height * channels * dtype.itemsize
    raster = data[offset : offset + expected]
    if len(raster) != expected:
        raise ImageFormatError(
            f"PNM raster holds {len(raster)} bytes, header declares {expected}"
        )
    pixels = np.frombuffer(raster, dtype=dtype).reshape(height, width, channels)
    native = pixels.astype(np.uint8 if bitdepth == 8 else np.uint16)
    return ImageVolume(
        extents=(height, width), channels=channels, bitdepth=bitdepth, pixels=native
    )


def _parse_zvol(data):
    end = data.find(b"\n")
    if end < 0:
        raise ImageFormatError("ZVOL header line not terminated")
    fields = data[:end].split()
    if len(fields) != 6 or fields[0] != _ZVOL_MAGIC:
        raise ImageFormatError(f"bad ZVOL header {data[:end]!r}")
    try:
        w, h, d, channels, bitdepth = (int(t) for t in fields[1:])
    except ValueError:
        raise ImageFormatError(f"non-numeric ZVOL header fields {fields[1:]}") from None
    if min(w, h, d, channels) < 1:
        raise ImageFormatError("ZVOL dimensions must be positive")
    if bitdepth not in (8, 16):
        raise ImageFormatError(f"unsupported ZVOL bitdepth {bitdepth}")
    dtype = np.dtype(">u1") if bitdepth == 8 else np.dtype(">u2")
    expected = w * h * d * channels * dtype.itemsize
    raster = data[end + 1 :]
    if len(raster) != expected:
        raise ImageFormatError(
            f"ZVOL raster holds {len(raster)} bytes, header declares {expected}"
        )
    pixels = np.frombuffer(raster, dtype=dtype).reshape(d, h, w, channels)
    native = pixels.astype(np.uint8 if bitdepth == 8 else np.uint16)
    if d == 1:
        native = native[0]
        extents = (h, w)
    else:
        extents = (d, h, w)
    return ImageVolume(
        extents=extents, channels=channels, bitdepth=bitdepth, pixels=native
    )


def load_image(path):
    """Load a P5/P6 PNM or ZVOL file into an :class:`ImageVolume`."""
    with open(path, "rb") as f:
        data = f.read()
    if data[:2] == b"P5":
        return _parse_pnm(data, channels=1)
    if data[:2] == b"P6":
        return _parse_pnm(data, channels=3)
    if data[:4] == _ZVOL_MAGIC:
        return _parse_zvol(data)
    raise ImageFormatError(f"unrecognized image magic {data[:4]!r}")


def save_image(volume, path):
    """Write a volume, picking the format from its shape.

    2-D single channel -> PGM, 2-D three channels -> PPM, anything else ->
    ZVOL.  ``save_image`` then ``load_image`` reproduces the volume exactly.
    """
    big = volume.pixels.astype(">u1" if volume.bitdepth == 8 else ">u2")
    maxval = volume.peak
    if volume.ndim == 2 and volume.channels == 1:
        header = f"P5\n{volume.extents[1]} {volume.extents[0]}\n{maxval}\n"
    elif volume.ndim == 2 and volume.channels == 3:
        header = f"P6\n{volume.extents[1]} {volume.extents[0]}\n{maxval}\n"
    elif volume.ndim in (2, 3):
        if volume.ndim == 2:
            d, (h, w) = 1, volume.extents
        else:
            d, h, w = volume.extents
        header = f"ZVOL {w} {h} {d} {volume.channels} {volume.bitdepth}\n"
    else:
        raise ImageFormatError(f"cannot save a {volume.ndim}-dimensional volume")
    with open(path, "wb") as f:
        f.write(header.encode("ascii"))
        f.write(big.tobytes())
