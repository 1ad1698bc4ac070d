"""The ``.zipr`` container: a bit-exact serialization of a compressed image.

Layout (all integers little-endian, see docs/FORMAT.md for the byte-by-byte
walkthrough)::

    magic            4 bytes  b"ZIPR"
    version          u8       currently 1
    transform id     u8       0=zip 1=zip-interlace 2=dct 3=fwht
    dimension count  u8       d
    extents          d * u32  original spatial extents, axis order
    channels         u8
    bitdepth         u8       8 or 16
    block size       u16
    quantizer step   f64
    per channel:
        code table   u32 symbol count + (varint symbol, u8 length) pairs
        bit count    u64
        payload      ceil(bit count / 8) bytes, MSB-first, zero padded

Parsing validates everything (magic, version, field ranges, Kraft equality
of every table, payload sizes) before any pixel is reconstructed, and
rejects trailing bytes.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass

from .blocking import Transform
from .errors import (
    BadMagicError,
    ContainerError,
    InvalidInputError,
    TruncatedContainerError,
    UnsupportedVersionError,
)
from .huffman import BitPayload, HuffmanCode, parse_table, serialize_table

__all__ = ["MAGIC", "VERSION", "ChannelStream", "CompressedArtifact", "serialize", "parse"]

MAGIC = b"ZIPR"
VERSION = 1


@dataclass(frozen=True)
class ChannelStream:
    """One channel's canonical code table and Huffman bit payload."""

    code: HuffmanCode
    payload: BitPayload


@dataclass(frozen=True)
class CompressedArtifact:
    """Everything needed to reconstruct an image, plus the codec settings."""

    transform: Transform
    extents: tuple[int, ...]
    bitdepth: int
    block_size: int
    step: float
    streams: tuple[ChannelStream, ...]
    version: int = VERSION

    @property
    def channels(self):
        return len(self.streams)

    @property
    def padded_extents(self):
        return tuple(-(-e // self.block_size) * self.block_size for e in self.extents)


def serialize(artifact):
    """Deterministic byte encoding of the artifact."""
    a = artifact
    if not (1 <= len(a.extents) <= 255 and a.channels <= 255):
        raise InvalidInputError("extents or channel count out of header range")
    out = bytearray()
    out += MAGIC
    out += struct.pack("<BBB", a.version, a.transform.value, len(a.extents))
    out += struct.pack(f"<{len(a.extents)}I", *a.extents)
    out += struct.pack("<BBHd", a.channels, a.bitdepth, a.block_size, a.step)
    for stream in a.streams:
        out += serialize_table(stream.code)
        out += struct.pack("<Q", stream.payload.bit_count)
        out += stream.payload.data
    return bytes(out)


def payload_bytes(artifact):
    """Total size of the bit payloads alone (excludes header and tables)."""
    return sum(len(s.payload.data) for s in artifact.streams)


def _take(data, offset, size, what):
    if offset + size > len(data):
        raise TruncatedContainerError(f"container truncated in {what}")
    return data[offset : offset + size], offset + size


def parse(data):
    """Parse and fully validate container bytes into a CompressedArtifact."""
    magic, offset = _take(data, 0, 4, "magic")
    if magic != MAGIC:
        raise BadMagicError(f"not a zipr container (magic {magic!r})")
    head, offset = _take(data, offset, 3, "header")
    version, transform_id, ndim = struct.unpack("<BBB", head)
    if version != VERSION:
        raise UnsupportedVersionError(f"unsupported container version {version}")
    try:
        transform = Transform(transform_id)
    except ValueError:
        raise ContainerError(f"unknown transform id {transform_id}") from None
    if ndim < 1:
        raise ContainerError("dimension count must be positive")
    raw, offset = _take(data, offset, 4 * ndim, "extents")
    extents = struct.unpack(f"<{ndim}I", raw)
    head, offset = _take(data, offset, 12, "header")
    channels, bitdepth, block_size, step = struct.unpack("<BBHd", head)
    if any(e < 1 for e in extents):
        raise ContainerError("extents must be positive")
    if bitdepth not in (8, 16):
        raise ContainerError(f"unsupported bitdepth {bitdepth}")
    if block_size < 2:
        raise ContainerError(f"block size must be >= 2, got {block_size}")
    if not (math.isfinite(step) and step > 0):
        raise ContainerError(f"quantizer step must be positive and finite, got {step}")
    streams = []
    for _ in range(channels):
        code, offset = parse_table(data, offset)
        raw, offset = _take(data, offset, 8, "payload bit count")
        (bit_count,) = struct.unpack("<Q", raw)
        nbytes = (bit_count + 7) // 8
        raw, offset = _take(data, offset, nbytes, "payload")
        try:
            payload = BitPayload(bytes(raw), bit_count)
        except InvalidInputError as e:
            raise ContainerError(str(e)) from e
        streams.append(ChannelStream(code, payload))
    if offset != len(data):
        raise ContainerError(f"{len(data) - offset} trailing bytes after payload")
    return CompressedArtifact(
        transform=transform,
        extents=extents,
        bitdepth=bitdepth,
        block_size=block_size,
        step=step,
        streams=tuple(streams),
    )
