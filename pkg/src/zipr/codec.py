"""End-to-end pipeline: tile, transform, quantize, entropy-code, and back.

``compress`` produces a :class:`~zipr.container.CompressedArtifact` with one
Huffman table and payload per channel; symbols are emitted in grid C order,
each block flattened in C order.  ``decompress`` is its exact structural
inverse; only quantization (and the final rounding of pixels) loses
information, keeping reconstruction within 2 gray levels of the original at
the default step of 1.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import huffman
from .blocking import BlockGrid, ImageVolume, Transform, forward_nd, inverse_nd, tile, untile
from .container import ChannelStream, CompressedArtifact
from .errors import ContainerError, InvalidInputError, UnsupportedCombinationError
from .quantize import dequantize, quantize

__all__ = ["CodecConfig", "compress", "decompress", "quantized_grid"]


@dataclass(frozen=True)
class CodecConfig:
    """Settings shared by compress, analyze and bench."""

    transform: Transform = Transform.ZIP_CONCAT
    block_size: int = 8
    step: float = 1.0
    threads: int = 1

    def __post_init__(self):
        if self.block_size < 2:
            raise InvalidInputError(f"block size must be >= 2, got {self.block_size}")
        if self.step <= 0:
            raise InvalidInputError(f"quantizer step must be positive, got {self.step}")
        if self.transform is Transform.FWHT and self.block_size & (self.block_size - 1):
            raise UnsupportedCombinationError(
                f"FWHT requires a power-of-two block size, got {self.block_size}"
            )


def _block_axes(grid):
    # blocks array is (channels, nblocks, B, ..., B); transform the B axes
    return tuple(range(2, 2 + grid.ndim))


def quantized_grid(volume, config):
    """Tile + forward transform + quantize; returns (grid, int64 symbol array).

    The symbol array has the same shape as ``grid.blocks``.
    """
    grid = tile(volume, config.block_size)
    coeffs = forward_nd(grid.blocks, config.transform, axes=_block_axes(grid))
    return grid, quantize(coeffs, config.step)


def _map_channels(fn, items, threads):
    if threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(it) for it in items]


def compress(volume, config=CodecConfig()):
    """Compress an :class:`ImageVolume` into a container artifact."""
    grid, symbols = quantized_grid(volume, config)

    def encode_channel(c):
        flat = symbols[c].ravel()
        code = huffman.build_code(huffman.histogram(flat))
        return ChannelStream(code, huffman.encode(flat, code))

    streams = _map_channels(encode_channel, range(volume.channels), config.threads)
    return CompressedArtifact(
        transform=config.transform,
        extents=volume.extents,
        bitdepth=volume.bitdepth,
        block_size=config.block_size,
        step=config.step,
        streams=tuple(streams),
    )


def decompress(artifact, threads=1):
    """Reconstruct the :class:`ImageVolume` encoded in ``artifact``."""
    if not artifact.streams:
        raise ContainerError("container holds no channel streams to decode")
    B = artifact.block_size
    d = len(artifact.extents)
    padded = artifact.padded_extents
    nblocks = int(np.prod([e // B for e in padded]))
    count = nblocks * B**d

    def decode_channel(stream):
        flat = huffman.decode(stream.payload, stream.code, count)
        return flat.reshape((nblocks,) + (B,) * d)

    symbols = np.stack(_map_channels(decode_channel, artifact.streams, threads))
    coeffs = dequantize(symbols, artifact.step)
    blocks = inverse_nd(
        coeffs, artifact.transform, axes=tuple(range(2, 2 + d))
    )
    grid = BlockGrid(
        block_size=B,
        extents=artifact.extents,
        bitdepth=artifact.bitdepth,
        blocks=blocks,
    )
    return untile(grid)
