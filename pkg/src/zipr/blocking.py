"""Tiling of N-dimensional images into cubic blocks and separable transforms.

An image volume is tiled into B x B x ... x B blocks (edges padded by
replication up to the next multiple of B), each block is transformed by
applying a 1-D kernel along dimension 0, then dimension 1, and so on; the
inverse unwinds the dimensions in reverse order.  Tiling and untiling are
exact inverses on integer pixels.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import transforms
from .errors import ContainerError, InvalidInputError
from .transforms import Layout

__all__ = [
    "Transform",
    "ImageVolume",
    "BlockGrid",
    "tile",
    "untile",
    "forward_nd",
    "inverse_nd",
]


class Transform(enum.Enum):
    """Block transform selector; values double as container transform ids."""

    ZIP_CONCAT = 0
    ZIP_INTERLACE = 1
    DCT = 2
    FWHT = 3


@dataclass(frozen=True)
class ImageVolume:
    """Integer pixel array: spatial ``extents`` plus a trailing channel axis.

    ``pixels`` has shape ``extents + (channels,)`` and dtype uint8 or uint16
    according to ``bitdepth``.
    """

    extents: tuple[int, ...]
    channels: int
    bitdepth: int
    pixels: np.ndarray

    def __post_init__(self):
        if self.bitdepth not in (8, 16):
            raise InvalidInputError(f"bitdepth must be 8 or 16, got {self.bitdepth}")
        if self.channels < 1 or any(e < 1 for e in self.extents):
            raise InvalidInputError("extents and channel count must be positive")
        expect = tuple(self.extents) + (self.channels,)
        if self.pixels.shape != expect:
            raise InvalidInputError(
                f"pixel array shape {self.pixels.shape} != {expect}"
            )
        want = np.uint8 if self.bitdepth == 8 else np.uint16
        if self.pixels.dtype != want:
            raise InvalidInputError(
                f"pixel dtype {self.pixels.dtype} does not match bitdepth {self.bitdepth}"
            )

    @property
    def ndim(self):
        return len(self.extents)

    @property
    def peak(self):
        return (1 << self.bitdepth) - 1

    @classmethod
    def from_array(cls, pixels, bitdepth=8):
        """Wrap an integer array; last axis is the channel axis."""
        pixels = np.asarray(pixels)
        want = np.uint8 if bitdepth == 8 else np.uint16
        return cls(
            extents=tuple(pixels.shape[:-1]),
            channels=pixels.shape[-1],
            bitdepth=bitdepth,
            pixels=np.ascontiguousarray(pixels, dtype=want),
        )


@dataclass(frozen=True)
class BlockGrid:
    """A volume cut into cubic blocks, one channel-major block array.

    ``blocks`` has shape ``(channels, nblocks) + (B,)*d`` where blocks are in
    C order over the grid (last spatial dimension fastest).  The original
    extents are kept so untiling can crop the replication padding exactly.
    """

    block_size: int
    extents: tuple[int, ...]
    bitdepth: int
    blocks: np.ndarray

    @property
    def ndim(self):
        return len(self.extents)

    @property
    def channels(self):
        return self.blocks.shape[0]

    @property
    def grid_shape(self):
        return tuple(-(-e // self.block_size) for e in self.extents)

    @property
    def padded_extents(self):
        return tuple(g * self.block_size for g in self.grid_shape)

    def block_origins(self):
        """Origin index of every block, in grid C order."""
        grids = [np.arange(g) * self.block_size for g in self.grid_shape]
        mesh = np.meshgrid(*grids, indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=-1)


def _blockify(plane, block_size):
    """(padded d-dim array) -> (nblocks, B, ..., B) in grid C order."""
    d = plane.ndim
    grid = [plane.shape[i] // block_size for i in range(d)]
    shape = []
    for g in grid:
        shape.extend((g, block_size))
    v = plane.reshape(shape)
    # bring grid axes first, block axes after: (g0, B, g1, B, ...) -> (g0, g1, ..., B, B, ...)
    v = v.transpose(*range(0, 2 * d, 2), *range(1, 2 * d, 2))
    return v.reshape((-1,) + (block_size,) * d)


def _unblockify(blocks, padded_extents):
    d = len(padded_extents)
    block_size = blocks.shape[-1]
    grid = [e // block_size for e in padded_extents]
    v = blocks.reshape(tuple(grid) + (block_size,) * d)
    order = []
    for i in range(d):
        order.extend((i, d + i))
    v = v.transpose(order)
    return v.reshape(padded_extents)


def tile(volume, block_size):
    """Cut ``volume`` into B-sized blocks, replicating edge pixels to pad.

    Returns a :class:`BlockGrid` whose blocks hold float copies of the pixel
    values, ready for transforming.
    """
    if block_size < 2:
        raise InvalidInputError(f"block size must be >= 2, got {block_size}")
    pads = [(0, (-e) % block_size) for e in volume.extents]
    stacks = []
    for c in range(volume.channels):
        plane = volume.pixels[..., c].astype(np.float64)
        plane = np.pad(plane, pads, mode="edge")
        stacks.append(_blockify(plane, block_size))
    return BlockGrid(
        block_size=block_size,
        extents=volume.extents,
        bitdepth=volume.bitdepth,
        blocks=np.stack(stacks),
    )


def untile(grid):
    """Reassemble an :class:`ImageVolume` from block values.

    Crops the replication padding, rounds to the nearest integer and clips to
    the bit-depth range.  Exact inverse of :func:`tile` when the block values
    are unchanged.
    """
    if grid.block_size < 2 or any(e < 1 for e in grid.extents):
        raise ContainerError("block grid metadata is corrupted")
    nblocks = int(np.prod(grid.grid_shape))
    want = (nblocks,) + (grid.block_size,) * grid.ndim
    if grid.blocks.shape[1:] != want:
        raise ContainerError(
            f"block array shape {grid.blocks.shape[1:]} inconsistent with grid {want}"
        )
    crop = tuple(slice(0, e) for e in grid.extents)
    planes = []
    for c in range(grid.channels):
        plane = _unblockify(grid.blocks[c], grid.padded_extents)[crop]
        planes.append(plane)
    peak = (1 << grid.bitdepth) - 1
    stacked = np.stack(planes, axis=-1)
    pixels = np.clip(np.rint(stacked), 0, peak)
    dtype = np.uint8 if grid.bitdepth == 8 else np.uint16
    return ImageVolume(
        extents=grid.extents,
        channels=grid.channels,
        bitdepth=grid.bitdepth,
        pixels=pixels.astype(dtype),
    )


_FORWARD = {
    Transform.ZIP_CONCAT: lambda a, ax: transforms.zipper_pack(a, Layout.CONCATENATING, ax),
    Transform.ZIP_INTERLACE: lambda a, ax: transforms.zipper_pack(a, Layout.INTERLACING, ax),
    Transform.DCT: transforms.dct_forward,
    Transform.FWHT: transforms.fwht_forward,
}

_INVERSE = {
    Transform.ZIP_CONCAT: lambda a, ax: transforms.zipper_unpack(a, Layout.CONCATENATING, ax),
    Transform.ZIP_INTERLACE: lambda a, ax: transforms.zipper_unpack(a, Layout.INTERLACING, ax),
    Transform.DCT: transforms.dct_inverse,
    Transform.FWHT: transforms.fwht_inverse,
}


def forward_nd(block, transform, axes=None):
    """Apply the 1-D forward transform along each axis in ascending order.

    ``block`` may carry leading batch axes (e.g. the block index); pass
    ``axes`` to restrict the transform to the block dimensions.
    """
    out = np.asarray(block, dtype=np.float64)
    if axes is None:
        axes = tuple(range(out.ndim))
    fn = _FORWARD[Transform(transform)]
    for ax in axes:
        out = fn(out, ax)
    return out


def inverse_nd(block, transform, axes=None):
    """Invert :func:`forward_nd`: inverse kernels along ``axes`` in reverse."""
    out = np.asarray(block, dtype=np.float64)
    if axes is None:
        axes = tuple(range(out.ndim))
    fn = _INVERSE[Transform(transform)]
    for ax in reversed(tuple(axes)):
        out = fn(out, ax)
    return out
