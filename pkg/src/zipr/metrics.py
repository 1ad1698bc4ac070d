"""Figures of merit: compression ratio, per-block entropy/codeword statistics,
distortion, and round-trip timing, plus the CSV bench harness.

Two coefficient scales are involved.  Compression ratio, reconstruction
error and timing describe the actual codec (unnormalized forward transform,
quantizer step as configured).  The per-block entropy / average-codeword-
length tables instead describe the *normalized* coefficients (forward
transform divided by its per-axis gain: B for the zipper and FWHT, 2B for
the DCT), which is the scale on which block-size sweeps are comparable --
on raw unnormalized coefficients the symbol alphabet widens with every
doubling of B, so per-symbol statistics would grow without bound instead of
showing the energy-compaction trend the sweep is meant to expose.
"""

from __future__ import annotations

import csv
import logging
import math
import statistics
import time
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from . import huffman
from .blocking import Transform, forward_nd, tile
from .codec import CodecConfig, compress, decompress
from .container import payload_bytes, serialize
from .errors import InvalidInputError, ZiprError
from .image_io import load_image
from .quantize import quantize

__all__ = [
    "TRANSFORM_NAMES",
    "TRANSFORM_BY_NAME",
    "BENCH_BLOCK_SIZES",
    "CSV_COLUMNS",
    "LOSSLESS_PSNR",
    "BlockStats",
    "RunReport",
    "compression_ratio",
    "per_block_stats",
    "analysis_stats",
    "distortion",
    "time_roundtrip",
    "bench_matrix",
    "write_csv",
]

log = logging.getLogger("zipr.bench")

TRANSFORM_NAMES = {
    Transform.ZIP_CONCAT: "zip",
    Transform.ZIP_INTERLACE: "zip-interlace",
    Transform.DCT: "dct",
    Transform.FWHT: "fwht",
}
TRANSFORM_BY_NAME = {v: k for k, v in TRANSFORM_NAMES.items()}

BENCH_BLOCK_SIZES = (4, 8, 16, 32, 64, 128)

LOSSLESS_PSNR = math.inf


def compression_ratio(original_bytes, compressed_bytes):
    """CR = original size / compressed size."""
    if original_bytes <= 0 or compressed_bytes <= 0:
        raise InvalidInputError("sizes must be positive to form a compression ratio")
    return original_bytes / compressed_bytes


@dataclass(frozen=True)
class BlockStats:
    """Mean and sample standard deviation of per-block H and L."""

    entropy_mean: float
    entropy_std: float
    length_mean: float
    length_std: float
    blocks: int


def _mean_std(values):
    mean = statistics.fmean(values)
    std = statistics.stdev(values) if len(values) > 1 else 0.0
    return mean, std


def per_block_stats(quantized_blocks):
    """Per-block entropy and Huffman mean codeword length, averaged.

    ``quantized_blocks``: integer array (or sequence) whose first axis
    indexes blocks.  Each block gets its own histogram and its own code, as
    in a per-block-size statistics sweep; the single-symbol block follows
    the 1-bit-code rule (H=0, L=1).
    """
    blocks = np.asarray(quantized_blocks)
    if blocks.ndim < 1 or blocks.shape[0] == 0:
        raise InvalidInputError("need at least one block")
    entropies = []
    lengths = []
    for block in blocks.reshape(blocks.shape[0], -1):
        hist = huffman.histogram(block)
        code = huffman.build_code(hist)
        entropies.append(huffman.entropy(hist))
        lengths.append(huffman.avg_code_length(code, hist))
    e_mean, e_std = _mean_std(entropies)
    l_mean, l_std = _mean_std(lengths)
    return BlockStats(e_mean, e_std, l_mean, l_std, blocks.shape[0])


def _analysis_scale(transform, block_size, ndim):
    per_axis = 2 * block_size if transform is Transform.DCT else block_size
    return float(per_axis) ** ndim


def analysis_stats(volume, transform, block_size, step=1.0):
    """Block-size sweep statistics on normalized coefficients.

    Tiles the volume, forward-transforms, divides by the transform's DC gain
    (see module docstring), quantizes with ``step`` and pools the per-block
    statistics over every block of every channel.
    """
    grid = tile(volume, block_size)
    axes = tuple(range(2, 2 + grid.ndim))
    coeffs = forward_nd(grid.blocks, transform, axes=axes)
    coeffs /= _analysis_scale(Transform(transform), block_size, grid.ndim)
    symbols = quantize(coeffs, step)
    pooled = symbols.reshape((-1,) + symbols.shape[2:])
    return per_block_stats(pooled)


def distortion(original, reconstructed):
    """(max absolute pixel error, PSNR in dB); PSNR is inf when identical."""
    if (
        original.extents != reconstructed.extents
        or original.channels != reconstructed.channels
    ):
        raise InvalidInputError("volumes must have identical shape to compare")
    a = original.pixels.astype(np.int64)
    b = reconstructed.pixels.astype(np.int64)
    err = np.abs(a - b)
    max_err = int(err.max())
    if max_err == 0:
        return 0, LOSSLESS_PSNR
    mse = float(np.mean(err.astype(np.float64) ** 2))
    peak = float(original.peak)
    return max_err, 10.0 * math.log10(peak * peak / mse)


def time_roundtrip(volume, config, repeats=5):
    """Median wall time of the in-memory pipeline (no disk I/O).

    Covers the forward transform, quantization, Huffman code construction,
    encoding, decoding, dequantization and the inverse transform.
    """
    times = []
    for _ in range(max(1, repeats)):
        t0 = time.perf_counter()
        artifact = compress(volume, config)
        decompress(artifact)
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


@dataclass(frozen=True)
class RunReport:
    """One bench matrix cell; field order matches the CSV columns."""

    image: str
    transform: str
    block: int
    cr: float
    cr_payload_only: float
    entropy_mean: float
    entropy_std: float
    length_mean: float
    length_std: float
    max_error: int
    psnr_db: float
    seconds: float


CSV_COLUMNS = tuple(f.name for f in fields(RunReport))

_IMAGE_SUFFIXES = (".pgm", ".ppm", ".zvol")


def _bench_one(name, volume, original_bytes, transform, block_size, step, repeats):
    config = CodecConfig(transform=transform, block_size=block_size, step=step)
    artifact = compress(volume, config)
    blob = serialize(artifact)
    reconstructed = decompress(artifact)
    max_err, psnr = distortion(volume, reconstructed)
    stats = analysis_stats(volume, transform, block_size, step)
    seconds = time_roundtrip(volume, config, repeats)
    return RunReport(
        image=name,
        transform=TRANSFORM_NAMES[transform],
        block=block_size,
        cr=compression_ratio(original_bytes, len(blob)),
        cr_payload_only=compression_ratio(original_bytes, payload_bytes(artifact)),
        entropy_mean=stats.entropy_mean,
        entropy_std=stats.entropy_std,
        length_mean=stats.length_mean,
        length_std=stats.length_std,
        max_error=max_err,
        psnr_db=psnr,
        seconds=seconds,
    )


def bench_matrix(
    corpus_dir,
    transforms=tuple(TRANSFORM_NAMES),
    block_sizes=BENCH_BLOCK_SIZES,
    step=1.0,
    repeats=5,
):
    """One :class:`RunReport` per (image, transform, block size).

    ``corpus_dir`` is scanned for ``.pgm``/``.ppm``/``.zvol`` files; other
    files and unsupported combinations are logged and skipped.  Cells run
    sequentially so the timing column is uncontended.
    """
    corpus = Path(corpus_dir)
    files = sorted(p for p in corpus.iterdir() if p.is_file())
    images = [p for p in files if p.suffix.lower() in _IMAGE_SUFFIXES]
    for p in files:
        if p not in images:
            log.info("skipping non-image file %s", p.name)
    if not images:
        raise InvalidInputError(f"no PNM/ZVOL images found in {corpus}")
    reports = []
    for path in images:
        volume = load_image(path)
        original_bytes = path.stat().st_size
        for transform in transforms:
            transform = Transform(transform)
            for block_size in block_sizes:
                try:
                    reports.append(
                        _bench_one(
                            path.name,
                            volume,
                            original_bytes,
                            transform,
                            block_size,
                            step,
                            repeats,
                        )
                    )
                except ZiprError as e:
                    log.info(
                        "skipping %s %s B=%d: %s",
                        path.name,
                        TRANSFORM_NAMES[transform],
                        block_size,
                        e,
                    )
    return reports


def write_csv(reports, path):
    """Write bench reports with the fixed CSV_COLUMNS header row."""
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(CSV_COLUMNS)
        for r in reports:
            writer.writerow([getattr(r, c) for c in CSV_COLUMNS])
