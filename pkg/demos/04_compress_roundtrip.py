"""The whole codec, end to end, on the bundled photo.

Pipeline: tile -> forward transform -> uniform quantize -> canonical
Huffman -> .zipr container bytes -> decode -> dequantize -> inverse
transform -> untile.  The only loss is quantization; at the default step
of 1.0 every reconstructed pixel lands within 2 gray levels (and the
Walsh-Hadamard path is exactly lossless on integer pixels).
"""

import time
from pathlib import Path

import numpy as np

from zipr import (
    CodecConfig,
    Transform,
    compress,
    decompress,
    distortion,
    load_image,
    parse,
    serialize,
)

DATA = Path(__file__).resolve().parent.parent / "data"

photo = load_image(DATA / "photo512.pgm")
original_bytes = (DATA / "photo512.pgm").stat().st_size
print(f"image: {photo.extents[1]}x{photo.extents[0]} ({original_bytes} bytes on disk)\n")

print(f"{'transform':14s} {'bytes':>8s} {'CR':>6s} {'max err':>8s} {'PSNR dB':>8s} {'sec':>6s}")
for transform in Transform:
    config = CodecConfig(transform=transform, block_size=8)
    t0 = time.perf_counter()
    blob = serialize(compress(photo, config))
    rec = decompress(parse(blob))
    dt = time.perf_counter() - t0
    max_err, psnr = distortion(photo, rec)
    cr = original_bytes / len(blob)
    print(f"{transform.name:14s} {len(blob):8d} {cr:6.3f} {max_err:8d} {psnr:8.1f} {dt:6.2f}")

print("\ncoarser quantization trades gray-level accuracy for rate:")
print(f"{'step':>6s} {'bytes':>8s} {'CR':>6s} {'max err':>8s} {'PSNR dB':>8s}")
for step in (1.0, 2.0, 4.0, 8.0, 16.0):
    blob = serialize(compress(photo, CodecConfig(step=step)))
    rec = decompress(parse(blob))
    max_err, psnr = distortion(photo, rec)
    print(f"{step:6.1f} {len(blob):8d} {original_bytes / len(blob):6.3f} {max_err:8d} {psnr:8.1f}")
