"""Command-line front end: compress, decompress, analyze, bench.

Output on stdout is stable ``key=value`` lines; diagnostics go to stderr.
Exit codes: 0 success, 1 I/O error, 2 malformed image/container, 3 bad
configuration.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time

from .blocking import Transform
from .codec import CodecConfig, compress, decompress
from .container import parse, payload_bytes, serialize
from .errors import (
    ConfigError,
    ContainerError,
    ImageFormatError,
    InvalidInputError,
    UnsupportedCombinationError,
    ZiprError,
)
from .image_io import load_image, save_image
from .metrics import (
    BENCH_BLOCK_SIZES,
    TRANSFORM_BY_NAME,
    analysis_stats,
    bench_matrix,
    compression_ratio,
    distortion,
    write_csv,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_FORMAT = 2
EXIT_CONFIG = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def _parse_blocks(text):
    try:
        blocks = tuple(int(b) for b in text.split(","))
    except ValueError:
        raise ConfigError(f"bad block list {text!r}") from None
    if not blocks or any(b < 2 for b in blocks):
        raise ConfigError("block sizes must be integers >= 2")
    return blocks


def _codec_config(args):
    try:
        return CodecConfig(
            transform=TRANSFORM_BY_NAME[args.transform],
            block_size=args.block,
            step=args.step,
            threads=args.threads,
        )
    except (InvalidInputError, UnsupportedCombinationError) as e:
        raise ConfigError(str(e)) from e


def _emit(**kv):
    for key, value in kv.items():
        print(f"{key}={value}")


def cmd_compress(args):
    config = _codec_config(args)
    volume = load_image(args.input)
    t0 = time.perf_counter()
    artifact = compress(volume, config)
    blob = serialize(artifact)
    reconstructed = decompress(artifact, threads=config.threads)
    seconds = time.perf_counter() - t0
    with open(args.output, "wb") as f:
        f.write(blob)
    max_err, psnr = distortion(volume, reconstructed)
    original_bytes = os.path.getsize(args.input)
    _emit(
        input=args.input,
        output=args.output,
        transform=args.transform,
        block=args.block,
        step=args.step,
        original_bytes=original_bytes,
        compressed_bytes=len(blob),
        cr=compression_ratio(original_bytes, len(blob)),
        cr_payload_only=compression_ratio(original_bytes, payload_bytes(artifact)),
        max_error=max_err,
        psnr_db=psnr,
        seconds=round(seconds, 6),
    )
    return EXIT_OK


def cmd_decompress(args):
    with open(args.input, "rb") as f:
        artifact = parse(f.read())
    volume = decompress(artifact, threads=args.threads)
    save_image(volume, args.output)
    _emit(
        input=args.input,
        output=args.output,
        extents="x".join(str(e) for e in volume.extents),
        channels=volume.channels,
        bitdepth=volume.bitdepth,
    )
    return EXIT_OK


def cmd_analyze(args):
    transform = TRANSFORM_BY_NAME[args.transform]
    blocks = _parse_blocks(args.blocks)
    if transform is Transform.FWHT and any(b & (b - 1) for b in blocks):
        raise ConfigError("FWHT requires power-of-two block sizes")
    if args.step <= 0:
        raise ConfigError("step must be positive")
    volume = load_image(args.input)
    _emit(input=args.input, transform=args.transform, step=args.step)
    for block_size in blocks:
        stats = analysis_stats(volume, transform, block_size, args.step)
        print(
            f"block={block_size}"
            f" blocks={stats.blocks}"
            f" entropy_mean={stats.entropy_mean:.6f}"
            f" entropy_std={stats.entropy_std:.6f}"
            f" length_mean={stats.length_mean:.6f}"
            f" length_std={stats.length_std:.6f}"
        )
    return EXIT_OK


def cmd_bench(args):
    if args.step <= 0:
        raise ConfigError("step must be positive")
    transforms = []
    for name in args.transforms.split(","):
        if name not in TRANSFORM_BY_NAME:
            raise ConfigError(f"unknown transform {name!r}")
        transforms.append(TRANSFORM_BY_NAME[name])
    blocks = _parse_blocks(args.blocks)
    if not os.path.isdir(args.corpus):
        raise ConfigError(f"{args.corpus} is not a directory")
    try:
        reports = bench_matrix(
            args.corpus,
            transforms=transforms,
            block_sizes=blocks,
            step=args.step,
            repeats=args.repeat,
        )
    except InvalidInputError as e:
        raise ConfigError(str(e)) from e
    write_csv(reports, args.csv)
    _emit(corpus=args.corpus, csv=args.csv, rows=len(reports))
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="zipr", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--transform", choices=sorted(TRANSFORM_BY_NAME), default="zip")
        p.add_argument("--step", type=float, default=1.0, help="quantizer step")

    p = sub.add_parser("compress", help="compress a PNM/ZVOL image to .zipr")
    p.add_argument("input")
    p.add_argument("output")
    common(p)
    p.add_argument("--block", type=int, default=8, help="block side length")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.set_defaults(fn=cmd_compress)

    p = sub.add_parser("decompress", help="decompress a .zipr container")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.set_defaults(fn=cmd_decompress)

    p = sub.add_parser("analyze", help="per-block entropy/length statistics")
    p.add_argument("input")
    common(p)
    p.add_argument(
        "--blocks", default=",".join(str(b) for b in BENCH_BLOCK_SIZES),
        help="comma-separated block sizes",
    )
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("bench", help="benchmark a corpus directory to CSV")
    p.add_argument("corpus")
    p.add_argument("--csv", required=True, help="output CSV path")
    p.add_argument(
        "--transforms", default=",".join(sorted(TRANSFORM_BY_NAME)),
        help="comma-separated transform names",
    )
    p.add_argument(
        "--blocks", default=",".join(str(b) for b in BENCH_BLOCK_SIZES),
        help="comma-separated block sizes",
    )
    p.add_argument("--step", type=float, default=1.0)
    p.add_argument("--repeat", type=int, default=5, help="timing repetitions")
    p.set_defaults(fn=cmd_bench)
    return parser


def main(argv=None):
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args)
    except ConfigError as e:
        print(f"zipr: config error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except (ImageFormatError, ContainerError) as e:
        print(f"zipr: format error: {e}", file=sys.stderr)
        return EXIT_FORMAT
    except ZiprError as e:
        print(f"zipr: error: {e}", file=sys.stderr)
        return EXIT_FORMAT
    except OSError as e:
        print(f"zipr: i/o error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
