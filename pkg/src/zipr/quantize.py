"""Uniform scalar quantization of transform coefficients.

This is the only lossy stage of the codec: symbols are
``round(c / step)`` with ties rounded away from zero, so the
dequantized value ``s * step`` is always within ``step / 2`` of the
original coefficient.  With the unnormalized-forward / scaled-inverse
transform convention that coefficient error never grows on the way back
to pixels, which is what keeps the codec near-lossless.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import InvalidInputError

__all__ = ["quantize", "dequantize"]


def _check_step(step):
    if not (isinstance(step, (int, float)) and math.isfinite(step) and step > 0):
        raise InvalidInputError(f"quantizer step must be a positive finite real, got {step!r}")


def quantize(coeffs, step=1.0):
    """Map coefficients to integer symbols, rounding half away from zero."""
    _check_step(step)
    c = np.asarray(coeffs, dtype=np.float64)
    if not np.all(np.isfinite(c)):
        raise InvalidInputError("coefficients contain non-finite values")
    with np.errstate(over="ignore"):
        scaled = c / step
    if scaled.size and np.max(np.abs(scaled)) >= 2.0**62:
        raise InvalidInputError("coefficient / step ratio overflows the symbol range")
    return (np.sign(scaled) * np.floor(np.abs(scaled) + 0.5)).astype(np.int64)


def dequantize(symbols, step=1.0):
    """Reconstruct coefficients ``s * step`` from integer symbols."""
    _check_step(step)
    return np.asarray(symbols, dtype=np.float64) * step
