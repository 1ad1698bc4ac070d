"""1-D transform kernels: DFT, zipper pack/unpack, DCT-II/III, FWHT.

Scaling convention for every pair: the forward transform is unnormalized and
the inverse carries the 1/N factor, so a bounded error injected into the
coefficients never gets amplified on the way back to samples.

The zipper pack rearranges the conjugate-symmetric half spectrum of a real
signal into exactly N real values.  For even N the half spectrum holds
N/2+1 bins of which bins 0 and N/2 are purely real; for odd N it holds
(N-1)/2+1 bins of which only bin 0 is purely real.  Two layouts are
supported:

* ``Layout.CONCATENATING`` -- all real parts first, then the imaginary
  parts of the interior bins:
  ``[Re F0, Re F1, ..., Re F_half, Im F1, ..., Im F_last_interior]``
* ``Layout.INTERLACING`` -- per-bin Re/Im alternation with the real-only
  bins at the ends:
  ``[Re F0, Re F1, Im F1, Re F2, Im F2, ..., (Re F_{N/2})]``

Both layouts are permutations of the same N values, so any statistic that
ignores ordering (histograms, entropy, code lengths) is identical for the
two.  All functions accept n-dimensional arrays and operate along ``axis``,
treating the other axes as a batch.
"""

from __future__ import annotations

import enum

import numpy as np
from scipy import fft as _sfft

from .errors import InvalidInputError, SymmetryError, UnsupportedCombinationError

__all__ = [
    "Layout",
    "dft_forward",
    "dft_inverse",
    "zipper_pack",
    "zipper_unpack",
    "dct_forward",
    "dct_inverse",
    "fwht_forward",
    "fwht_inverse",
]


class Layout(enum.Enum):
    """Arrangement of the packed half spectrum."""

    CONCATENATING = "concatenating"
    INTERLACING = "interlacing"


def _as_real_signal(x, axis):
    x = np.asarray(x, dtype=np.float64)
    if x.ndim == 0 or x.shape[axis] == 0:
        raise InvalidInputError("signal must hold at least one sample")
    if not np.all(np.isfinite(x)):
        raise InvalidInputError("signal contains non-finite samples")
    return x


def dft_forward(signal, axis=-1):
    """Full unnormalized N-bin DFT of a real signal.

    For real input the output is conjugate-symmetric: ``F[N-k] == conj(F[k])``.
    """
    x = _as_real_signal(signal, axis)
    return np.fft.fft(x, axis=axis)


def dft_inverse(spectrum, axis=-1, rtol=1e-9):
    """1/N-scaled inverse DFT, returning the real samples.

    The input must be (numerically) conjugate-symmetric; if the inverse has an
    imaginary residue above ``rtol`` relative to the output magnitude, the
    spectrum could not have come from a real signal and ``SymmetryError`` is
    raised.  Residues within tolerance are discarded.
    """
    spec = np.asarray(spectrum, dtype=np.complex128)
    if spec.ndim == 0 or spec.shape[axis] == 0:
        raise InvalidInputError("spectrum must hold at least one bin")
    y = np.fft.ifft(spec, axis=axis)
    scale = np.max(np.abs(y)) if y.size else 0.0
    residue = np.max(np.abs(y.imag)) if y.size else 0.0
    if residue > rtol * max(scale, 1e-300):
        raise SymmetryError(
            f"spectrum is not conjugate-symmetric (imag residue {residue:.3e})"
        )
    return y.real.copy()


def zipper_pack(signal, layout=Layout.CONCATENATING, axis=-1):
    """Pack the half spectrum of a real signal into N real values.

    The output has exactly the shape of the input (the pack preserves
    dimensionality); ``layout`` selects the concatenating or interlacing
    arrangement documented in the module docstring.
    """
    x = _as_real_signal(signal, axis)
    x = np.moveaxis(x, axis, -1)
    n = x.shape[-1]
    half = np.fft.rfft(x, axis=-1)
    re, im = half.real, half.imag
    out = np.empty(x.shape, dtype=np.float64)
    k = n // 2
    if n == 1:
        out[..., 0] = re[..., 0]
    elif n % 2 == 0:
        # interior bins 1..k-1 carry Re and Im; bins 0 and k are real-only
        if layout is Layout.CONCATENATING:
            out[..., : k + 1] = re
            out[..., k + 1 :] = im[..., 1:k]
        else:
            out[..., 0] = re[..., 0]
            out[..., 1 : n - 1 : 2] = re[..., 1:k]
            out[..., 2 : n - 1 : 2] = im[..., 1:k]
            out[..., n - 1] = re[..., k]
    else:
        # interior bins 1..k carry Re and Im; only bin 0 is real-only
        if layout is Layout.CONCATENATING:
            out[..., : k + 1] = re
            out[..., k + 1 :] = im[..., 1 : k + 1]
        else:
            out[..., 0] = re[..., 0]
            out[..., 1::2] = re[..., 1:]
            out[..., 2::2] = im[..., 1:]
    return np.moveaxis(out, -1, axis)


def zipper_unpack(packed, layout=Layout.CONCATENATING, axis=-1):
    """Invert :func:`zipper_pack`: rebuild the half spectrum and inverse-DFT it.

    ``layout`` must match the one used for packing.
    """
    p = np.asarray(packed, dtype=np.float64)
    if p.ndim == 0 or p.shape[axis] == 0:
        raise InvalidInputError("packed spectrum must hold at least one value")
    p = np.moveaxis(p, axis, -1)
    n = p.shape[-1]
    k = n // 2
    half = np.zeros(p.shape[:-1] + (k + 1,), dtype=np.complex128)
    if n == 1:
        half[..., 0] = p[..., 0]
    elif n % 2 == 0:
        if layout is Layout.CONCATENATING:
            half[..., : k + 1] = p[..., : k + 1]
            half[..., 1:k] += 1j * p[..., k + 1 :]
        else:
            half[..., 0] = p[..., 0]
            half[..., 1:k] = p[..., 1 : n - 1 : 2] + 1j * p[..., 2 : n - 1 : 2]
            half[..., k] = p[..., n - 1]
    else:
        if layout is Layout.CONCATENATING:
            half[..., : k + 1] = p[..., : k + 1]
            half[..., 1:] += 1j * p[..., k + 1 :]
        else:
            half[..., 0] = p[..., 0]
            half[..., 1:] = p[..., 1::2] + 1j * p[..., 2::2]
    out = np.fft.irfft(half, n=n, axis=-1)
    return np.moveaxis(out, -1, axis)


def dct_forward(signal, axis=-1):
    """Unnormalized DCT-II: ``C[k] = 2 sum_n x[n] cos(pi k (2n+1) / (2N))``."""
    x = _as_real_signal(signal, axis)
    return _sfft.dct(x, type=2, axis=axis, norm=None)


def dct_inverse(coeffs, axis=-1):
    """Exact inverse of :func:`dct_forward` (DCT-III carrying the 1/N scale)."""
    c = np.asarray(coeffs, dtype=np.float64)
    if c.ndim == 0 or c.shape[axis] == 0:
        raise InvalidInputError("coefficient vector must hold at least one value")
    return _sfft.idct(c, type=2, axis=axis, norm=None)


def _check_pow2(n):
    if n < 1 or n & (n - 1):
        raise UnsupportedCombinationError(
            f"FWHT requires a power-of-two length, got {n}"
        )


def _fwht(x):
    """In-place-style Walsh-Hadamard butterfly along the last axis (natural order)."""
    n = x.shape[-1]
    h = 1
    while h < n:
        v = x.reshape(x.shape[:-1] + (n // (2 * h), 2, h))
        s = v[..., 0, :] + v[..., 1, :]
        d = v[..., 0, :] - v[..., 1, :]
        v[..., 0, :] = s
        v[..., 1, :] = d
        h *= 2
    return x


def fwht_forward(signal, axis=-1):
    """Unnormalized fast Walsh-Hadamard transform (Sylvester/natural ordering)."""
    x = _as_real_signal(signal, axis)
    _check_pow2(x.shape[axis])
    x = np.moveaxis(x, axis, -1).copy()
    return np.moveaxis(_fwht(x), -1, axis)


def fwht_inverse(coeffs, axis=-1):
    """Inverse FWHT, i.e. the same butterfly scaled by 1/N."""
    c = np.asarray(coeffs, dtype=np.float64)
    if c.ndim == 0 or c.shape[axis] == 0:
        raise InvalidInputError("coefficient vector must hold at least one value")
    n = c.shape[axis]
    _check_pow2(n)
    c = np.moveaxis(c, axis, -1).copy()
    return np.moveaxis(_fwht(c) / n, -1, axis)
