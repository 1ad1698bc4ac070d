"""A first look at the zipper transform on a short 1-D signal.

The DFT of a real signal is conjugate-symmetric, so only the first
floor(N/2)+1 complex bins carry information.  The zipper transform strips
the redundant half and re-packs the real and imaginary parts of the
remaining bins into exactly N real numbers, either concatenated
(all real parts first) or interlaced (Re/Im alternating per bin).
"""

import numpy as np

from zipr import Layout, dft_forward, zipper_pack, zipper_unpack

x = np.array([52.0, 55.0, 61.0, 66.0, 70.0, 61.0, 64.0, 73.0])
print("signal          :", x)

spectrum = dft_forward(x)
print("\nfull DFT bins (note bin N-k is the conjugate of bin k):")
for k, f in enumerate(spectrum):
    print(f"  F[{k}] = {f.real:9.3f} {f.imag:+9.3f}j")

concat = zipper_pack(x, Layout.CONCATENATING)
inter = zipper_pack(x, Layout.INTERLACING)
print("\npacked, concatenating:", np.round(concat, 3))
print("packed, interlacing  :", np.round(inter, 3))
print("same multiset of values in both layouts:",
      sorted(concat.round(9)) == sorted(inter.round(9)))

back = zipper_unpack(concat, Layout.CONCATENATING)
print("\nunpacked             :", np.round(back, 12))
print("max round-trip error :", float(np.abs(back - x).max()))

# dimensionality is preserved for every length, odd or even
for n in (1, 2, 5, 9, 16, 257):
    v = np.random.default_rng(n).normal(size=n)
    assert zipper_pack(v).shape == v.shape
print("\npacked length == signal length for N = 1, 2, 5, 9, 16, 257: ok")
