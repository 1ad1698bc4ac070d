"""Canonical Huffman coding: histogram, code table, payload, and the
entropy bound.

The average codeword length L of an optimal prefix code always satisfies
H <= L < H + 1 bits/symbol, where H is the histogram's Shannon entropy;
the gap closes when probabilities are (negative) powers of two.
"""

import numpy as np

from zipr import avg_code_length, build_code, decode, encode, entropy, histogram
from zipr.huffman import serialize_table

rng = np.random.default_rng(7)
# a skewed stream like a quantized AC coefficient band: mostly zeros
stream = rng.choice([-2, -1, 0, 1, 2, 5], size=4000, p=[0.1, 0.2, 0.45, 0.15, 0.08, 0.02])

hist = histogram(stream)
print("histogram:", dict(sorted(hist.counts.items())))

code = build_code(hist)
print("\ncanonical code (symbol -> bits, codeword):")
for s, l, c in sorted(zip(code.symbols, code.lengths, code.codes), key=lambda t: (t[1], t[0])):
    print(f"  {s:3d} -> {l} bits  {c:0{l}b}")

H = entropy(hist)
L = avg_code_length(code, hist)
print(f"\nentropy H          : {H:.4f} bits/symbol")
print(f"avg codeword length: {L:.4f} bits/symbol   (H <= L < H+1: {H <= L < H + 1})")

payload = encode(stream, code)
print(f"\npayload: {payload.bit_count} bits = {len(payload.data)} bytes "
      f"(raw int8 stream would be {stream.size} bytes)")
table = serialize_table(code)
print(f"serialized table: {len(table)} bytes (lengths alone rebuild the codewords)")

back = decode(payload, code, stream.size)
print("decode(encode(s)) == s:", bool(np.array_equal(back, stream)))
