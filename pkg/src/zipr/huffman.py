"""Histogram, canonical Huffman codes, and MSB-first bit payloads.

Code construction is fully deterministic: heap ties are broken by count,
then by smallest symbol, then by node creation order, and the emitted code
is canonical (codewords assigned in (length, symbol) order), so identical
histograms always produce bit-identical tables and payloads.  Only the code
lengths ever need to be stored; :meth:`HuffmanCode.from_lengths` rebuilds
the codewords.

Code lengths are capped at ``MAX_CODE_LENGTH`` bits.  The cap is unreachable
for anything resembling image statistics; if a pathological histogram does
exceed it, the lengths are recomputed with the package-merge algorithm,
which is optimal under the cap and keeps the Kraft equality.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    DecodeError,
    EncodeError,
    InvalidInputError,
    KraftViolationError,
    TruncatedContainerError,
)

__all__ = [
    "MAX_CODE_LENGTH",
    "SymbolHistogram",
    "HuffmanCode",
    "BitPayload",
    "histogram",
    "entropy",
    "build_code",
    "avg_code_length",
    "encode",
    "decode",
    "serialize_table",
    "parse_table",
]

MAX_CODE_LENGTH = 32


@dataclass(frozen=True)
class SymbolHistogram:
    """Exact symbol counts; probabilities are ``count / total``."""

    counts: dict[int, int]
    total: int

    @classmethod
    def from_symbols(cls, symbols):
        symbols = np.asarray(symbols).ravel()
        if symbols.size == 0:
            raise InvalidInputError("cannot build a histogram from no symbols")
        if not np.issubdtype(symbols.dtype, np.integer):
            raise InvalidInputError(
                f"symbols must be integers, got dtype {symbols.dtype}"
            )
        values, counts = np.unique(symbols, return_counts=True)
        return cls(
            counts={int(v): int(c) for v, c in zip(values, counts)},
            total=int(symbols.size),
        )


def histogram(symbols):
    """Count occurrences of each integer symbol."""
    return SymbolHistogram.from_symbols(symbols)


def entropy(hist):
    """Shannon entropy of the histogram in bits per symbol."""
    total = hist.total
    return -sum(
        (c / total) * math.log2(c / total) for c in hist.counts.values() if c
    )


@dataclass(frozen=True)
class BitPayload:
    """MSB-first packed bits; trailing pad bits in the last byte are zero."""

    data: bytes
    bit_count: int

    def __post_init__(self):
        if self.bit_count < 0 or len(self.data) != (self.bit_count + 7) // 8:
            raise InvalidInputError(
                f"payload of {len(self.data)} bytes cannot hold {self.bit_count} bits"
            )
        pad = -self.bit_count % 8
        if pad and self.data[-1] & ((1 << pad) - 1):
            raise InvalidInputError("trailing pad bits must be zero")


@dataclass(frozen=True)
class HuffmanCode:
    """Canonical prefix code over an ascending integer alphabet.

    ``symbols``, ``lengths`` and ``codes`` are parallel, sorted by symbol;
    the codewords are the canonical assignment (shorter codes first, ties by
    symbol value), so the table round-trips through lengths alone.
    """

    symbols: tuple[int, ...]
    lengths: tuple[int, ...]
    codes: tuple[int, ...]

    @classmethod
    def from_lengths(cls, symbols, lengths):
        """Canonically assign codewords and validate the length profile."""
        n = len(symbols)
        if n == 0 or n != len(lengths):
            raise InvalidInputError("alphabet and lengths must be non-empty and parallel")
        if list(symbols) != sorted(set(symbols)):
            raise InvalidInputError("alphabet must be strictly ascending")
        if any(l < 1 or l > MAX_CODE_LENGTH for l in lengths):
            raise KraftViolationError(
                f"code lengths must lie in 1..{MAX_CODE_LENGTH}"
            )
        kraft = sum(1 << (MAX_CODE_LENGTH - l) for l in lengths)
        if n == 1:
            if lengths[0] != 1:
                raise KraftViolationError("single-symbol codes must have length 1")
        elif kraft != 1 << MAX_CODE_LENGTH:
            raise KraftViolationError(
                "code lengths violate the Kraft equality"
            )
        order = sorted(range(n), key=lambda i: (lengths[i], symbols[i]))
        codes = [0] * n
        code = 0
        prev_len = lengths[order[0]]
        for rank, i in enumerate(order):
            code <<= lengths[i] - prev_len
            prev_len = lengths[i]
            codes[i] = code
            code += 1
        return cls(tuple(symbols), tuple(lengths), tuple(codes))

    @property
    def max_length(self):
        return max(self.lengths)

    @cached_property
    def _encoder(self):
        return {
            s: (c, l) for s, c, l in zip(self.symbols, self.codes, self.lengths)
        }

    @cached_property
    def _decoder(self):
        """Canonical decode tables: per length, first code / limit / symbol base."""
        maxlen = self.max_length
        count = [0] * (maxlen + 1)
        for l in self.lengths:
            count[l] += 1
        canon = sorted(zip(self.lengths, self.symbols))
        first = [0] * (maxlen + 1)
        limit = [0] * (maxlen + 1)
        base = [0] * (maxlen + 1)
        code = 0
        idx = 0
        for l in range(1, maxlen + 1):
            first[l] = code
            base[l] = idx
            limit[l] = code + count[l]
            code = (code + count[l]) << 1
            idx += count[l]
        return first, limit, base, [s for _, s in canon]

    _WINDOW = 16

    @cached_property
    def _fast_table(self):
        """Window-indexed (symbol, length) lookup for codes up to _WINDOW bits.

        Entry length 0 marks codes longer than the window (resolved by the
        canonical per-bit path).
        """
        w = min(self._WINDOW, self.max_length)
        sym = [0] * (1 << w)
        ln = [0] * (1 << w)
        for s, c, l in zip(self.symbols, self.codes, self.lengths):
            if l <= w:
                lo = c << (w - l)
                for i in range(lo, lo + (1 << (w - l))):
                    sym[i] = s
                    ln[i] = l
        return w, sym, ln


def _huffman_lengths(counts_in_symbol_order, symbols):
    """Code lengths from a deterministic Huffman merge.

    Heap entries are ``(count, seq, node)``: leaves get sequence numbers in
    ascending-symbol order, internal nodes continue the sequence in creation
    order, so ties resolve to (count, smallest symbol, creation order).
    """
    n = len(symbols)
    left = [-1] * (2 * n - 1)
    right = [-1] * (2 * n - 1)
    heap = [(int(c), i, i) for i, c in enumerate(counts_in_symbol_order)]
    heapq.heapify(heap)
    nxt = n
    while len(heap) > 1:
        c1, _, n1 = heapq.heappop(heap)
        c2, _, n2 = heapq.heappop(heap)
        left[nxt], right[nxt] = n1, n2
        heapq.heappush(heap, (c1 + c2, nxt, nxt))
        nxt += 1
    root = heap[0][2]
    lengths = [0] * n
    stack = [(root, 0)]
    while stack:
        node, depth = stack.pop()
        if node < n:
            lengths[node] = depth
        else:
            stack.append((left[node], depth + 1))
            stack.append((right[node], depth + 1))
    return lengths


def _package_merge_lengths(counts_in_symbol_order, cap):
    """Optimal length-limited code lengths (Larmore-Hirschberg package-merge)."""
    n = len(counts_in_symbol_order)
    order = sorted(range(n), key=lambda i: (counts_in_symbol_order[i], i))
    base = [(counts_in_symbol_order[i], (i,)) for i in order]
    merged = list(base)
    for _ in range(cap - 1):
        packaged = [
            (merged[j][0] + merged[j + 1][0], merged[j][1] + merged[j + 1][1])
            for j in range(0, len(merged) - 1, 2)
        ]
        merged = sorted(base + packaged, key=lambda t: t[0])
    lengths = [0] * n
    for _, leaves in merged[: 2 * n - 2]:
        for i in leaves:
            lengths[i] += 1
    return lengths


def build_code(hist):
    """Optimal prefix code for the histogram, in canonical form.

    A single-symbol alphabet gets the 1-bit code ``0``.
    """
    if not hist.counts:
        raise InvalidInputError("histogram is empty")
    symbols = sorted(hist.counts)
    if len(symbols) == 1:
        return HuffmanCode.from_lengths(symbols, [1])
    counts = [hist.counts[s] for s in symbols]
    lengths = _huffman_lengths(counts, symbols)
    if max(lengths) > MAX_CODE_LENGTH:
        lengths = _package_merge_lengths(counts, MAX_CODE_LENGTH)
    return HuffmanCode.from_lengths(symbols, lengths)


def avg_code_length(code, hist):
    """Probability-weighted mean codeword length L = sum p_j * l_j."""
    by_symbol = dict(zip(code.symbols, code.lengths))
    try:
        return (
            sum(c * by_symbol[s] for s, c in hist.counts.items()) / hist.total
        )
    except KeyError as e:
        raise InvalidInputError(f"histogram symbol {e.args[0]} missing from code") from e


def encode(symbols, code):
    """Huffman-encode a symbol stream into an MSB-first bit payload."""
    table = code._encoder
    out = bytearray()
    buf = 0
    nbits = 0
    total_bits = 0
    try:
        for s in np.asarray(symbols).ravel().tolist():
            cw, l = table[s]
            buf = (buf << l) | cw
            nbits += l
            total_bits += l
            while nbits >= 8:
                nbits -= 8
                out.append((buf >> nbits) & 0xFF)
                buf &= (1 << nbits) - 1
    except KeyError as e:
        raise EncodeError(f"symbol {e.args[0]} is not in the code alphabet") from e
    if nbits:
        out.append((buf << (8 - nbits)) & 0xFF)
    return BitPayload(bytes(out), total_bits)


def decode(payload, code, count):
    """Decode exactly ``count`` symbols; exact inverse of :func:`encode`.

    The payload must hold precisely the bits of those symbols (plus byte
    padding); leftover coded bits are treated as corruption.
    """
    nbits = payload.bit_count
    if count == 0:
        if nbits:
            raise DecodeError(f"{nbits} unread bits after 0 symbols")
        return np.empty(0, dtype=np.int64)
    first, limit, base, canon = code._decoder
    w, fast_sym, fast_len = code._fast_table
    maxlen = code.max_length
    bits = np.unpackbits(np.frombuffer(payload.data, dtype=np.uint8))[:nbits]
    # windows[i] = the w bits starting at offset i, MSB first (zero padded)
    padded = np.concatenate([bits, np.zeros(w, dtype=np.uint8)]).astype(np.int64)
    windows = np.zeros(nbits, dtype=np.int64)
    for j in range(w):
        windows |= padded[j : j + nbits] << (w - 1 - j)
    win = windows.item
    top = w - 1
    out = np.empty(count, dtype=np.int64)
    pos = 0
    for j in range(count):
        if pos >= nbits:
            raise DecodeError(f"payload exhausted after {j} of {count} symbols")
        v = win(pos)
        l = fast_len[v]
        if l:
            if pos + l > nbits:
                raise DecodeError(f"payload exhausted after {j} of {count} symbols")
            out[j] = fast_sym[v]
            pos += l
        else:
            c = 0
            l = 0
            while True:
                if pos >= nbits:
                    raise DecodeError(
                        f"payload exhausted after {j} of {count} symbols"
                    )
                c = (c << 1) | ((win(pos) >> top) & 1)
                pos += 1
                l += 1
                if l > maxlen:
                    raise DecodeError("bit sequence matches no codeword")
                if c < limit[l]:
                    out[j] = canon[base[l] + (c - first[l])]
                    break
    if pos != nbits:
        raise DecodeError(f"{nbits - pos} unread bits after {count} symbols")
    return out


def _zigzag(v):
    return (v << 1) if v >= 0 else (-(v << 1) - 1)


def _unzigzag(z):
    return (z >> 1) if not (z & 1) else -((z + 1) >> 1)


def _write_varint(out, z):
    while z > 0x7F:
        out.append((z & 0x7F) | 0x80)
        z >>= 7
    out.append(z)


def serialize_table(code):
    """Canonical table bytes: u32 symbol count, then (varint symbol, u8 length)
    pairs in canonical (length, symbol) order."""
    out = bytearray()
    out += len(code.symbols).to_bytes(4, "little")
    canon = sorted(zip(code.lengths, code.symbols))
    for l, s in canon:
        _write_varint(out, _zigzag(s))
        out.append(l)
    return bytes(out)


def parse_table(data, offset=0):
    """Inverse of :func:`serialize_table`; returns ``(code, next_offset)``."""
    if offset + 4 > len(data):
        raise TruncatedContainerError("table header truncated")
    n = int.from_bytes(data[offset : offset + 4], "little")
    offset += 4
    if n == 0:
        raise KraftViolationError("code table must hold at least one symbol")
    pairs = []
    for _ in range(n):
        z = 0
        shift = 0
        while True:
            if offset >= len(data):
                raise TruncatedContainerError("table entry truncated")
            b = data[offset]
            offset += 1
            z |= (b & 0x7F) << shift
            shift += 7
            if not b & 0x80:
                break
            if shift > 70:
                raise KraftViolationError("symbol varint too long")
        if offset >= len(data):
            raise TruncatedContainerError("table entry truncated")
        length = data[offset]
        offset += 1
        pairs.append((_unzigzag(z), length))
    symbols = sorted(s for s, _ in pairs)
    if len(set(symbols)) != n:
        raise KraftViolationError("duplicate symbol in code table")
    by_symbol = dict(pairs)
    code = HuffmanCode.from_lengths(symbols, [by_symbol[s] for s in symbols])
    canon = sorted(zip(code.lengths, code.symbols))
    if [(s, l) for l, s in canon] != pairs:
        raise KraftViolationError("table entries are not in canonical order")
    return code, offset
