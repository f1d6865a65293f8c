"""Baseline schemes for asymmetric magnitude-1 errors.

Three classical comparison points for the NCC code:

  - all-even: only even levels are used; any number of downward
    magnitude-1 errors is corrected by rounding odd levels up.
  - even/odd: all cells share the level parity; majority vote on the
    parities corrects up to floor((n-1)/2) errors.
  - LSB construction: protect only the least significant bits of the
    levels with a binary block code; a corrected LSB mismatch at a
    position means that cell dropped by one, so add one back.  With the
    binary repetition code this reduces exactly to even/odd; with
    BCH(15, 5, 7) it trades rate for correcting up to 3 errors.

Decoders return a :class:`BaselineDecodeResult`; ties (majority or
nearest-codeword) are resolved pessimistically: the received word is
returned unchanged and the failure flag is set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "BaselineDecodeResult",
    "evenodd_rate",
    "alleven_rate",
    "is_evenodd",
    "is_alleven",
    "evenodd_decode",
    "alleven_decode",
    "BinaryInnerCode",
    "repetition_code",
    "bch_15_5",
    "lsb_decode",
    "lsb_rate",
]


@dataclass(frozen=True)
class BaselineDecodeResult:
    word: tuple[int, ...]
    failed: bool


def evenodd_rate(n: int, q: int) -> float:
    """Rate of the shared-parity code: 1 - ((n-1)/n) log_q 2 (even q)."""
    return 1.0 - (n - 1) / n * math.log(2) / math.log(q)


def alleven_rate(q: int) -> float:
    """Rate of the even-levels-only code: 1 - log_q 2, independent of n."""
    return 1.0 - math.log(2) / math.log(q)


def is_evenodd(word) -> bool:
    parities = {c & 1 for c in word}
    return len(parities) == 1


def is_alleven(word) -> bool:
    return all(c % 2 == 0 for c in word)


def evenodd_decode(word, q: int) -> BaselineDecodeResult:
    """Majority vote on level parities; minority cells are bumped up by one.

    An exact parity split is declared a failure (the received word is
    returned unchanged).
    """
    n = len(word)
    odd = sum(c & 1 for c in word)
    even = n - odd
    if odd == even:
        return BaselineDecodeResult(tuple(word), failed=True)
    minority = 1 if odd < even else 0
    out = tuple(c + 1 if (c & 1) == minority else c for c in word)
    if any(c >= q for c in out):
        return BaselineDecodeResult(tuple(word), failed=True)
    return BaselineDecodeResult(out, failed=False)


def alleven_decode(word, q: int) -> BaselineDecodeResult:
    """Round every odd level up to the even level above it."""
    out = tuple(c + 1 if c & 1 else c for c in word)
    return BaselineDecodeResult(out, failed=False)


class BinaryInnerCode:
    """Explicit binary codebook decoded by exhaustive nearest-codeword search."""

    def __init__(self, name: str, codewords):
        self.name = name
        self.codewords = [tuple(c) for c in codewords]
        self.length = len(self.codewords[0])
        if any(len(c) != self.length for c in self.codewords):
            raise ValueError("codewords must share one length")
        if len(set(self.codewords)) != len(self.codewords):
            raise ValueError("codewords must be distinct")
        self._packed = [self._pack(c) for c in self.codewords]

    @staticmethod
    def _pack(bits) -> int:
        out = 0
        for b in bits:
            out = (out << 1) | (b & 1)
        return out

    def __repr__(self) -> str:
        return f"BinaryInnerCode({self.name}, n={self.length}, M={len(self.codewords)})"

    @property
    def dimension(self) -> int:
        return int(round(math.log2(len(self.codewords))))

    def min_distance(self) -> int:
        cws = self._packed
        return min(
            bin(a ^ b).count("1") for i, a in enumerate(cws) for b in cws[i + 1 :]
        )

    def nearest(self, bits) -> tuple[tuple[int, ...] | None, bool]:
        """Closest codeword in Hamming distance; (None, True) on a tie."""
        packed = self._pack(bits)
        best, best_d, tie = None, self.length + 1, False
        for cw, pk in zip(self.codewords, self._packed):
            d = bin(packed ^ pk).count("1")
            if d < best_d:
                best, best_d, tie = cw, d, False
            elif d == best_d:
                tie = True
        return (None, True) if tie else (best, False)


def repetition_code(n: int) -> BinaryInnerCode:
    return BinaryInnerCode(f"repetition-{n}", [(0,) * n, (1,) * n])


def bch_15_5() -> BinaryInnerCode:
    """The narrow-sense BCH(15, 5) code with minimum distance 7.

    Generator polynomial g(x) = lcm of the minimal polynomials of
    alpha, alpha^3, alpha^5 over GF(2):
    (x^4+x+1)(x^4+x^3+x^2+x+1)(x^2+x+1) = x^10+x^8+x^5+x^4+x^2+x+1.
    All 32 codewords are the multiples of g(x) modulo 2.
    """
    g = 0b10100110111
    codewords = []
    for msg in range(32):
        poly = 0
        for bit in range(5):
            if msg >> bit & 1:
                poly ^= g << bit
        codewords.append(tuple(poly >> (14 - i) & 1 for i in range(15)))
    return BinaryInnerCode("bch-15-5", codewords)


def lsb_rate(code: BinaryInnerCode, q: int) -> float:
    """Rate of the LSB construction in q-ary symbols per cell.

    Each cell carries log2(q/2) free upper bits; the LSB plane carries
    the inner code's k data bits per block of n cells.
    """
    n = code.length
    bits = n * math.log2(q / 2) + code.dimension
    return bits / (n * math.log2(q))


def lsb_decode(word, q: int, code: BinaryInnerCode) -> BaselineDecodeResult:
    """Decode the LSB plane with the inner code; bump mismatched cells up.

    Positions where the decoded LSB differs from the received LSB are
    incremented by one (the unique level in {c, c+1} with the decoded
    LSB).  Hamming-distance ties, or a required increment past q-1, are
    declared failures with the received word returned unchanged.
    """
    if len(word) != code.length:
        raise ValueError(f"word length {len(word)} != inner code length {code.length}")
    lsbs = [c & 1 for c in word]
    decoded, tie = code.nearest(lsbs)
    if tie:
        return BaselineDecodeResult(tuple(word), failed=True)
    out = list(word)
    for i, (got, want) in enumerate(zip(lsbs, decoded)):
        if got != want:
            if word[i] + 1 >= q:
                return BaselineDecodeResult(tuple(word), failed=True)
            out[i] = word[i] + 1
    return BaselineDecodeResult(tuple(out), failed=False)
