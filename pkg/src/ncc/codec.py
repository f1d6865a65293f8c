"""Encoder, index decoder and optimal histogram decoder for NCC codes.

An NCC(n, q) codeword is a word of n cells over levels {0, ..., q-1}
whose histogram has no two adjacent occupied levels.  The number of
codewords factorises over the occupied-level count k as

    M = sum_k  k! * S(n, k) * C(q-k+1, k)

(surjections onto k levels times non-consecutive k-subsets of levels),
and the encoder turns that counting formula into a mixed-radix index:
a cumulative table over k, then a (permutation, level-subset, partition)
triple unranked with the lexicographic enumerations from
:mod:`ncc.combinatorics`.

Decoding a corrupted word is a per-section dynamic program.  A burst of
consecutive occupied levels is resolved by moving every other level up
one step, either keeping the burst's top level in place (``sigma``) or
pushing the top level up (``sigma_bar``, impossible at level q-1).
Bursts separated by a single empty level are coupled: a resolution that
leaves the burst's bottom level occupied forces the burst below it to
keep its top in place.  The DP tracks both options per burst and picks
the assignment with the fewest moved cells.  Cost ties are broken
deterministically in favour of sigma_bar (push the top up), which both
keeps results reproducible and recovers the transmitted word in the most
common tie topology, where a fallen cell lands directly above a clean
level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from ncc.combinatorics import (
    binomial,
    rank_perm,
    rank_subset,
    stirling2,
    stirpar,
    stirpar_order_rank,
    unrank_perm,
    unrank_subset,
)
from ncc.histograms import Section, decompose, histogram_of, is_ncc, validate_word

__all__ = [
    "UndecodableError",
    "count_codewords",
    "rate_ncc",
    "lookup_table",
    "NccCode",
    "HistDecodeResult",
    "decode_histogram",
    "decode_word",
]

SIGMA, SIGMA_BAR = 0, 1


class UndecodableError(Exception):
    """No finite-cost resolution exists for some section of the histogram."""


def _max_levels(n: int, q: int) -> int:
    """Largest possible number of occupied levels: non-consecutive subsets of
    size k exist only for k <= ceil(q/2), and surjections need k <= n."""
    return min(n, (q + 1) // 2)


def lookup_table(n: int, q: int) -> list[int]:
    """Cumulative codeword counts over the occupied-level count k.

    Entry k-1 holds the number of codewords with at most k occupied
    levels; the last entry is the code size M.
    """
    if n < 1 or q < 2:
        raise ValueError("need n >= 1 and q >= 2")
    out = []
    acc = 0
    for k in range(1, _max_levels(n, q) + 1):
        acc += math.factorial(k) * stirling2(n, k) * binomial(q - k + 1, k)
        out.append(acc)
    return out


def count_codewords(n: int, q: int) -> int:
    """Exact number of NCC(n, q) codewords."""
    return lookup_table(n, q)[-1]


def rate_ncc(n: int, q: int) -> float:
    """Information rate in q-ary symbols per cell: log_q(M) / n."""
    m = count_codewords(n, q)
    return math.log(m) / (n * math.log(q))


class NccCode:
    """Enumerative NCC(n, q) code with a bijective index <-> word mapping."""

    def __init__(self, n: int, q: int):
        if n < 1 or q < 2:
            raise ValueError("need n >= 1 and q >= 2")
        self.n = n
        self.q = q
        self.lut = lookup_table(n, q)
        self.size = self.lut[-1]

    @property
    def rate(self) -> float:
        return math.log(self.size) / (self.n * math.log(self.q))

    def __repr__(self) -> str:
        return f"NccCode(n={self.n}, q={self.q}, size={self.size})"

    def encode(self, x: int) -> tuple[int, ...]:
        """Map an index in [0, M) to a codeword.

        The index is split into the occupied-level count k (cumulative
        table), a permutation rank, a level-subset rank and a partition
        rank, each unranked with the module's fixed lexicographic
        conventions.
        """
        if not 0 <= x < self.size:
            raise ValueError(f"index {x} out of range [0, {self.size})")
        n, q = self.n, self.q
        k = next(i + 1 for i, bound in enumerate(self.lut) if x < bound)
        y = x - (self.lut[k - 2] if k >= 2 else 0)

        s_nk = stirling2(n, k)
        c_nk = binomial(q - k + 1, k)
        i_perm, rem = divmod(y, s_nk * c_nk)
        j_subset, y_part = divmod(rem, s_nk)

        # occupied levels: spread a k-subset of {0..q-k} to a non-consecutive set
        base = sorted(unrank_subset(q - k + 1, k, j_subset + 1))
        levels = [base[i] + i for i in range(k)]

        blocks = stirpar(n, k, y_part + 1)
        perm = unrank_perm(k, i_perm + 1)

        word = [0] * n
        for i in range(k):
            for cell in blocks[perm[i] - 1]:
                word[cell - 1] = levels[i]
        return tuple(word)

    def decode_index(self, word) -> int:
        """Inverse of :meth:`encode`; raises ValueError on non-codewords."""
        n, q = self.n, self.q
        if len(word) != n:
            raise ValueError(f"word length {len(word)} != n = {n}")
        h = histogram_of(word, q)
        if not is_ncc(h):
            raise ValueError("word violates the non-consecutive constraint")

        levels = [lvl for lvl in range(q) if h[lvl] > 0]
        k = len(levels)
        base = [levels[i] - i for i in range(k)]
        j_subset = rank_subset(q - k + 1, base)

        by_level = [frozenset(i + 1 for i, c in enumerate(word) if c == lvl) for lvl in levels]
        ordered, y_part = stirpar_order_rank(by_level)
        perm = [ordered.index(block) + 1 for block in by_level]
        i_perm = rank_perm(perm)

        s_nk = stirling2(n, k)
        c_nk = binomial(q - k + 1, k)
        y = (i_perm - 1) * s_nk * c_nk + (j_subset - 1) * s_nk + (y_part - 1)
        return y + (self.lut[k - 2] if k >= 2 else 0)

    def decode_word(self, word) -> tuple[int, ...]:
        """Nearest-codeword correction of a received word; see decode_word()."""
        return decode_word(word, self.q)


@dataclass(frozen=True)
class HistDecodeResult:
    """Outcome of histogram decoding.

    ``histogram`` is the decoded NCC histogram, ``cost`` the number of
    cells moved up, and ``moved_levels`` the set of levels whose entire
    occupation was shifted one level up.
    """

    histogram: tuple[int, ...]
    cost: int
    moved_levels: frozenset[int]


def _burst_options(start: int, counts: tuple[int, ...], q: int):
    """Cost and moved levels for the two resolutions of one burst.

    Relative to the burst's top level, sigma moves the levels at odd
    offsets below the top (top stays), sigma_bar moves the even offsets
    including the top (infinite cost when the top is q-1).
    """
    length = len(counts)
    top = start + length - 1
    sigma_levels = tuple(start + i for i in range(length - 2, -1, -2))
    sigbar_levels = tuple(start + i for i in range(length - 1, -1, -2))
    sigma_cost = sum(counts[lvl - start] for lvl in sigma_levels)
    if top == q - 1:
        sigbar_cost: float | int = math.inf
    else:
        sigbar_cost = sum(counts[lvl - start] for lvl in sigbar_levels)
    return (sigma_cost, sigma_levels), (sigbar_cost, sigbar_levels)


def _decode_section(section: Section, q: int) -> tuple[int, list[int]]:
    """Minimal-cost movement choice per burst of one section.

    Coupling rule between bursts separated by one empty level: if the
    resolution of burst j leaves its bottom level occupied (sigma for
    odd-length bursts, sigma_bar for even-length ones), burst j-1 must
    not push its top level into the gap, i.e. must use sigma.
    """
    bursts = section.bursts
    options = [_burst_options(b.start, b.counts, q) for b in bursts]

    costs = [[0, 0] for _ in bursts]
    parent = [[SIGMA, SIGMA] for _ in bursts]
    costs[0][SIGMA] = options[0][SIGMA][0]
    costs[0][SIGMA_BAR] = options[0][SIGMA_BAR][0]

    for j in range(1, len(bursts)):
        odd = len(bursts[j].counts) % 2 == 1
        prev_sigma, prev_sigbar = costs[j - 1]
        best_prev = SIGMA_BAR if prev_sigbar <= prev_sigma else SIGMA
        for action in (SIGMA, SIGMA_BAR):
            keeps_bottom = odd if action == SIGMA else not odd
            if keeps_bottom:
                costs[j][action] = options[j][action][0] + prev_sigma
                parent[j][action] = SIGMA
            else:
                costs[j][action] = options[j][action][0] + costs[j - 1][best_prev]
                parent[j][action] = best_prev

    last = len(bursts) - 1
    final = SIGMA_BAR if costs[last][SIGMA_BAR] <= costs[last][SIGMA] else SIGMA
    total = costs[last][final]
    if total == math.inf:
        raise UndecodableError("section has no finite-cost resolution")

    actions = [SIGMA] * len(bursts)
    state = final
    for j in range(last, -1, -1):
        actions[j] = state
        state = parent[j][state]
    return total, actions


def decode_histogram(h) -> HistDecodeResult:
    """Correct a histogram to the nearest NCC histogram by upward moves.

    Sections are independent; each burst within a section is resolved by
    the coupled dynamic program, minimising the total number of cells
    moved up by one level.  Ties prefer pushing burst tops up.
    """
    q = len(h)
    if any(c < 0 for c in h):
        raise ValueError("histogram entries must be nonnegative")
    total = 0
    moved: set[int] = set()
    for section in decompose(h):
        cost, actions = _decode_section(section, q)
        total += cost
        for burst, action in zip(section.bursts, actions):
            opts = _burst_options(burst.start, burst.counts, q)
            moved.update(opts[action][1])

    out = list(h)
    for lvl in moved:
        out[lvl + 1] += h[lvl]
        out[lvl] -= h[lvl]
    return HistDecodeResult(tuple(out), total, frozenset(moved))


def decode_word(word, q: int) -> tuple[int, ...]:
    """Correct a received word: every cell on a moved level steps up by one."""
    validate_word(word, q)
    res = decode_histogram(histogram_of(word, q))
    return tuple(c + 1 if c in res.moved_levels else c for c in word)
