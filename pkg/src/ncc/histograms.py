"""Histogram algebra for words over a q-ary alphabet with downward errors.

Correctability of asymmetric magnitude-1 errors depends on a word only
through its level histogram, so the constraint checks, error application,
difference vectors, distances and confusability predicates all live at the
histogram level.  Histograms are plain sequences of q nonnegative counts;
an error histogram counts, per level i, the cells that dropped i -> i-1
(entry 0 is structurally zero: level 0 cannot decrease).

The downward/upward difference machinery uses the cumulative map
v_i = -sum_{j>=i} (h2 - h1)_j (v_0 = 0); its positive part is the downward
difference d and its negative part the upward difference d_up.  Two
histograms can be mistaken for each other under at most t errors exactly
when d <= h1, d_up <= h2 elementwise and |d_up| <= |d| <= t.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "histogram_of",
    "word_from_histogram",
    "is_ncc",
    "validate_word",
    "apply_errors",
    "diff",
    "distances",
    "t_confusable",
    "guaranteed_correctable_sufficient",
    "min_confusable_t",
    "ncc_histograms",
    "Burst",
    "Section",
    "decompose",
]


def validate_word(word, q: int) -> None:
    """Raise ValueError unless every level lies in {0, ..., q-1} and n >= 1."""
    if len(word) < 1:
        raise ValueError("word must have at least one cell")
    if any(not 0 <= c < q for c in word):
        raise ValueError(f"cell level out of range for q={q}")


def histogram_of(word, q: int) -> list[int]:
    """Level histogram of a word: entry i counts cells at level i."""
    validate_word(word, q)
    h = [0] * q
    for c in word:
        h[c] += 1
    return h


def word_from_histogram(h) -> list[int]:
    """A canonical word with histogram h (levels in nondecreasing order)."""
    out: list[int] = []
    for level, count in enumerate(h):
        out.extend([level] * count)
    return out


def is_ncc(h) -> bool:
    """True when no two adjacent levels are both occupied."""
    return all(h[i] == 0 or h[i + 1] == 0 for i in range(len(h) - 1))


def _check_same_shape(h1, h2) -> None:
    if len(h1) != len(h2):
        raise ValueError("histograms must share the alphabet size q")
    if sum(h1) != sum(h2):
        raise ValueError("histograms must share the cell count n")


def apply_errors(h, e) -> list[int]:
    """Histogram after the error histogram e acts on h.

    Entry i of e cells drop from level i to i-1, so the received histogram
    is w_i = h_i - e_i + e_{i+1} (with e_q = 0).  Requires e <= h
    elementwise and e_0 = 0.
    """
    q = len(h)
    if len(e) != q:
        raise ValueError("error histogram must have length q")
    if e[0] != 0:
        raise ValueError("level 0 cannot lose cells: e[0] must be 0")
    if any(x < 0 for x in e) or any(e[i] > h[i] for i in range(q)):
        raise ValueError("error histogram must satisfy 0 <= e <= h")
    return [h[i] - e[i] + (e[i + 1] if i + 1 < q else 0) for i in range(q)]


@dataclass(frozen=True)
class DiffPair:
    """Downward and upward difference vectors between two histograms."""

    down: tuple[int, ...]
    up: tuple[int, ...]


def diff(h1, h2) -> DiffPair:
    """Difference vectors (d, d_up): moving d down and d_up up turns h1 into h2."""
    _check_same_shape(h1, h2)
    q = len(h1)
    v = [0] * q
    suffix = 0
    for i in range(q - 1, 0, -1):
        suffix += h2[i] - h1[i]
        v[i] = -suffix
    down = tuple(x if x > 0 else 0 for x in v)
    up = tuple(-x if x < 0 else 0 for x in v)
    return DiffPair(down, up)


def distances(h1, h2) -> tuple[int, int]:
    """(downward distance, upward distance): L1 norms of the difference pair."""
    pair = diff(h1, h2)
    return sum(pair.down), sum(pair.up)


def t_confusable(h1, h2, t: int) -> bool:
    """True when h1 can be mistaken for h2 after at most t downward errors.

    Requires the downward part to fit inside h1, the upward part inside
    h2, and the move counts to satisfy up <= down <= t.
    """
    pair = diff(h1, h2)
    if any(d > a for d, a in zip(pair.down, h1)):
        return False
    if any(u > b for u, b in zip(pair.up, h2)):
        return False
    down, up = sum(pair.down), sum(pair.up)
    return up <= down <= t


def guaranteed_correctable_sufficient(h, t: int) -> bool:
    """Sufficient occupancy condition for correcting any t downward errors.

    Every occupied level must hold more than 2t cells.  A level holding
    exactly 2t cells is still safe unless its entire occupation could be
    shifted one level up, which needs room above (i < q-1), errors below
    (i > 0) and empty levels at distance two on both sides.
    """
    q = len(h)
    for i, c in enumerate(h):
        if c == 0 or c > 2 * t:
            continue
        if c < 2 * t:
            return False
        if i == 0 or i == q - 1:
            continue
        below = h[i - 2] if i >= 2 else 0
        above = h[i + 2] if i + 2 < q else 0
        if below == 0 and above == 0:
            return False
    return True


def ncc_histograms(n: int, q: int):
    """Yield every length-q histogram of n cells with non-consecutive support."""
    levels = list(range(q))
    for k in range(1, q + 1):
        for support in combinations(levels, k):
            if any(b - a == 1 for a, b in zip(support, support[1:])):
                continue
            for comp in _compositions(n, k):
                h = [0] * q
                for level, count in zip(support, comp):
                    h[level] = count
                yield h


def _compositions(n: int, k: int):
    """All k-tuples of positive integers summing to n."""
    if k == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def min_confusable_t(h) -> int | None:
    """Smallest t for which some other NCC histogram is t-confusable with h.

    Exhaustive scan over all NCC histograms with the same n and q; None
    when no confusion is possible at any t.  Intended as a test oracle for
    small n, q.
    """
    n, q = sum(h), len(h)
    best: int | None = None
    h_list = list(h)
    for g in ncc_histograms(n, q):
        if g == h_list:
            continue
        pair = diff(h, g)
        if any(d > a for d, a in zip(pair.down, h)):
            continue
        if any(u > b for u, b in zip(pair.up, g)):
            continue
        down, up = sum(pair.down), sum(pair.up)
        if up <= down and (best is None or down < best):
            best = down
    return best


@dataclass(frozen=True)
class Burst:
    """Maximal run of consecutive occupied levels inside a section."""

    start: int
    counts: tuple[int, ...]

    @property
    def top(self) -> int:
        return self.start + len(self.counts) - 1


@dataclass(frozen=True)
class Section:
    """Histogram slice isolated from the rest by at least two empty levels."""

    start: int
    counts: tuple[int, ...]
    bursts: tuple[Burst, ...]


def decompose(h) -> list[Section]:
    """Split a histogram into sections and their bursts.

    Sections are separated by two or more empty levels and can be decoded
    independently; inside a section, occupied runs (bursts) are separated
    by single empty levels.
    """
    q = len(h)
    occupied = [i for i in range(q) if h[i] > 0]
    if not occupied:
        return []
    groups: list[list[int]] = [[occupied[0]]]
    for lvl in occupied[1:]:
        if lvl - groups[-1][-1] >= 3:
            groups.append([lvl])
        else:
            groups[-1].append(lvl)
    sections = []
    for grp in groups:
        lo, hi = grp[0], grp[-1]
        counts = tuple(h[lo : hi + 1])
        bursts = []
        i = 0
        while i < len(counts):
            if counts[i] == 0:
                i += 1
                continue
            j = i
            while j < len(counts) and counts[j] > 0:
                j += 1
            bursts.append(Burst(lo + i, counts[i:j]))
            i = j
        sections.append(Section(lo, counts, tuple(bursts)))
    return sections
