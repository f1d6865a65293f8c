"""Exact integer combinatorics for enumerative coding and failure bounds.

Everything in this module is computed with Python's unbounded integers:
Stirling-type counts overflow 64 bits already around n = 30, and the
encoder's rank arithmetic must be exact for the index mapping to stay
bijective.

Provided here:
  - binomial coefficients and Stirling numbers of the second kind,
  - r-associated Stirling numbers (all blocks of size >= r),
  - counts of set partitions with a block of a prescribed size,
  - lexicographic rank/unrank for subsets and permutations,
  - rank/unrank for set partitions following the Stirling recurrence.

Ranks for subsets and permutations are 1-based, matching the partition
enumeration; subsets live in the 0-based universe {0, ..., m-1}.
"""

from __future__ import annotations

import math
from functools import lru_cache

__all__ = [
    "binomial",
    "stirling2",
    "stirling2_assoc",
    "f_r",
    "gamma_exact",
    "gamma_upper",
    "rank_subset",
    "unrank_subset",
    "rank_perm",
    "unrank_perm",
    "stirpar",
    "stirpar_rank",
    "stirpar_order_rank",
]


def binomial(m: int, k: int) -> int:
    """C(m, k); zero when k > m."""
    if m < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if k > m:
        return 0
    return math.comb(m, k)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k).

    Number of partitions of an n-set into k nonempty blocks, via the
    recurrence S(n, k) = k*S(n-1, k) + S(n-1, k-1).
    """
    if n < 0 or k < 0:
        raise ValueError("stirling2 arguments must be nonnegative")
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def stirling2_assoc(r: int, n: int, k: int) -> int:
    """r-associated Stirling number S_r(n, k): all k blocks of size >= r.

    Recurrence: S_r(n, k) = k*S_r(n-1, k) + C(n-1, r-1)*S_r(n-r, k-1)
    (the last element either joins one of the k existing blocks, or it
    founds a new block together with r-1 of the remaining n-1 elements).
    """
    if r < 1:
        raise ValueError("block-size threshold r must be >= 1")
    if n < 0 or k < 0:
        raise ValueError("stirling2_assoc arguments must be nonnegative")
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0 or n < r * k:
        return 0
    return k * stirling2_assoc(r, n - 1, k) + binomial(n - 1, r - 1) * stirling2_assoc(r, n - r, k - 1)


def f_r(r: int, n: int, k: int) -> int:
    """Partitions of an n-set into k blocks with some block smaller than r.

    F_r(n, k) = S(n, k) - S_r(n, k); nonnegative by inclusion.
    """
    return stirling2(n, k) - stirling2_assoc(r, n, k)


def gamma_exact(h: int, n: int, k: int) -> int:
    """Partitions of an n-set into k blocks with a block of size exactly h.

    Inclusion-exclusion over the number j of blocks pinned to size h:
    there are n! / ((n-jh)! j! (h!)^j) ways to pick j disjoint h-blocks,
    and S(n-jh, k-j) partitions of the rest.  The j = 0 term is S(n, k),
    so the complement (no block of size h) is the alternating sum and the
    wanted count keeps the j >= 1 terms with flipped signs.
    """
    if h < 1:
        raise ValueError("block size h must be >= 1")
    total = 0
    fact_n = math.factorial(n)
    fact_h = math.factorial(h)
    for j in range(1, min(k, n // h) + 1):
        ways = fact_n // (math.factorial(n - j * h) * math.factorial(j) * fact_h**j)
        term = ways * stirling2(n - j * h, k - j)
        total += term if j % 2 == 1 else -term
    return total


def gamma_upper(h: int, n: int, k: int) -> int:
    """Upper bound on gamma_exact: C(n, h) * k! * S(n-h, k-1).

    Over-counts by assigning one block of size h first and partitioning
    the remaining cells into the other k-1 blocks.
    """
    if h < 1:
        raise ValueError("block size h must be >= 1")
    if h > n:
        return 0
    return binomial(n, h) * math.factorial(k) * stirling2(n - h, k - 1)


def unrank_subset(m: int, k: int, j: int) -> tuple[int, ...]:
    """The j-th k-subset of {0, ..., m-1} in lexicographic order, j in [1, C(m,k)].

    Subsets are compared as sorted tuples; rank 1 is (0, 1, ..., k-1).
    """
    total = binomial(m, k)
    if not 1 <= j <= total:
        raise ValueError(f"subset rank {j} out of range [1, {total}]")
    r = j - 1
    out = []
    a = 0
    for remaining in range(k, 0, -1):
        # count of subsets starting at candidate element a
        while True:
            block = binomial(m - a - 1, remaining - 1)
            if r < block:
                break
            r -= block
            a += 1
        out.append(a)
        a += 1
    return tuple(out)


def rank_subset(m: int, subset) -> int:
    """Inverse of unrank_subset; expects a strictly increasing subset of {0..m-1}."""
    s = tuple(subset)
    k = len(s)
    if any(not 0 <= x < m for x in s) or any(a >= b for a, b in zip(s, s[1:])):
        raise ValueError("subset must be strictly increasing within the universe")
    r = 0
    prev = -1
    for i, x in enumerate(s):
        for a in range(prev + 1, x):
            r += binomial(m - a - 1, k - i - 1)
        prev = x
    return r + 1


def unrank_perm(k: int, i: int) -> tuple[int, ...]:
    """The i-th permutation of (1, ..., k) in lexicographic order, i in [1, k!]."""
    total = math.factorial(k)
    if not 1 <= i <= total:
        raise ValueError(f"permutation rank {i} out of range [1, {total}]")
    r = i - 1
    pool = list(range(1, k + 1))
    out = []
    for pos in range(k, 0, -1):
        f = math.factorial(pos - 1)
        idx, r = divmod(r, f)
        out.append(pool.pop(idx))
    return tuple(out)


def rank_perm(perm) -> int:
    """Inverse of unrank_perm for a permutation of (1, ..., k)."""
    p = list(perm)
    k = len(p)
    if sorted(p) != list(range(1, k + 1)):
        raise ValueError("input is not a permutation of 1..k")
    r = 0
    pool = list(range(1, k + 1))
    for pos, x in enumerate(p):
        idx = pool.index(x)
        r += idx * math.factorial(k - pos - 1)
        pool.pop(idx)
    return r + 1


def stirpar(n: int, k: int, x: int) -> list[frozenset[int]]:
    """Unrank a set partition: the x-th partition of {1..n} into k blocks.

    Follows the Stirling recurrence S(n, k) = k*S(n-1, k) + S(n-1, k-1):
    ranks up to k*S(n-1, k) place element n into block 1..k of a smaller
    partition, larger ranks open a new singleton block for it.  Ranks are
    1-based over [1, S(n, k)].  Block order is structural (it carries
    information for the partition rank), not sorted.
    """
    if not 1 <= x <= stirling2(n, k):
        raise ValueError(f"partition rank {x} out of range [1, {stirling2(n, k)}]")
    if n == k:
        return [frozenset({i}) for i in range(1, n + 1)]
    if k == 1:
        return [frozenset(range(1, n + 1))]
    s_sub = stirling2(n - 1, k)
    x_new = x - k * s_sub
    if x_new > 0:
        rest = stirpar(n - 1, k - 1, x_new)
        return [frozenset({n})] + rest
    kk = -(-x // s_sub)  # ceil
    rest = stirpar(n - 1, k, x - (kk - 1) * s_sub)
    rest[kk - 1] = rest[kk - 1] | {n}
    return rest


def stirpar_rank(blocks, n: int | None = None) -> int:
    """Rank of an ordered partition as produced by stirpar (its inverse)."""
    parts = [frozenset(b) for b in blocks]
    k = len(parts)
    if n is None:
        n = sum(len(b) for b in parts)
    _check_partition(parts, n)
    return _rank_ordered(parts, n, k)


def stirpar_order_rank(blocks, n: int | None = None) -> tuple[list[frozenset[int]], int]:
    """Recover stirpar's block order and rank from an unordered set of blocks.

    The enumeration order is reconstructible from the block contents: the
    largest element either sits in a singleton block (which the recursion
    puts first) or was appended to a block of the smaller partition.
    Returns (ordered blocks, rank).
    """
    parts = [frozenset(b) for b in blocks]
    k = len(parts)
    if n is None:
        n = sum(len(b) for b in parts)
    _check_partition(parts, n)
    return _order_rank(frozenset(parts), n, k)


def _check_partition(parts, n: int) -> None:
    seen: set[int] = set()
    for b in parts:
        if not b:
            raise ValueError("partition blocks must be nonempty")
        seen.update(b)
    if len(seen) != sum(len(b) for b in parts) or seen != set(range(1, n + 1)):
        raise ValueError(f"blocks do not partition 1..{n}")


def _rank_ordered(parts: list[frozenset[int]], n: int, k: int) -> int:
    if n == k:
        if parts != [frozenset({i}) for i in range(1, n + 1)]:
            raise ValueError("not a partition in enumeration order")
        return 1
    if k == 1:
        return 1
    s_sub = stirling2(n - 1, k)
    if parts[0] == frozenset({n}):
        return k * s_sub + _rank_ordered(parts[1:], n - 1, k - 1)
    idx = next(i for i, b in enumerate(parts) if n in b)
    if len(parts[idx]) < 2:
        raise ValueError("not a partition in enumeration order")
    sub = list(parts)
    sub[idx] = parts[idx] - {n}
    return idx * s_sub + _rank_ordered(sub, n - 1, k)


def _order_rank(parts: frozenset[frozenset[int]], n: int, k: int):
    if n == k:
        return [frozenset({i}) for i in range(1, n + 1)], 1
    if k == 1:
        return list(parts), 1
    s_sub = stirling2(n - 1, k)
    home = next(b for b in parts if n in b)
    if len(home) == 1:
        ordered, x = _order_rank(parts - {home}, n - 1, k - 1)
        return [home] + ordered, k * s_sub + x
    reduced = home - {n}
    ordered, x = _order_rank(parts - {home} | {reduced}, n - 1, k)
    idx = ordered.index(reduced)
    ordered[idx] = home
    return ordered, idx * s_sub + x
