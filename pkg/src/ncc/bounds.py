"""Analytic upper bounds on the NCC decoding-failure probability.

Both bounds condition on a uniformly chosen codeword and t uniformly
placed error sites.  The first (union) bound counts codewords that have
some level occupied by at most 2t cells via the associated-Stirling
deficiency F_{2t+1}(n, k) and multiplies by a per-codeword error-pattern
bound 2kt/n.  The refined bound splits by the exact occupation h of the
weak level (block-size counts Gamma_h) and by the probability P(n, t, h)
that at least ceil(h/2) of the t errors land on that level.

All intermediate arithmetic is exact (integers and fractions); only the
returned value is floating point.  Raw values can exceed 1 for small n,
so results carry both the raw and the clamped value plus a flag for the
bound's stated range of validity in t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ncc.baselines import evenodd_rate
from ncc.codec import count_codewords, rate_ncc
from ncc.combinatorics import binomial, f_r, gamma_exact, stirling2

__all__ = [
    "BoundResult",
    "bound_thm_union",
    "bound_thm_refined",
    "asymptotic_p1",
    "occupancy_prob",
    "rate_gap",
]


@dataclass(frozen=True)
class BoundResult:
    """A probability bound: clamped value, raw (possibly > 1) value, and
    whether (n, t) lies in the bound's stated validity range."""

    value: float
    raw: float
    valid: bool


def _k_range(n: int, q: int):
    return range(1, min(n, (q + 1) // 2) + 1)


def bound_thm_union(n: int, q: int, t: int) -> BoundResult:
    """Union bound on the probability of failing to correct t errors.

    Valid for t <= floor(n/5) + 1.  Zero when t = 0.
    """
    if t < 0 or t > n:
        raise ValueError("t must lie in [0, n]")
    valid = t <= n // 5 + 1
    if t == 0:
        return BoundResult(0.0, 0.0, valid)
    m = count_codewords(n, q)
    total = Fraction(0)
    for k in _k_range(n, q):
        weak = f_r(2 * t + 1, n, k)
        combos = binomial(q - k + 1, k) - 1
        total += Fraction(math.factorial(k) * weak * combos * 2 * k * t, n)
    raw = total / m
    return BoundResult(float(min(raw, 1)), float(raw), valid)


def error_site_prob(n: int, t: int, h: int) -> Fraction:
    """Probability that at least ceil(h/2) of t uniform error sites hit a
    given level occupied by h cells (exact fraction)."""
    num = 0
    half = -(-h // 2)
    for j in range(0, h // 2 + 1):
        if t - half - j < 0:
            continue
        num += binomial(h, half + j) * binomial(n - h, t - half - j)
    return Fraction(num, binomial(n, t))


def bound_thm_refined(n: int, q: int, t: int) -> BoundResult:
    """Occupation-refined bound on the failure probability.

    Valid for t < floor(n/2).  Tighter than the union bound for small n.
    """
    if t < 0 or t > n:
        raise ValueError("t must lie in [0, n]")
    valid = t < n // 2
    if t == 0:
        return BoundResult(0.0, 0.0, valid)
    m = count_codewords(n, q)
    total = Fraction(0)
    for h in range(1, min(2 * t, n) + 1):
        p_site = error_site_prob(n, t, h)
        if p_site == 0:
            continue
        inner = 0
        for k in _k_range(n, q):
            if k < 2:
                continue
            inner += k * gamma_exact(h, n, k) * (binomial(q - k + 1, k) - 1)
        total += p_site * inner
    raw = total / m
    return BoundResult(float(min(raw, 1)), float(raw), valid)


def asymptotic_p1(n: int, q: int) -> float:
    """Large-n shape of the single-error failure probability: c*n*(1-2/q)^n
    with c = 2q^2 / ((q+2)(q-2)^2)."""
    if q <= 2:
        raise ValueError("asymptotic shape needs q > 2")
    c = 2 * q**2 / ((q + 2) * (q - 2) ** 2)
    return c * n * (1 - 2 / q) ** n


def occupancy_prob(n: int, q: int) -> float:
    """Probability that a uniform codeword occupies the maximal q/2 levels.

    Exact: (q/2)! S(n, q/2) (q/2 + 1) / M for even q; tends to 1 as n
    grows, which is why the rate approaches the even/odd rate.
    """
    if q % 2 != 0:
        raise ValueError("occupancy_prob assumes even q")
    k = q // 2
    num = math.factorial(k) * stirling2(n, k) * (k + 1)
    return float(Fraction(num, count_codewords(n, q)))


def rate_gap(n: int, q: int) -> float:
    """Rate advantage of the NCC code over the even/odd code at the same n.

    Positive for all n and O(1/n): n * gap tends to log_q((q/2 + 1)/2).
    """
    if q < 4 or q % 2 != 0:
        raise ValueError("rate comparison assumes even q >= 4")
    return rate_ncc(n, q) - evenodd_rate(n, q)
