"""Information-theoretic toolkit for the q-ary Z-channel.

The channel drops each input symbol x >= 1 to x - 1 with probability p
and leaves it at x otherwise; symbol 0 never moves (no wrap-around).  It
models a memory cell exposed to asymmetric magnitude-1 errors.

Capacity is found by Blahut-Arimoto alternating maximisation with a
duality-gap stopping rule: with output distribution q_y induced by the
current input distribution r, the relative entropies
D_x = D(W(.|x) || q_y) bound the capacity by
log sum_x r(x) e^{D_x}  <=  C  <=  max_x D_x, and the update multiplies
r by e^{D_x} and renormalises.  The dispersion (conditional variance of
the information density at the capacity-achieving pair) feeds the
finite-blocklength normal-approximation converse.

Entropy quantities are in bits throughout; convert rates to q-ary
symbols per cell by dividing by log2(q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

__all__ = [
    "ChannelSpec",
    "binary_entropy",
    "output_dist",
    "mutual_information",
    "CapacityResult",
    "capacity",
    "dispersion",
    "converse",
]


@dataclass(frozen=True)
class ChannelSpec:
    """q-ary Z-channel: level x >= 1 falls to x-1 with probability p."""

    q: int
    p: float

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("alphabet size must be >= 2")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("transition probability must lie in [0, 1]")

    def transition_matrix(self) -> np.ndarray:
        """Row-stochastic matrix W[x, y] = P(Y = y | X = x)."""
        w = np.zeros((self.q, self.q))
        w[0, 0] = 1.0
        for x in range(1, self.q):
            w[x, x] = 1.0 - self.p
            w[x, x - 1] = self.p
        return w


def binary_entropy(p: float) -> float:
    """h2(p) in bits, with 0 log 0 = 0."""
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


def _check_dist(dist, q: int) -> np.ndarray:
    d = np.asarray(dist, dtype=float)
    if d.shape != (q,):
        raise ValueError(f"distribution must have length {q}")
    if (d < -1e-12).any() or abs(d.sum() - 1.0) > 1e-9:
        raise ValueError("input must be a probability distribution")
    return np.clip(d, 0.0, None)


def output_dist(dist, ch: ChannelSpec) -> np.ndarray:
    """Output distribution of the channel for input distribution dist.

    Computed casewise in O(q): output 0 keeps input 0 and catches the
    falling mass from 1; output q-1 only keeps its own surviving mass;
    interior outputs mix survival from y and the fall from y+1.
    """
    d = _check_dist(dist, ch.q)
    p, q = ch.p, ch.q
    out = np.empty(q)
    out[0] = d[0] + p * d[1] if q > 1 else d[0]
    out[q - 1] = (1 - p) * d[q - 1]
    for y in range(1, q - 1):
        out[y] = (1 - p) * d[y] + p * d[y + 1]
    return out


def mutual_information(dist, ch: ChannelSpec) -> float:
    """I(X; Y) in bits: H(Y) minus h2(p) times the mass free to fall.

    Every input except level 0 sees the same binary fall/stay lottery,
    so H(Y|X) = (1 - p(x=0)) h2(p).
    """
    d = _check_dist(dist, ch.q)
    py = output_dist(d, ch)
    h_y = float(-np.sum(py[py > 0] * np.log2(py[py > 0])))
    return h_y - (1.0 - d[0]) * binary_entropy(ch.p)


@dataclass(frozen=True)
class CapacityResult:
    """Capacity of a channel with the input distribution achieving it.

    ``capacity_bits`` and ``capacity_symbols`` (q-ary symbols per cell =
    bits / log2 q); ``dist`` the capacity-achieving input distribution;
    ``iterations`` used; ``gap`` the final duality-gap estimate (bits).
    """

    capacity_bits: float
    capacity_symbols: float
    dist: np.ndarray
    iterations: int
    gap: float


def capacity(ch: ChannelSpec, tol: float = 1e-10, max_iter: int = 10**6) -> CapacityResult:
    """Blahut-Arimoto capacity of the channel to duality gap <= tol bits."""
    q = ch.q
    w = ch.transition_matrix()
    mask = w > 0
    log_w = np.where(mask, np.log(np.where(mask, w, 1.0)), 0.0)
    r = np.full(q, 1.0 / q)
    lower = 0.0
    gap = math.inf
    for it in range(1, max_iter + 1):
        qy = r @ w
        log_qy = np.where(qy > 0, np.log(np.where(qy > 0, qy, 1.0)), 0.0)
        d_x = np.sum(np.where(mask, w * (log_w - log_qy), 0.0), axis=1)
        d_max = float(d_x.max())
        weights = r * np.exp(d_x - d_max)
        z = float(weights.sum())
        lower = math.log(z) + d_max
        gap = (d_max - lower) / math.log(2)
        r = weights / z
        if gap <= tol:
            break
    else:
        raise RuntimeError(f"capacity solver did not reach gap {tol} in {max_iter} iterations")
    bits = lower / math.log(2)
    return CapacityResult(bits, bits / math.log2(q), r, it, gap)


def dispersion(ch: ChannelSpec, result: CapacityResult | None = None) -> float:
    """Channel dispersion V = E_x Var_y[i(x, Y)] in bits^2 at capacity.

    i(x, y) = log2 W(y|x)/P_Y(y) is the information density under the
    capacity-achieving input distribution.
    """
    if result is None:
        result = capacity(ch)
    w = ch.transition_matrix()
    mask = w > 0
    py = output_dist(result.dist, ch)
    log_py = np.where(py > 0, np.log2(np.where(py > 0, py, 1.0)), 0.0)
    dens = np.where(mask, np.log2(np.where(mask, w, 1.0)) - log_py, 0.0)
    mean_x = np.sum(np.where(mask, w * dens, 0.0), axis=1)
    var_x = np.sum(np.where(mask, w * (dens - mean_x[:, None]) ** 2, 0.0), axis=1)
    return float(np.sum(result.dist * var_x))


def converse(n: int, eps: float, ch: ChannelSpec, result: CapacityResult | None = None) -> float:
    """Normal-approximation converse on the largest code size, in bits.

    log2 M*(n, eps) <= n C - sqrt(n V) Q^{-1}(eps) + (1/2) log2 n, with
    the O(1) term taken as zero.  Increasing in eps; equals
    n C + (1/2) log2 n at eps = 1/2.
    """
    if n < 1:
        raise ValueError("blocklength must be >= 1")
    if not 0.0 < eps < 1.0:
        raise ValueError("error probability must lie in (0, 1)")
    if result is None:
        result = capacity(ch)
    v = dispersion(ch, result)
    q_inv = -float(ndtri(eps))
    return n * result.capacity_bits - math.sqrt(n * v) * q_inv + 0.5 * math.log2(n)
