"""Slow definitional reference transforms.

Every fast kernel in the package is judged against direct O(N^2)
summation of its defining formula.  Two precautions keep the reference
meaningfully more accurate than the kernels it checks without resorting
to extended precision:

* trigonometric terms come from a table built entry-by-entry with the
  argument reduced to one octant (never by recurrence), indexed by the
  exact integer phase ``n*k mod period``;
* accumulation uses Neumaier compensated summation by default, carrying
  a running error term per output bin (vectorized across bins, sequential
  over the summation index).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .dct2 import Normalization
from .scale_factors import unit_root

__all__ = [
    "OracleConfig",
    "naive_dft",
    "naive_dct2",
    "naive_dct3",
    "naive_dst2",
    "naive_dst3",
    "embed_4n",
]


@dataclass(frozen=True)
class OracleConfig:
    """Bundle of reference-transform options; compensated summation is the
    default for all acceptance runs."""

    summation: str = "compensated"
    kind: str = "dft"
    normalization: Normalization = Normalization.TWO_SIDED


class _Accumulator:
    # Neumaier-compensated elementwise sums across all output bins
    def __init__(self, n, compensated):
        self.s = np.zeros(n)
        self.c = np.zeros(n)
        self.compensated = compensated

    def add(self, term):
        if not self.compensated:
            self.s += term
            return
        t = self.s + term
        big = np.abs(self.s) >= np.abs(term)
        self.c += np.where(big, (self.s - t) + term, (term - t) + self.s)
        self.s = t

    def value(self):
        return self.s + self.c


def _check_mode(summation):
    if summation not in ("compensated", "plain"):
        raise ValueError(f"summation must be 'compensated' or 'plain': {summation!r}")
    return summation == "compensated"


@lru_cache(maxsize=None)
def _roots(n):
    return np.array([unit_root(j, n) for j in range(n)])


@lru_cache(maxsize=None)
def _quarter_wave(n4):
    # cos(2*pi*j/n4) and sin(2*pi*j/n4) for one full period of length n4
    w = _roots(n4)
    return w.real.copy(), (-w.imag).copy()


def naive_dft(x, summation="compensated"):
    """X[k] = sum_n x[n] * exp(-2*pi*i*n*k/N) by direct summation."""
    comp = _check_mode(summation)
    xs = np.asarray(x, dtype=complex)
    n = len(xs)
    if n == 0:
        raise ValueError("empty signal")
    w = _roots(n)
    ks = np.arange(n, dtype=np.int64)
    re = _Accumulator(n, comp)
    im = _Accumulator(n, comp)
    for j in range(n):
        t = xs[j] * w[(j * ks) % n]
        re.add(t.real)
        im.add(t.imag)
    return re.value() + 1j * im.value()


def _cos_sum(x, phases_for, weights, n_out, table_size, use_sin, comp):
    cos_t, sin_t = _quarter_wave(table_size)
    table = sin_t if use_sin else cos_t
    acc = _Accumulator(n_out, comp)
    ks = np.arange(n_out, dtype=np.int64)
    for j, xv in enumerate(x):
        idx = phases_for(j, ks) % table_size
        acc.add((weights[j] * xv) * table[idx])
    return acc.value()


def _dct2_prefactor(n, norm, k):
    # row factors applied after the raw cosine sum
    if norm is Normalization.TWO_SIDED:
        return np.full(len(k), 2.0)
    delta = (k == 0).astype(float)
    if norm is Normalization.UNITARY:
        return np.sqrt((2.0 - delta) / n)
    return np.sqrt(2.0 - delta)


def naive_dct2(x, norm=Normalization.TWO_SIDED, summation="compensated"):
    """C[k] = f(k) * sum_n x[n] * cos(pi*(n + 1/2)*k/N)."""
    comp = _check_mode(summation)
    xs = np.asarray(x, dtype=float)
    n = len(xs)
    ones = np.ones(n)
    raw = _cos_sum(
        xs, lambda j, ks: (2 * j + 1) * ks, ones, n, 4 * n, False, comp
    )
    return _dct2_prefactor(n, norm, np.arange(n)) * raw


def naive_dct3(x, norm=Normalization.TWO_SIDED, summation="compensated"):
    """C[k] = sum_n g(n) * x[n] * cos(pi*n*(k + 1/2)/N): the dct2 transpose."""
    comp = _check_mode(summation)
    xs = np.asarray(x, dtype=float)
    n = len(xs)
    weights = _dct2_prefactor(n, norm, np.arange(n))  # column factors now
    return _cos_sum(
        xs, lambda j, ks: j * (2 * ks + 1), weights, n, 4 * n, False, comp
    )


def _dst2_prefactor(n, norm, k):
    # k runs 1..N here; the half-weight sits on k = N
    if norm is Normalization.TWO_SIDED:
        return np.full(len(k), 2.0)
    delta = (k == n).astype(float)
    if norm is Normalization.UNITARY:
        return np.sqrt((2.0 - delta) / n)
    return np.sqrt(2.0 - delta)


def naive_dst2(x, norm=Normalization.TWO_SIDED, summation="compensated"):
    """S[k] = f(k) * sum_n x[n] * sin(pi*(n + 1/2)*k/N), slot j = k - 1."""
    comp = _check_mode(summation)
    xs = np.asarray(x, dtype=float)
    n = len(xs)
    ones = np.ones(n)
    raw = _cos_sum(
        xs, lambda j, ks: (2 * j + 1) * (ks + 1), ones, n, 4 * n, True, comp
    )
    return _dst2_prefactor(n, norm, np.arange(1, n + 1)) * raw


def naive_dst3(x, norm=Normalization.TWO_SIDED, summation="compensated"):
    """S[k] = sum_m g(m) * x[m] * sin(pi*m*(k + 1/2)/N), input slot j = m - 1."""
    comp = _check_mode(summation)
    xs = np.asarray(x, dtype=float)
    n = len(xs)
    weights = _dst2_prefactor(n, norm, np.arange(1, n + 1))
    return _cos_sum(
        xs, lambda j, ks: (j + 1) * (2 * ks + 1), weights, n, 4 * n, True, comp
    )


def embed_4n(x):
    """Zero-interleaved symmetric extension of length 4N.

    Odd slots 2n+1 and their mirrors 4N-(2n+1) carry x[n]; even slots are
    zero.  The result is real-even, and its DFT's first N bins equal the
    two-sided DCT-II of x.
    """
    xs = np.asarray(x, dtype=float)
    n = len(xs)
    out = np.zeros(4 * n)
    idx = 2 * np.arange(n) + 1
    out[idx] = xs
    out[4 * n - idx] = xs
    return out
