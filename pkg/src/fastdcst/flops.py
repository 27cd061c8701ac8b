"""Exact operation accounting.

Every transform kernel in this package threads a :class:`FlopLedger`
through its recursion and reports precisely the real additions and real
multiplications it performs.  The counting convention:

* a complex addition costs 2 real adds,
* a complex multiplication by a general precomputed constant costs
  4 real mults + 2 real adds,
* a multiplication by a constant with a unit real or imaginary part
  costs 2 mults + 2 adds,
* multiplications by +-1 or +-i, unary negations, loads, stores and
  index arithmetic are free and never reach an arithmetic instruction.

The closed-form evaluators below are computed in exact rational
arithmetic, so they are bit-for-bit comparable with instrumented runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "FlopLedger",
    "formula_classic_dct2",
    "formula_new_dct2",
    "formula_splitradix_complex",
    "formula_splitradix_real",
    "formula_new_fft_complex",
    "formula_M",
    "formula_MS",
]


@dataclass
class FlopLedger:
    """Tally of real additions/subtractions and real multiplications.

    Ledgers are owned by the caller and depend only on (algorithm, size,
    normalization): two runs of the same kernel at the same size yield
    identical ledgers regardless of the input values.
    """

    adds: int = 0
    mults: int = 0

    def total(self) -> int:
        return self.adds + self.mults

    def count(self, adds: int = 0, mults: int = 0) -> None:
        self.adds += adds
        self.mults += mults

    def as_tuple(self) -> tuple[int, int]:
        return (self.adds, self.mults)


def checked_log2(n, lowest=2):
    """Return log2(n) for a power of two ``n >= lowest``, else raise."""
    if not isinstance(n, int) or n < 1 or n & (n - 1):
        raise ValueError(f"size must be a power of two, got {n!r}")
    if n < lowest:
        raise ValueError(f"size must be at least {lowest}, got {n}")
    return n.bit_length() - 1


def _exact(value: Fraction) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"count formula produced a non-integer: {value}")
    return int(value)


def formula_classic_dct2(n: int) -> int:
    """2*N*lg(N) - N + 2: cost of the best previously published DCT-II."""
    m = checked_log2(n)
    return 2 * n * m - n + 2


def formula_new_dct2(n: int) -> int:
    """Cost of the rescaled DCT-II: (17/9)*N*lg(N) + O(N)."""
    m = checked_log2(n)
    sign = -1 if m & 1 else 1
    return _exact(
        Fraction(17, 9) * n * m
        - Fraction(17, 27) * n
        - Fraction(1, 9) * sign * m
        + Fraction(7, 54) * sign
        + Fraction(3, 2)
    )


def formula_splitradix_complex(n: int) -> int:
    """4*N*lg(N) - 6*N + 8: the long-standing split-radix DFT count."""
    m = checked_log2(n)
    return 4 * n * m - 6 * n + 8


def formula_splitradix_real(n: int) -> int:
    """2*N*lg(N) - 4*N + 6: split-radix specialized for real input."""
    m = checked_log2(n)
    return 2 * n * m - 4 * n + 6


def formula_new_fft_complex(n: int) -> int:
    """Cost of the rescaled complex DFT: (34/9)*N*lg(N) + O(N)."""
    m = checked_log2(n)
    sign = -1 if m & 1 else 1
    return _exact(
        Fraction(34, 9) * n * m
        - Fraction(124, 27) * n
        - 2 * m
        - Fraction(2, 9) * sign * m
        + Fraction(16, 27) * sign
        + 8
    )


def formula_M(n: int) -> int:
    """Real multiplications the rescaled complex DFT saves over split radix."""
    m = checked_log2(n)
    sign = -1 if m & 1 else 1
    return _exact(
        Fraction(2, 9) * n * m
        - Fraction(38, 27) * n
        + 2 * m
        + Fraction(2, 9) * sign * m
        - Fraction(16, 27) * sign
    )


def formula_MS(n: int) -> int:
    """Further multiplications saved when outputs may stay rescaled."""
    m = checked_log2(n)
    sign = -1 if m & 1 else 1
    return _exact(
        Fraction(2, 9) * n * m
        - Fraction(20, 27) * n
        + Fraction(2, 9) * sign * m
        - Fraction(7, 27) * sign
        + 1
    )
