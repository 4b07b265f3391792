"""Primes and coprime integers inside intervals with rational endpoints."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

SEGMENT = 1 << 16


@dataclass(frozen=True)
class IntervalSpec:
    """Interval ``[lo, hi)`` or ``[lo, hi]`` with exact rational endpoints.

    Membership is decided by cross-multiplication, never by rounding.
    """

    lo_num: int
    lo_den: int
    hi_num: int
    hi_den: int
    closed_hi: bool = False

    def __post_init__(self):
        if self.lo_den < 1 or self.hi_den < 1:
            raise ValueError("interval denominators must be >= 1")

    @classmethod
    def make(cls, lo, hi, closed_hi: bool = False) -> "IntervalSpec":
        lo, hi = Fraction(lo), Fraction(hi)
        return cls(lo.numerator, lo.denominator, hi.numerator, hi.denominator, closed_hi)

    @property
    def lo(self) -> Fraction:
        return Fraction(self.lo_num, self.lo_den)

    @property
    def hi(self) -> Fraction:
        return Fraction(self.hi_num, self.hi_den)

    def contains(self, s: int) -> bool:
        if s * self.lo_den < self.lo_num:
            return False
        if self.closed_hi:
            return s * self.hi_den <= self.hi_num
        return s * self.hi_den < self.hi_num

    def first(self) -> int:
        """Smallest integer in the interval (may exceed :meth:`last` if empty)."""
        return -(-self.lo_num // self.lo_den)

    def last(self) -> int:
        if self.closed_hi:
            return self.hi_num // self.hi_den
        return (self.hi_num - 1) // self.hi_den

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}{']' if self.closed_hi else ')'}"


def _base_primes(limit: int) -> np.ndarray:
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask).astype(np.int64)


def primes_between(lo: int, hi: int) -> list[int]:
    """All primes ``p`` with ``lo <= p <= hi`` via a segmented sieve."""
    lo = max(lo, 2)
    if hi < lo:
        return []
    base = _base_primes(isqrt(hi))
    out: list[int] = []
    for start in range(lo, hi + 1, SEGMENT):
        stop = min(start + SEGMENT, hi + 1)
        mask = np.ones(stop - start, dtype=bool)
        for p in base:
            p = int(p)
            if p * p >= stop:
                break
            first = max(p * p, -(-start // p) * p)
            mask[first - start :: p] = False
        out.extend((np.flatnonzero(mask) + start).tolist())
    return out


def primes_in(interval: IntervalSpec, coprime_to: int = 1) -> list[int]:
    """Ascending primes in ``interval`` that do not divide ``coprime_to``."""
    lo = max(interval.first(), 0)
    hi = interval.last()
    q = coprime_to
    return [p for p in primes_between(lo, hi) if q % p]


def integers_in(interval: IntervalSpec, coprime_to: int = 1) -> list[int]:
    """Ascending integers ``s`` in ``interval`` with ``gcd(s, coprime_to) == 1``."""
    lo = max(interval.first(), 0)
    hi = interval.last()
    q = coprime_to
    return [s for s in range(lo, hi + 1) if gcd(s, q) == 1]
