"""Exact integer and rational primitives.

Everything here works on Python ints and :class:`fractions.Fraction`; no
floating point is used anywhere in the package core.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as _gcd
from typing import Iterable

__all__ = [
    "Fraction",
    "NotInvertible",
    "gcd",
    "ext_gcd",
    "mod_inv",
    "sum_terms",
    "iroot",
    "floor_scaled_root",
    "parse_rational",
]


class NotInvertible(ValueError):
    """Raised by :func:`mod_inv` when the argument shares a factor with the modulus."""

    def __init__(self, x: int, m: int, g: int):
        super().__init__(f"{x} is not invertible modulo {m} (gcd={g})")
        self.x = x
        self.m = m
        self.gcd = g


def gcd(x: int, y: int) -> int:
    return _gcd(x, y)


def ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``u*x + v*y == g == gcd(x, y)`` and ``g >= 0``."""
    if x == 0 and y == 0:
        raise ValueError("ext_gcd(0, 0) is undefined")
    old_r, r = x, y
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_u, u = u, old_u - k * u
        old_v, v = v, old_v - k * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def mod_inv(x: int, m: int) -> int:
    """Inverse of ``x`` modulo ``m`` as a residue in ``[0, m)``.

    ``m == 1`` gives 0, the only residue.
    """
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 0
    g, u, _ = ext_gcd(x % m, m)
    if g != 1:
        raise NotInvertible(x, m, g)
    return u % m


def sum_terms(terms: Iterable[Fraction | tuple[int, int]]) -> Fraction:
    """Exact sum of fractions; ``(num, den)`` pairs are accepted too."""
    total = Fraction(0)
    for t in terms:
        if isinstance(t, tuple):
            t = Fraction(*t)
        total += t
    return total


def iroot(x: int, n: int) -> int:
    """Largest integer ``r >= 0`` with ``r**n <= x``."""
    if x < 0:
        raise ValueError("iroot of a negative number")
    if n < 1:
        raise ValueError("root index must be >= 1")
    if x < 2 or n == 1:
        return x
    # Newton from an overestimate; converges monotonically downward.
    r = 1 << -(-x.bit_length() // n)
    while True:
        s = ((n - 1) * r + x // r ** (n - 1)) // n
        if s >= r:
            break
        r = s
    while r ** n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


def floor_scaled_root(Q: int, n: int, c: Fraction | int = 2) -> int:
    """``floor(c * Q**(1/n))`` computed in integer arithmetic.

    With ``c = u/v`` this is the largest ``R`` with ``(R*v)**n <= u**n * Q``.
    """
    c = Fraction(c)
    if c <= 1:
        raise ValueError(f"scale constant must exceed 1, got {c}")
    if Q < 1:
        raise ValueError(f"Q must be >= 1, got {Q}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    u, v = c.numerator, c.denominator
    # floor(iroot(u^n Q) / v) == floor((u^n Q)^(1/n) / v) for integer v.
    return iroot(u ** n * Q, n) // v


def parse_rational(text: str) -> Fraction:
    """Parse ``"u/v"`` or an integer string exactly (decimals like ``"0.1"`` also work)."""
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    return Fraction(text)
