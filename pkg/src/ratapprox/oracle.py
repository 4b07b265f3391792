"""Brute-force references for the decomposition engine.

:func:`exhaustive_congruence` enumerates every tuple in the engine's scan order
and is the ground truth for the meet-in-the-middle solvers. :func:`best_approx`
finds the best possible ``n``-term approximation with all denominators at most
``D``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, gcd, lcm, prod

from .arith import ext_gcd, sum_terms

DEFAULT_CAP = 10 ** 7


class OracleCapExceeded(ValueError):
    """The instance is too large to enumerate; the oracle refuses rather than truncates."""


@dataclass(frozen=True)
class OracleResult:
    best_error: Fraction
    witness: tuple[tuple[int, int], ...]
    enumerated: int


def _members(families):
    return [tuple(getattr(f, "members", f)) for f in families]


def exhaustive_congruence(a: int, q: int, families, min_product: int = 1,
                          cap: int = DEFAULT_CAP):
    """First tuple (in ``(l, [r,] p, s)`` order) with ``a * prod == 1 (mod q)``.

    Returns the tuple in family order ``(s, p, l[, r])`` or ``None``.
    """
    fams = _members(families)
    if len(fams) not in (3, 4):
        raise ValueError("expected 3 or 4 families")
    size = prod(len(f) for f in fams)
    if size > cap:
        raise OracleCapExceeded(f"{size} tuples exceed cap {cap}")
    if gcd(a, q) != 1:
        raise ValueError(f"gcd(a, q) = {gcd(a, q)} != 1")
    if len(fams) == 3:
        S, P, L = fams
        for l in L:
            for p in P:
                for s in S:
                    t = s * p * l
                    if t >= min_product and (a * t - 1) % q == 0:
                        return s, p, l
        return None
    S, P, L, R4 = fams
    for l in L:
        for r in R4:
            for p in P:
                for s in S:
                    t = s * p * l * r
                    if t >= min_product and (a * t - 1) % q == 0:
                        return s, p, l, r
    return None


def _bezout(coeffs: list[int]) -> tuple[int, list[int]]:
    """``g`` and ``x`` with ``sum(x_i * coeffs_i) == g == gcd(coeffs)``."""
    g, xs = coeffs[0], [1]
    for m in coeffs[1:]:
        g, u, v = ext_gcd(g, m)
        xs = [u * x for x in xs] + [v]
    return g, xs


def best_approx(a: int, q: int, n: int, D: int, cap: int = DEFAULT_CAP) -> OracleResult:
    """Smallest ``|a/q - sum(a_i/q_i)|`` over ``1 <= q_i <= D`` and integer ``a_i``.

    For a denominator tuple with ``L = lcm(q_i)`` and ``g = gcd(L/q_i)`` the
    attainable sums are exactly the multiples of ``g/L``, so each tuple is
    scored in closed form. Tuples run over ``q_1 <= ... <= q_n``; ties keep the
    first tuple.
    """
    if n not in (2, 3, 4, 5):
        raise ValueError(f"n must be in 2..5, got {n}")
    if D < 1 or q < 1:
        raise ValueError("D and q must be >= 1")
    total = comb(D + n - 1, n)
    if total > cap:
        raise OracleCapExceeded(f"{total} denominator tuples exceed cap {cap}")

    target = Fraction(a, q)
    best = None
    best_tuple = None
    best_k = 0
    count = 0
    for dens in combinations_with_replacement(range(1, D + 1), n):
        count += 1
        L = lcm(*dens)
        g = 0
        for d in dens:
            g = gcd(g, L // d)
        step = L // g  # sums are k / step
        k = (a * step) // q
        lo = abs(a * step - k * q)
        hi = abs(a * step - (k + 1) * q)
        if hi < lo:
            k, lo = k + 1, hi
        err = Fraction(lo, q * step)
        if best is None or err < best:
            best, best_tuple, best_k = err, dens, k
            if err == 0:
                break

    L = lcm(*best_tuple)
    coeffs = [L // d for d in best_tuple]
    g, xs = _bezout(coeffs)
    # k/step = k*g/L = sum(k*x_i * (L/q_i)) / L
    witness = tuple((best_k * x, d) for x, d in zip(xs, best_tuple))
    assert abs(target - sum_terms(witness)) == best
    return OracleResult(best, witness, count)
