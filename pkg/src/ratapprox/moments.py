"""Residue counts of products ``x*y mod q`` and their centered second moment.

For a set ``X`` of integers coprime to ``q`` and the window ``y in [Z+1, Z+Y]``,
``M(u)`` counts pairs with ``x*y == u (mod q)``. The statistic

    sum_u (M(u) - #X * Y / q)**2

measures how evenly the products spread over residues; it is compared against
``#X * (X + Y)`` where ``X`` bounds the elements of the set.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Sequence

import numpy as np

from .arith import iroot

CSV_FIELDS = ("q", "X_card", "Y", "Z", "moment_num", "moment_den",
              "bound_term", "ratio_num", "ratio_den")


def count_products(X_set: Iterable[int], Y: int, Z: int, q: int) -> np.ndarray:
    """Counts ``M`` with ``M[u - 1]`` the number of pairs landing on ``u``, ``u = 1..q``.

    Entry ``q - 1`` is the class of 0. Needs ``q * q`` to fit in int64.
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if Y < 1:
        raise ValueError(f"Y must be >= 1, got {Y}")
    xs = list(X_set)
    for x in xs:
        if gcd(x, q) != 1:
            raise ValueError(f"x = {x} is not coprime to q = {q}")

    # How many y in the window fall in each residue class.
    full, rem = divmod(Y, q)
    y_counts = np.full(q, full, dtype=np.int64)
    if rem:
        y_counts[(np.arange(Z + 1, Z + 1 + rem, dtype=np.int64)) % q] += 1

    by_residue = np.zeros(q, dtype=np.int64)
    r = np.arange(q, dtype=np.int64)
    for x in xs:
        # multiplication by a unit permutes residues, so no index repeats
        by_residue[(x % q) * r % q] += y_counts
    return np.roll(by_residue, -1)


def second_moment(M: Sequence[int], X_card: int, Y: int, q: int) -> Fraction:
    """Exact ``sum_u (M(u) - X_card*Y/q)**2``."""
    if len(M) != q:
        raise ValueError(f"expected {q} counts, got {len(M)}")
    K = X_card * Y
    return Fraction(sum((q * int(m) - K) ** 2 for m in M), q * q)


@dataclass(frozen=True)
class MomentReport:
    q: int
    X_desc: str
    X_card: int
    X_bound: int
    Y: int
    Z: int
    moment: Fraction
    bound_term: int

    @property
    def ratio(self) -> Fraction:
        return self.moment / self.bound_term if self.bound_term else Fraction(0)

    def row(self) -> dict[str, str]:
        return {
            "q": str(self.q), "X_card": str(self.X_card), "Y": str(self.Y), "Z": str(self.Z),
            "moment_num": str(self.moment.numerator), "moment_den": str(self.moment.denominator),
            "bound_term": str(self.bound_term),
            "ratio_num": str(self.ratio.numerator), "ratio_den": str(self.ratio.denominator),
        }


def default_X(q: int) -> list[int]:
    """All integers in ``[1, floor(q**(2/3))]`` coprime to ``q``."""
    top = iroot(q * q, 3)
    return [x for x in range(1, top + 1) if gcd(x, q) == 1]


def default_Y(q: int) -> int:
    return iroot(q * q, 3)


def moment_report(q: int, X_set: Sequence[int], Y: int, Z: int = 0,
                  X_bound: int | None = None, X_desc: str | None = None) -> MomentReport:
    xs = sorted(set(X_set))
    if X_bound is None:
        X_bound = xs[-1] if xs else 0
    M = count_products(xs, Y, Z, q)
    mom = second_moment(M, len(xs), Y, q)
    return MomentReport(q, X_desc or f"explicit({len(xs)})", len(xs), X_bound, Y, Z,
                        mom, len(xs) * (X_bound + Y))


def moment_sweep(q_list: Iterable[int],
                 X_rule: Callable[[int], Sequence[int]] | Sequence[int] | None = None,
                 Y_rule: Callable[[int], int] | int | None = None,
                 Z: int = 0) -> list[MomentReport]:
    """One :class:`MomentReport` per modulus, in input order.

    Rules default to ``X = coprime integers in [1, floor(q**(2/3))]`` and
    ``Y = floor(q**(2/3))``. A fixed set or integer may stand in for a rule.
    """
    reports = []
    for q in q_list:
        if X_rule is None:
            xs, bound, desc = default_X(q), iroot(q * q, 3), "coprime in [1, q^(2/3)]"
        else:
            xs = list(X_rule(q) if callable(X_rule) else X_rule)
            bound, desc = None, None
        if Y_rule is None:
            Y = default_Y(q)
        else:
            Y = Y_rule(q) if callable(Y_rule) else Y_rule
        reports.append(moment_report(q, xs, Y, Z, X_bound=bound, X_desc=desc))
    return reports


def reports_to_csv(reports: Iterable[MomentReport]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in reports:
        w.writerow(r.row())
    return buf.getvalue()
