"""Seeded random sweeps of the decomposition engine.

Instances are drawn with :class:`random.Random` (Mersenne Twister) seeded by
the caller: ``q = rng.choice(primes in range)`` then ``a = rng.randint(1, q - 1)``,
one instance at a time. Same seed, same instance list.
"""
from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass
from fractions import Fraction

from .arith import iroot
from .decompose import Decomposition, NotFound, ProblemSpec, build_families, decompose, verify
from .sieve import primes_between


def ceil_power(q: int, exponent: Fraction) -> int:
    """Least integer ``Q`` with ``Q >= q**exponent`` (exact, ``exponent > 0``)."""
    exponent = Fraction(exponent)
    if exponent <= 0:
        raise ValueError("exponent must be positive")
    if q < 1:
        raise ValueError("q must be >= 1")
    u, v = exponent.numerator, exponent.denominator
    target = q ** u
    Q = iroot(target, v)
    if Q ** v < target:
        Q += 1
    return Q


@dataclass(frozen=True)
class SweepRow:
    q: int
    a: int
    Q: int
    R: int
    family_sizes: tuple[int, ...]
    found: bool
    product: int | None
    verify_pass: bool | None
    result: Decomposition | NotFound


def sample_instances(seed: int, count: int, q_min: int, q_max: int) -> list[tuple[int, int]]:
    primes = primes_between(q_min, q_max)
    if count and not primes:
        raise ValueError(f"no primes in [{q_min}, {q_max}]")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        q = rng.choice(primes)
        out.append((q, rng.randint(1, q - 1)))
    return out


def run_sweep(seed: int, count: int, q_min: int, q_max: int, exponent=Fraction(11, 5),
              n: int = 3, c=Fraction(2), mode: str = "theorem") -> list[SweepRow]:
    rows = []
    for q, a in sample_instances(seed, count, q_min, q_max):
        Q = ceil_power(q, exponent)
        spec = ProblemSpec.create(a, q, Q, n, c, mode)
        R = spec.R
        sizes = tuple(len(f) for f in build_families(n, R, q))
        res = decompose(spec)
        if isinstance(res, NotFound):
            rows.append(SweepRow(q, a, Q, R, sizes, False, None, None, res))
        else:
            rows.append(SweepRow(q, a, Q, R, sizes, True, res.product, verify(res).passed, res))
    return rows


def sweep_to_csv(rows: list[SweepRow], n: int = 3) -> str:
    """Per-instance rows plus a trailing ``summary`` row (omitted when empty).

    In the summary row ``found`` is ``found/count`` and ``verify_pass`` is
    ``verified/found``.
    """
    labels = ["S", "P", "L"] + (["R4"] if n == 4 else [])
    header = ["q", "a", "Q", "R", *labels, "found", "product", "verify_pass"]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([r.q, r.a, r.Q, r.R, *r.family_sizes,
                    "true" if r.found else "false",
                    "" if r.product is None else r.product,
                    "" if r.verify_pass is None else ("true" if r.verify_pass else "false")])
    if rows:
        found = sum(r.found for r in rows)
        ok = sum(bool(r.verify_pass) for r in rows)
        blank = [""] * (len(labels) + 3)
        w.writerow(["summary", *blank, f"{found}/{len(rows)}", "", f"{ok}/{found}"])
    return buf.getvalue()


def sweep_decompose(seed: int, count: int, q_range: tuple[int, int], Q_exponent=Fraction(11, 5),
                    n: int = 3, c=Fraction(2)) -> str:
    return sweep_to_csv(run_sweep(seed, count, q_range[0], q_range[1], Q_exponent, n, c), n)
