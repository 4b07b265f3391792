"""Approximate ``a/q`` by a sum of three or four fractions with small denominators.

The search picks pairwise coprime denominators ``q_1, ..., q_n <= R`` whose
product is at least ``Q`` and satisfies ``a * q_1 * ... * q_n == 1 (mod q)``.
Writing ``a * prod = 1 + b*q`` and splitting ``b`` over the denominators gives

    a/q - sum(a_i/q_i) = 1 / (q * prod)

exactly. Denominators come from four (or three) disjoint windows of ``[1, R]``:
an integer family ``S`` below several prime families, which makes pairwise
coprimality automatic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, prod
from typing import Sequence

from .arith import floor_scaled_root, mod_inv, sum_terms
from .sieve import IntervalSpec, integers_in, primes_in

PATH_THEOREM = "theorem-search"
PATH_TRIVIAL = "trivial"
PATH_FALLBACK = "oracle-fallback"

MODES = ("theorem", "auto", "oracle-fallback")

# (label, lo, hi, closed_hi, primes_only) with endpoints as multiples of R.
_LAYOUT = {
    3: (
        ("S", Fraction(1, 3), Fraction(1, 2), False, False),
        ("P", Fraction(1, 2), Fraction(3, 4), False, True),
        ("L", Fraction(3, 4), Fraction(1), True, True),
    ),
    4: (
        ("S", Fraction(1, 4), Fraction(1, 3), False, False),
        ("P", Fraction(1, 3), Fraction(2, 3), False, True),
        ("L", Fraction(2, 3), Fraction(3, 4), False, True),
        ("R4", Fraction(3, 4), Fraction(1), True, True),
    ),
}


def normalize(a_raw: int, q_raw: int) -> tuple[int, int]:
    """Reduce ``a_raw/q_raw`` to lowest terms with a positive denominator."""
    if q_raw == 0:
        raise ValueError("denominator must be nonzero")
    if q_raw < 0:
        a_raw, q_raw = -a_raw, -q_raw
    g = gcd(a_raw, q_raw)
    return a_raw // g, q_raw // g


def _exceeds_power(Q: int, q: int, exponent: Fraction) -> bool:
    # Q >= q**exponent  <=>  Q**v >= q**u for exponent = u/v > 0
    u, v = exponent.numerator, exponent.denominator
    return Q ** v >= q ** u


@dataclass(frozen=True)
class ProblemSpec:
    """A normalized instance: approximate ``a/q`` with ``n`` terms under budget ``Q``."""

    a: int
    q: int
    Q: int
    n: int = 3
    c: Fraction = Fraction(2)
    mode: str = "theorem"
    epsilon: Fraction = Fraction(1, 10)

    def __post_init__(self):
        if self.q < 1:
            raise ValueError(f"q must be >= 1, got {self.q}")
        if gcd(self.a, self.q) != 1:
            raise ValueError(f"gcd(a, q) must be 1; use ProblemSpec.create to reduce {self.a}/{self.q}")
        if self.Q < 1:
            raise ValueError(f"Q must be >= 1, got {self.Q}")
        if self.n not in (3, 4):
            raise ValueError(f"n must be 3 or 4, got {self.n}")
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        if self.c <= 1:
            raise ValueError(f"c must exceed 1, got {self.c}")
        if self.epsilon <= 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")

    @classmethod
    def create(cls, a: int, q: int, Q: int, n: int = 3, c=Fraction(2),
               mode: str = "theorem", epsilon=Fraction(1, 10)) -> "ProblemSpec":
        a, q = normalize(a, q)
        return cls(a, q, Q, n, Fraction(c), mode, Fraction(epsilon))

    @property
    def R(self) -> int:
        return floor_scaled_root(self.Q, self.n, self.c)

    @property
    def hypothesis_holds(self) -> bool:
        """Whether ``Q >= q**(2 + epsilon)``. Reported only, never enforced."""
        return _exceeds_power(self.Q, self.q, 2 + self.epsilon)


@dataclass(frozen=True)
class DenominatorFamily:
    label: str
    interval: IntervalSpec
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Decomposition:
    """Terms ``(a_i, q_i)`` with ``a/q ~ sum(a_i/q_i)``.

    ``b`` is the integer with ``a * product == 1 + b*q`` on the theorem path and
    0 on the other paths.
    """

    spec: ProblemSpec
    terms: tuple[tuple[int, int], ...]
    b: int
    product: int
    error: Fraction
    path: str

    @property
    def denominators(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.terms)

    @property
    def numerators(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.terms)


@dataclass(frozen=True)
class NotFound:
    """The structured search had no solution (the theorem is only asymptotic)."""

    spec: ProblemSpec
    R: int
    family_sizes: dict[str, int] = field(default_factory=dict)
    reason: str = "no tuple satisfies the congruence"


def build_families(n: int, R: int, q: int) -> list[DenominatorFamily]:
    """Denominator families for ``n`` terms inside ``[1, R]``, all coprime to ``q``."""
    if n not in _LAYOUT:
        raise ValueError(f"n must be 3 or 4, got {n}")
    if R < 1:
        raise ValueError(f"R must be >= 1, got {R}")
    families = []
    for label, lo, hi, closed, primes_only in _LAYOUT[n]:
        iv = IntervalSpec.make(lo * R, hi * R, closed)
        pick = primes_in if primes_only else integers_in
        families.append(DenominatorFamily(label, iv, tuple(pick(iv, q))))
    return families


def _members(families: Sequence[DenominatorFamily | Sequence[int]]) -> list[tuple[int, ...]]:
    return [tuple(f.members) if isinstance(f, DenominatorFamily) else tuple(f) for f in families]


def _product_table(S: Sequence[int], P: Sequence[int], q: int) -> dict[int, list[tuple[int, int]]]:
    # residue -> witnesses (p, s) in lexicographic order
    table: dict[int, list[tuple[int, int]]] = {}
    for p in P:
        for s in S:
            table.setdefault(s * p % q, []).append((p, s))
    return table


def _probe(table, key: int, cofactor: int, min_product: int):
    for p, s in table.get(key, ()):
        if s * p * cofactor >= min_product:
            return p, s
    return None


def _check_a(a: int, q: int) -> None:
    if gcd(a, q) != 1:
        raise ValueError(f"gcd(a, q) = {gcd(a, q)} != 1")


def solve_congruence3(a: int, q: int, families, min_product: int = 1):
    """Find ``(s, p, l)`` with ``a*s*p*l == 1 (mod q)`` and ``s*p*l >= min_product``.

    Returns the first hit scanning ``l`` ascending, then ``p``, then ``s``, or
    ``None``. Residues ``s*p mod q`` are tabulated once; each ``l`` costs one
    inverse and one lookup.
    """
    _check_a(a, q)
    S, P, L = _members(families)
    if not (S and P and L):
        return None
    table = _product_table(S, P, q)
    a_inv = mod_inv(a, q)
    for l in L:
        hit = _probe(table, a_inv * mod_inv(l, q) % q, l, min_product)
        if hit is not None:
            p, s = hit
            return s, p, l
    return None


def solve_congruence4(a: int, q: int, families, min_product: int = 1):
    """Quadruple analogue of :func:`solve_congruence3`, scanning pairs ``(l, r)`` ascending."""
    _check_a(a, q)
    S, P, L, R4 = _members(families)
    if not (S and P and L and R4):
        return None
    table = _product_table(S, P, q)
    a_inv = mod_inv(a, q)
    for l in L:
        for r in R4:
            lr = l * r
            hit = _probe(table, a_inv * mod_inv(lr, q) % q, lr, min_product)
            if hit is not None:
                p, s = hit
                return s, p, l, r
    return None


def split_numerators(b: int, q_list: Sequence[int]) -> list[int]:
    """Integers ``a_i`` with ``sum(a_i * prod_{j != i} q_j) == b``.

    All but the last numerator are canonical residues modulo their denominator;
    the last absorbs the remainder and may be negative.
    """
    q_list = list(q_list)
    if not q_list:
        raise ValueError("need at least one denominator")
    if any(d < 1 for d in q_list):
        raise ValueError("denominators must be >= 1")
    for x, y in combinations(q_list, 2):
        if gcd(x, y) != 1:
            raise ValueError(f"denominators {x} and {y} are not coprime")
    total = prod(q_list)
    nums = []
    rest = b
    for d in q_list[:-1]:
        cof = total // d
        ai = b * mod_inv(cof, d) % d
        nums.append(ai)
        rest -= ai * cof
    head = total // q_list[-1]
    last, r = divmod(rest, head)
    assert r == 0, "numerator split left a remainder despite coprime denominators"
    nums.append(last)
    return nums


def _trivial(spec: ProblemSpec) -> Decomposition:
    terms = ((spec.a, spec.q),) + ((0, 1),) * (spec.n - 1)
    err = abs(Fraction(spec.a, spec.q) - sum_terms(terms))
    assert err == 0
    return Decomposition(spec, terms, 0, spec.q, err, PATH_TRIVIAL)


def _fallback(spec: ProblemSpec, R: int, sizes) -> Decomposition | NotFound:
    from .oracle import OracleCapExceeded, best_approx

    try:
        res = best_approx(spec.a, spec.q, spec.n, R)
    except OracleCapExceeded as exc:
        return NotFound(spec, R, sizes, f"theorem search failed; oracle refused: {exc}")
    terms = tuple(res.witness)
    return Decomposition(spec, terms, 0, prod(d for _, d in terms), res.best_error, PATH_FALLBACK)


def decompose(spec: ProblemSpec) -> Decomposition | NotFound:
    """Run the full pipeline for a normalized :class:`ProblemSpec`."""
    R = spec.R
    if R >= spec.q:
        return _trivial(spec)
    families = build_families(spec.n, R, spec.q)
    sizes = {f.label: len(f) for f in families}
    if spec.mode == "oracle-fallback":
        return _fallback(spec, R, sizes)

    solve = solve_congruence3 if spec.n == 3 else solve_congruence4
    found = solve(spec.a, spec.q, families, min_product=spec.Q)
    if found is None:
        if spec.mode == "auto":
            return _fallback(spec, R, sizes)
        return NotFound(spec, R, sizes)

    dens = list(found)
    total = prod(dens)
    b, r = divmod(spec.a * total - 1, spec.q)
    assert r == 0
    nums = split_numerators(b, dens)
    terms = tuple(zip(nums, dens))
    err = abs(Fraction(spec.a, spec.q) - sum_terms(terms))
    assert err == Fraction(1, spec.q * total), "error identity violated"
    return Decomposition(spec, terms, b, total, err, PATH_THEOREM)


@dataclass(frozen=True)
class VerificationReport:
    """Independent checks on a :class:`Decomposition`; ``None`` means not applicable."""

    within_bound: bool
    pairwise_coprime: bool | None
    error_identity: bool
    error_le_bound: bool
    product_ge_Q: bool | None
    congruence: bool | None
    recomputed_error: Fraction

    @property
    def passed(self) -> bool:
        checks = (self.within_bound, self.pairwise_coprime, self.error_identity,
                  self.error_le_bound, self.product_ge_Q, self.congruence)
        return all(c for c in checks if c is not None)

    def as_dict(self) -> dict:
        return {
            "within_bound": self.within_bound,
            "pairwise_coprime": self.pairwise_coprime,
            "error_identity": self.error_identity,
            "error_le_bound": self.error_le_bound,
            "product_ge_Q": self.product_ge_Q,
            "congruence": self.congruence,
            "recomputed_error": {"num": str(self.recomputed_error.numerator),
                                 "den": str(self.recomputed_error.denominator)},
            "passed": self.passed,
        }


def verify(d: Decomposition, spec: ProblemSpec | None = None) -> VerificationReport:
    """Recheck ``d`` from scratch against ``spec`` (defaults to ``d.spec``).

    Nothing stored on ``d`` except its terms and path is trusted.
    """
    spec = spec or d.spec
    a, q, Q = spec.a, spec.q, spec.Q
    dens = [den for _, den in d.terms]
    bound = floor_scaled_root(Q, spec.n, spec.c)
    within = len(d.terms) == spec.n and all(1 <= den <= bound for den in dens)
    coprime = all(gcd(x, y) == 1 for x, y in combinations(dens, 2))
    err = abs(Fraction(a, q) - sum_terms(d.terms))
    total = prod(dens)

    product_ok = congruence = None
    if d.path == PATH_THEOREM:
        identity = err == Fraction(1, q * total)
        product_ok = total >= Q
        congruence = (a * total - 1) % q == 0 and a * total - d.b * q == 1
    elif d.path == PATH_TRIVIAL:
        identity = err == 0
    else:
        identity = err == d.error
        coprime = None
    return VerificationReport(
        within_bound=within,
        pairwise_coprime=coprime,
        error_identity=identity,
        error_le_bound=err <= Fraction(1, q * Q),
        product_ge_Q=product_ok,
        congruence=congruence,
        recomputed_error=err,
    )
