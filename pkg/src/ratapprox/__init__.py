"""Approximating a rational by sums of three or four fractions with small denominators."""
from .arith import NotInvertible, ext_gcd, floor_scaled_root, gcd, mod_inv, sum_terms
from .decompose import (
    Decomposition,
    DenominatorFamily,
    NotFound,
    ProblemSpec,
    VerificationReport,
    build_families,
    decompose,
    normalize,
    solve_congruence3,
    solve_congruence4,
    split_numerators,
    verify,
)
from .moments import MomentReport, count_products, moment_sweep, second_moment
from .oracle import OracleCapExceeded, OracleResult, best_approx, exhaustive_congruence
from .sieve import IntervalSpec, integers_in, primes_in

__version__ = "0.1.0"
