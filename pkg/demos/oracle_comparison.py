"""
Construction versus the best possible approximation
===================================================

For small moduli we can afford to enumerate every denominator tuple below the
same cap R and find the best achievable error. The constructed decomposition
is never better than that floor, and usually sits well above it, since the
construction only promises 1/(qQ).
"""
from fractions import Fraction

from ratapprox import NotFound, ProblemSpec, best_approx, decompose
from ratapprox.sweep import ceil_power

for q, a in [(101, 1), (101, 50), (211, 100), (307, 5)]:
    Q = ceil_power(q, Fraction(11, 5))
    spec = ProblemSpec.create(a, q, Q, 3)
    d = decompose(spec)
    if isinstance(d, NotFound):
        print(q, a, "not found")
        continue
    best = best_approx(a, q, 3, spec.R)
    print(f"{a}/{q}: R={spec.R} construction error 1/{d.error.denominator}"
          f" best possible {best.best_error} (from {best.enumerated} tuples)")

# The cap 2*Q^(1/3) against the older Q^(4/7) exponent, compared exactly: R^7 < Q^4.
for q in (101, 211, 401, 1009):
    Q = ceil_power(q, Fraction(11, 5))
    R = ProblemSpec(1, q, Q).R
    print(f"q={q}: R={R}, R^7 < Q^4: {R ** 7 < Q ** 4}")
