"""
Three fractions for 1/101
=========================

Approximate 1/101 by three fractions whose denominators stay below
floor(2 * 25600**(1/3)) = 58, with error at most 1/(101 * 25600).
"""
from fractions import Fraction

from ratapprox import ProblemSpec, build_families, decompose, verify

spec = ProblemSpec.create(a=1, q=101, Q=25600, n=3)
print("R =", spec.R)

# The candidate denominators: an integer window below two prime windows.
for fam in build_families(spec.n, spec.R, spec.q):
    print(f"{fam.label:>2} {fam.interval}: {list(fam.members)}")

d = decompose(spec)
print("path:", d.path)
print(" + ".join(f"({a}/{q})" for a, q in d.terms))
print("b =", d.b, " product =", d.product)
print("error =", d.error, " bound 1/(qQ) =", Fraction(1, spec.q * spec.Q))

# Every check is recomputed from the terms alone.
print(verify(d).as_dict())
