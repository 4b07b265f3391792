"""
How often the structured search succeeds
========================================

The existence argument only works for large q. Here we sweep random prime
moduli in growing ranges with Q = ceil(q**(11/5)) and count how often the
three- and four-term searches find a tuple.
"""
from fractions import Fraction

from ratapprox.sweep import run_sweep

ranges = [(100, 300), (300, 1000), (1000, 3000), (3000, 10000), (10000, 30000)]

for n in (3, 4):
    print(f"n = {n}")
    for lo, hi in ranges:
        rows = run_sweep(seed=11, count=60, q_min=lo, q_max=hi, exponent=Fraction(11, 5), n=n)
        found = sum(r.found for r in rows)
        ok = sum(bool(r.verify_pass) for r in rows)
        sizes = rows[0].family_sizes
        print(f"  q in [{lo:>5}, {hi:>5}]  found {found:>2}/60  verified {ok:>2}"
              f"  family sizes (first instance) {sizes}")
