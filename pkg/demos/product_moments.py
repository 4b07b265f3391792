"""
Equidistribution of products modulo q
=====================================

Count products x*y mod q for x coprime to q up to q^(2/3) and y in a window
of the same length, then compare the centered second moment with #X (X + Y).
The ratio creeps up slowly with q, which is what a q^(o(1)) factor looks
like at this scale.
"""
import numpy as np

from ratapprox.moments import count_products, moment_sweep, reports_to_csv

reports = moment_sweep([1009, 2003, 5003, 10007, 20011])
print(reports_to_csv(reports))
for r in reports:
    print(f"q={r.q:>6}  #X={r.X_card:>4}  ratio={float(r.ratio):.4f}")

# The raw counts for one modulus: most residues are hit close to #X*Y/q times.
q = 1009
X = [x for x in range(1, 101)]
M = count_products(X, 100, 0, q)
print("mean", M.mean(), "expected", len(X) * 100 / q, "std", M.std())
print("empty residue classes:", int(np.sum(M == 0)))
