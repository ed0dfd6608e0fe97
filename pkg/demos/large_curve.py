"""A nine-sheeted curve with 43 finite discriminant points.

y^9 + 2 x^2 y^6 + 2 x^4 y^3 + x^6 + y^2 = 0 has a discriminant point of
high multiplicity at x = 0 and clusters of nearby points, so rho is small
and the circles are tiny.  The full pipeline still runs in seconds.
"""

import time

import numpy as np

from curvebranch import BivariatePolynomial, analyze

f = BivariatePolynomial.from_terms({(0, 9): 1, (2, 6): 2, (4, 3): 2, (6, 0): 1, (0, 2): 1})

t0 = time.perf_counter()
a = analyze(f, ng=64)
elapsed = time.perf_counter() - t0

print(f"sheets: {f.y_degree}")
print(f"finite discriminant points: {a.config.n}")
print(f"rho = {a.config.rho:.4f}  (min/max distance warning: {a.config.warning})")
print(f"largest return mismatch: {max(a.table.residuals):.2e}")

cycle_types = {}
for p in a.generators.permutations:
    cycle_types[p.cycle_type()] = cycle_types.get(p.cycle_type(), 0) + 1
print("cycle types of the generators:")
for ct, count in sorted(cycle_types.items()):
    print(f"  {ct}: {count}")
print("monodromy at infinity:", a.generators.infinity.cycle_type())
print(f"genus = {a.genus.genus}")
print(f"time: {elapsed:.1f} s")

# where the high multiplicity comes from
k0 = int(np.argmin(np.abs(a.discriminant.points)))
print(f"multiplicity of x = 0 as a root of the resultant: {a.discriminant.multiplicity[k0]}")
