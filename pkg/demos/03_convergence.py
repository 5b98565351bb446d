"""
Convergence to the classical Laplacian
======================================

For the uniform measure the l-th eigenvalue tends to -(2 pi l)^2 as N grows,
and the relative gap shrinks like 1/N^2.
"""

import mglap
from mglap.experiments import convergence_csv, eigenfunction_sup_gap

rows = mglap.convergence_table([16, 64, 256, 1024, 2048], [1, 2, 5], cap=64)
print(convergence_csv(rows))

# Each doubling of N divides the gap by four.
for l in (1, 5):
    gaps = [r.relative_gap for r in mglap.convergence_table([256, 512, 1024, 2048], [l], cap=0)]
    print("l=%d ratios" % l, [round(b / a, 6) for a, b in zip(gaps, gaps[1:])])

# At the atoms the step eigenfunctions coincide with sin / cos(2 pi l x).
print("sup gap at atoms:", eigenfunction_sup_gap(64, 3))
