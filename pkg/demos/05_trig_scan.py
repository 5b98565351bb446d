"""
Sine and cosine of the distribution function
============================================

For the alternating measure, sin(pi kappa F) and cos(pi kappa F) evaluated at
the atoms are usually far from eigenvectors. Where kappa F lands on integers
at every atom the cosine vector is +-1 valued and can be one exactly.
"""

import numpy as np

import mglap
from mglap.experiments import kappa_grid, scan_floor, scan_trig

mu = mglap.alternating_measure(1 / 4, 1 / 12)
print("F at the atoms:", np.cumsum(mu.alpha))

rows = scan_trig(mu, kappa_grid(0.01, 24.0))
print("floor over the grid: %.3e" % scan_floor(rows))
for r in sorted(rows, key=lambda r: min(r.residual_w, r.residual_u))[:4]:
    print("kappa=%-6g w %.2e  u %.2e  nearest eigenvalue index %d" % (r.kappa, r.residual_w, r.residual_u, r.best_index))

# kappa = 12 turns the cosine vector into -(1, -1, 1, -1, 1, -1).
w, u = mglap.trig_vectors(mu, 12.0)
print("u at kappa 12:", np.round(u, 12))

away = [r for r in rows if abs(r.kappa % 12) > 1e-9 and abs(r.kappa % 12 - 12) > 1e-9]
print("floor away from multiples of 12: %.3e" % scan_floor(away))
