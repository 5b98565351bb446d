"""
Six atoms with alternating weights
==================================

Weights (m1, m2, m1, m2, m1, m2) admit explicit eigenpairs. Here m1 = 1/4 and
m2 = 1/12, so the weight ratio is r = 1/3.
"""

import math

import numpy as np

import mglap

m1, m2 = 1 / 4, 1 / 12
mu = mglap.alternating_measure(m1, m2)
B = mglap.laplacian_matrix(mu)

# Closed-form eigenvalues next to the solver's.
closed = mglap.alternating6_spectrum(m1, m2)
print("closed form:", closed.eigenvalues)
print("numerical:  ", mglap.spectrum(mu).eigenvalues)
print("-160 +- 16 sqrt(73):", -160 + 16 * math.sqrt(73), -160 - 16 * math.sqrt(73))

# Each closed-form vector satisfies the eigen-equation.
for lam, v in zip(closed.eigenvalues, closed.eigenvectors):
    print("%10.4f  residual %.1e" % (lam, mglap.eigen_residual(B, lam, v)))

# Pairing components of the two double eigenvectors gives points on a conic.
spec = mglap.EllipseSpec(m2 / m1)
print("conic: %.4f (x^2 + y^2 - 1) = %.4f x y" % (spec.left, spec.right))
for name, pts in mglap.ellipse_tuples(m1, m2).items():
    worst = max(abs(mglap.ellipse_residual(spec, x, y)) for x, y in pts)
    print(name, np.round(pts, 4).tolist(), "max residual %.1e" % worst)
