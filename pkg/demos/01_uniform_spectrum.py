"""
Spectrum of the uniform measure
===============================

With equal weights 1/N the Laplacian is circulant, so its eigenvectors are
discrete Fourier vectors and the eigenvalues come in pairs l, N - l.
"""

import numpy as np

import mglap

# The Laplacian for six equally weighted atoms.
mu = mglap.uniform_measure(6)
B = mglap.laplacian_matrix(mu)
print(B.entries)

# Numerical spectrum from the Jacobi solver, grouped by multiplicity.
d = mglap.spectrum(mu)
print("eigenvalues:", np.round(d.eigenvalues, 12))
print("group sizes:", [len(g) for g in d.groups])

# The closed form agrees index by index once sorted.
closed = mglap.uniform_spectrum(6)
print("closed form:", np.sort(closed.eigenvalues)[::-1])

# Real eigenfunctions take the sine branch below N/2 and the cosine branch above.
for l in range(6):
    print(l, np.round(mglap.uniform_eigenfunction_values(6, l), 12))

# A Fourier vector is an eigenvector to machine precision.
v = mglap.uniform_eigenvector(6, 1)
print("residual:", mglap.eigen_residual(B, mglap.uniform_eigenvalue(6, 1), v))
