"""
The verification suite
======================

``verify`` runs structural and spectral checks on a measure with seeded
random test functions. The weighted energy identity is only expected to hold
for equal weights; the coordinate pairing holds for any weights.
"""

import numpy as np

import mglap

for mu in (mglap.uniform_measure(8), mglap.alternating_measure(1 / 4, 1 / 12)):
    report = mglap.verify(mu, tol=1e-9, seed=42)
    print("N=%d passed=%s" % (report.n, report.passed))
    for c in report.checks:
        print("  %-28s %.2e <= %.0e  %s" % (c.name, c.residual, c.threshold, "ok" if c.passed else "FAIL"))

# A random measure with one very light atom: rank at tol 1e-10 is limited by conditioning.
w = [1e-6] + [(1 - 1e-6) / 5] * 5
mu = mglap.make_measure(zip([0.1, 0.2, 0.3, 0.4, 0.5, 0.6], w))
B = mglap.laplacian_matrix(mu).entries
print("max |B| %.2e, smallest nonzero |lambda| %.2f" % (np.abs(B).max(), -mglap.spectrum(mu).eigenvalues[1]))
print("rank at 1e-10:", mglap.matrix_rank(B, 1e-10), "rank at 1e-14:", mglap.matrix_rank(B, 1e-14))
