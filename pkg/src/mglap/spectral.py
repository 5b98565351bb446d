"""Cyclic Jacobi eigensolver and spectral analysis of the mu-Laplacian."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NotSymmetric, ZeroVector
from .functions import StepFunction
from .measure import DiscreteMeasure
from .operators import OperatorMatrix, laplacian_matrix

MAX_SWEEPS = 100
SPECTRUM_TOL = 1e-14
GROUP_REL_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Eigenpairs sorted by descending eigenvalue.

    ``eigenvectors[k]`` is the unit eigenvector for ``eigenvalues[k]``. Inside
    a multiplicity group only the spanned subspace is meaningful.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    groups: list[range]
    max_residual: float
    sweeps: int = 0

    def group_ids(self) -> list[int]:
        ids = [0] * len(self.eigenvalues)
        for gid, rng in enumerate(self.groups):
            for k in rng:
                ids[k] = gid
        return ids


def _off_norm(a: np.ndarray) -> float:
    off = a[~np.eye(a.shape[0], dtype=bool)]
    return float(np.linalg.norm(off))


def jacobi_eigh(s: np.ndarray, tol: float, max_sweeps: int = MAX_SWEEPS):
    """Cyclic row-by-row Jacobi on a symmetric matrix.

    Returns ``(eigenvalues, eigenvectors_as_rows, sweeps)`` in the order the
    diagonal ends up in; no sorting or sign fixing.
    """
    a = np.array(s, dtype=np.float64)
    n = a.shape[0]
    vt = np.eye(n)  # rows are the accumulated eigenvectors
    target = tol * float(np.linalg.norm(a))
    sweeps = 0
    while _off_norm(a) > target:
        if sweeps == max_sweeps:
            raise NoConvergence(
                "off-diagonal norm %.3e above %.3e after %d sweeps"
                % (_off_norm(a), target, max_sweeps)
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app, aqq = a[p, p], a[q, q]
                h = aqq - app
                if abs(h) + 1e3 * abs(apq) == abs(h):
                    # a_pq negligible next to the diagonal gap: t ~ tan(theta) ~ a_pq / h
                    t = apq / h
                else:
                    tau = h / (2.0 * apq)
                    t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                sn = t * c
                rp = c * a[p] - sn * a[q]
                rq = sn * a[p] + c * a[q]
                a[p], a[q] = rp, rq
                a[:, p], a[:, q] = rp, rq
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                vp = c * vt[p] - sn * vt[q]
                vt[q] = sn * vt[p] + c * vt[q]
                vt[p] = vp
        sweeps += 1
    return np.diag(a).copy(), vt, sweeps


def _canonical_sign(v: np.ndarray) -> np.ndarray:
    mag = np.abs(v)
    # first component within roundoff of the largest magnitude
    k = int(np.argmax(mag >= mag.max() - 1e-12))
    return -v if v[k] < 0 else v


def symmetric_eigendecomposition(
    s: OperatorMatrix | np.ndarray, tol: float = SPECTRUM_TOL
) -> SpectralDecomposition:
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Iterates full sweeps until the off-diagonal Frobenius norm is at most
    ``tol * ||S||_F``; gives up with :class:`NoConvergence` after 100 sweeps.
    Eigenvalues are returned in descending order and every eigenvector is
    flipped so that its first largest-magnitude component is positive.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = np.asarray(s.entries if isinstance(s, OperatorMatrix) else s, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetric("matrix must be square")
    scale = float(np.max(np.abs(m))) if m.size else 0.0
    if np.max(np.abs(m - m.T), initial=0.0) > 1e-12 * scale:
        raise NotSymmetric("matrix is not symmetric to 1e-12 relative")
    sym = 0.5 * (m + m.T)
    vals, vt, sweeps = jacobi_eigh(sym, tol)
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    vecs = np.array([_canonical_sign(vt[k]) for k in order]).reshape(len(vals), len(vals))
    resid = [eigen_residual(sym, lam, v) for lam, v in zip(vals, vecs)]
    d = SpectralDecomposition(vals, vecs, [], max(resid, default=0.0), sweeps)
    object.__setattr__(d, "groups", multiplicity_groups(d))
    return d


def multiplicity_groups(d: SpectralDecomposition, rel_tol: float = GROUP_REL_TOL) -> list[range]:
    """Runs of consecutive eigenvalues equal to within ``rel_tol * max(1, |lam|)``."""
    if rel_tol <= 0:
        raise ValueError("rel_tol must be positive")
    lam = d.eigenvalues
    groups, start = [], 0
    for k in range(1, len(lam)):
        if abs(lam[k - 1] - lam[k]) > rel_tol * max(1.0, abs(lam[k - 1])):
            groups.append(range(start, k))
            start = k
    if len(lam):
        groups.append(range(start, len(lam)))
    return groups


def eigen_residual(s, lam: float, v) -> float:
    """``||S v - lam v|| / ||v||``; accepts real or complex ``v``."""
    m = s.entries if isinstance(s, OperatorMatrix) else np.asarray(s)
    v = np.asarray(v)
    nv = float(np.linalg.norm(v))
    if nv == 0.0:
        raise ZeroVector("eigen residual of the zero vector is undefined")
    return float(np.linalg.norm(m @ v - lam * v)) / nv


def spectrum(mu: DiscreteMeasure) -> SpectralDecomposition:
    return symmetric_eigendecomposition(laplacian_matrix(mu), SPECTRUM_TOL)


def eigenfunctions(mu: DiscreteMeasure, d: SpectralDecomposition | None = None) -> list[StepFunction]:
    """Eigenvectors of the Laplacian wrapped as step functions over ``mu``."""
    d = spectrum(mu) if d is None else d
    return [StepFunction(mu, v) for v in d.eigenvectors]
