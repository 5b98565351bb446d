"""Dense matrix representations of the mu-derivative and the mu-Laplacian."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateMeasure
from .measure import DiscreteMeasure


class Kind(enum.Enum):
    DERIVATIVE = "A"
    LAPLACIAN = "B"
    GENERIC = "S"


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """An ``N x N`` real matrix tagged with the operator it represents."""

    entries: np.ndarray
    kind: Kind = Kind.GENERIC

    def __post_init__(self):
        m = np.array(self.entries, dtype=np.float64)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("operator matrix must be square, got shape %s" % (m.shape,))
        m.flags.writeable = False
        object.__setattr__(self, "entries", m)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __matmul__(self, other):
        return self.entries @ np.asarray(other)

    def frobenius(self) -> float:
        return float(np.linalg.norm(self.entries))


def _require(mu: DiscreteMeasure) -> None:
    if mu.n < 2:
        raise DegenerateMeasure("operators need at least two atoms (N = %d)" % mu.n)


def derivative_matrix(mu: DiscreteMeasure) -> OperatorMatrix:
    """``A`` with ``(A f)_i = (f_{i+1} - f_i) / alpha_i``, indices mod N."""
    _require(mu)
    n = mu.n
    inv = 1.0 / mu.alpha
    a = np.zeros((n, n))
    idx = np.arange(n)
    a[idx, idx] = -inv
    a[idx, (idx + 1) % n] = inv
    return OperatorMatrix(a, Kind.DERIVATIVE)


def laplacian_matrix(mu: DiscreteMeasure) -> OperatorMatrix:
    """``B = -A^T A``, symmetrised once to drop last-bit asymmetry."""
    a = derivative_matrix(mu).entries
    m = -(a.T @ a)
    return OperatorMatrix(0.5 * (m + m.T), Kind.LAPLACIAN)


def laplacian_stencil(mu: DiscreteMeasure) -> np.ndarray:
    """Weighted cycle-graph stencil of ``B`` written out entry by entry.

    Diagonal ``-(alpha_{i-1}^-2 + alpha_i^-2)``, neighbours ``alpha_i^-2`` at
    ``(i, i+1)`` and ``(i+1, i)``, cyclically. For ``N = 2`` both neighbour
    contributions land on the same off-diagonal entry.
    """
    _require(mu)
    n = mu.n
    w = mu.alpha ** -2.0
    s = np.zeros((n, n))
    for i in range(n):
        j = (i + 1) % n
        s[i, i] -= w[i]
        s[j, j] -= w[i]
        s[i, j] += w[i]
        s[j, i] += w[i]
    return s


def matrix_rank(m: OperatorMatrix | np.ndarray, tol: float = 1e-10) -> int:
    """Numerical rank by Gaussian elimination with partial pivoting.

    Pivots smaller than ``tol * max|m_ij|`` are treated as zero.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    u = np.array(m.entries if isinstance(m, OperatorMatrix) else m, dtype=np.float64)
    rows, cols = u.shape
    scale = float(np.max(np.abs(u))) if u.size else 0.0
    if scale == 0.0:
        return 0
    cutoff = tol * scale
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        p = rank + int(np.argmax(np.abs(u[rank:, c])))
        if abs(u[p, c]) <= cutoff:
            continue
        if p != rank:
            u[[rank, p]] = u[[p, rank]]
        below = u[rank + 1 :, c] / u[rank, c]
        u[rank + 1 :, c:] -= np.outer(below, u[rank, c:])
        rank += 1
    return rank
