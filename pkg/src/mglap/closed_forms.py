"""Analytic spectra for the measure families that have closed forms.

Eigenvectors are returned unnormalised, with the entries the formulas give; compare
them to solver output through residuals or subspace projections only.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConstraintViolated, IndexOutOfRange, LengthMismatch, ZeroKappa
from .functions import StepFunction
from .measure import WEIGHT_SUM_TOL, DiscreteMeasure, distribution_function, uniform_measure


class Family(enum.Enum):
    UNIFORM = "uniform"
    TWO_ATOM = "two_atom"
    ALTERNATING6 = "alternating6"


@dataclass(frozen=True, eq=False)
class ClosedFormSpectrum:
    family: Family
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # row l pairs with eigenvalues[l]
    params: tuple


# -- uniform weights -----------------------------------------------------------


def _check_uniform_index(n: int, l: int) -> None:
    if n < 3:
        raise IndexOutOfRange("uniform closed form needs N >= 3, got %d" % n)
    if not 0 <= l <= n - 1:
        raise IndexOutOfRange("l = %d outside 0..%d" % (l, n - 1))


def uniform_eigenvalue(n: int, l: int) -> float:
    """``-2 N^2 + 2 N^2 cos(2 pi l / N)``.

    Evaluated as ``-4 N^2 sin^2(pi l' / N)`` with ``l' = min(l, N - l)``, which
    is the same number without the cancellation in ``1 - cos`` and makes the
    ``l <-> N - l`` symmetry exact in floating point.
    """
    _check_uniform_index(n, l)
    l = min(l, n - l)
    return -4.0 * n * n * math.sin(math.pi * l / n) ** 2


def uniform_eigenvector(n: int, l: int) -> np.ndarray:
    """Discrete Fourier vector ``(exp(2 pi i k l / N))_{k=0..N-1}``."""
    _check_uniform_index(n, l)
    k = (np.arange(n) * l) % n  # reduce the phase before scaling
    return np.exp(2j * np.pi * k / n)


def uniform_eigenfunction_values(n: int, l: int) -> np.ndarray:
    """Real eigenfunction atom values: sine branch for ``0 < l < N/2``, cosine
    branch for ``N/2 <= l``, constant one for ``l = 0``."""
    _check_uniform_index(n, l)
    if l == 0:
        return np.ones(n)
    v = uniform_eigenvector(n, l)
    return v.imag.copy() if l < n / 2 else v.real.copy()


def uniform_eigenfunction(n: int, l: int, positions=None) -> StepFunction:
    mu = uniform_measure(n, positions)
    return StepFunction(mu, uniform_eigenfunction_values(n, l))


def uniform_spectrum(n: int) -> ClosedFormSpectrum:
    lam = np.array([uniform_eigenvalue(n, l) for l in range(n)])
    vecs = np.array([uniform_eigenvector(n, l) for l in range(n)])
    return ClosedFormSpectrum(Family.UNIFORM, lam, vecs, (n,))


# -- two atoms -------------------------------------------------------------------


def two_atom_spectrum(a1: float, a2: float) -> ClosedFormSpectrum:
    if a1 <= 0 or a2 <= 0 or abs(a1 + a2 - 1.0) > WEIGHT_SUM_TOL:
        raise ConstraintViolated("need a1, a2 > 0 with a1 + a2 = 1, got (%r, %r)" % (a1, a2))
    lam = np.array([0.0, -2.0 * (a1**-2 + a2**-2)])
    vecs = np.array([[1.0, 1.0], [1.0, -1.0]])
    return ClosedFormSpectrum(Family.TWO_ATOM, lam, vecs, (a1, a2))


# -- six atoms, alternating weights ------------------------------------------------


def alternating6_spectrum(m1: float, m2: float) -> ClosedFormSpectrum:
    """Eigenpairs for weights ``(m1, m2, m1, m2, m1, m2)`` with ``3 m1 + 3 m2 = 1``.

    With ``r = m2/m1`` and ``s = sqrt(1 + r^4 - r^2)`` the eigenvalues are
    ``0``, ``-(m1^-2 + m2^-2) +- sqrt(m1^-4 + m2^-4 - m1^-2 m2^-2)`` (each
    twice) and ``-2 (m1^-2 + m2^-2)``.
    """
    if m1 <= 0 or m2 <= 0 or abs(3.0 * m1 + 3.0 * m2 - 1.0) > WEIGHT_SUM_TOL:
        raise ConstraintViolated("need m1, m2 > 0 with 3 m1 + 3 m2 = 1, got (%r, %r)" % (m1, m2))
    p, q = m1**-2, m2**-2
    root = math.sqrt(p * p + q * q - p * q)
    lam = np.array([0.0, -(p + q) + root, -(p + q) - root, -2.0 * (p + q), -(p + q) - root, -(p + q) + root])
    r = m2 / m1
    r2 = r * r
    s = math.sqrt(1.0 + r2 * r2 - r2)
    vecs = np.array(
        [
            [1.0, 1.0, 1.0, 1.0, 1.0, 1.0],
            [r2, s, 1.0 - r2, -s, -1.0, 0.0],
            [r2, -s, 1.0 - r2, s, -1.0, 0.0],
            [1.0, -1.0, 1.0, -1.0, 1.0, -1.0],
            [s, 1.0 - r2, -s, r2, 0.0, -1.0],
            [s, r2 - 1.0, -s, -r2, 0.0, 1.0],
        ]
    )
    return ClosedFormSpectrum(Family.ALTERNATING6, lam, vecs, (m1, m2, r))


@dataclass(frozen=True)
class EllipseSpec:
    """The conic ``left * (x^2 + y^2 - 1) = right * x * y`` for weight ratio ``r``."""

    r: float

    @property
    def left(self) -> float:
        return math.sqrt(1.0 + self.r**-4 - self.r**-2)

    @property
    def right(self) -> float:
        return 2.0 - self.r**-2


def ellipse_residual(spec: EllipseSpec, x: float, y: float) -> float:
    return spec.left * (x * x + y * y - 1.0) - spec.right * x * y


def eigenpair_tuples(va, vb) -> list[tuple[float, float]]:
    va, vb = np.asarray(va), np.asarray(vb)
    if va.shape != vb.shape:
        raise LengthMismatch("vectors of length %d and %d" % (va.size, vb.size))
    return [(float(x), float(y)) for x, y in zip(va, vb)]


def ellipse_tuples(m1: float, m2: float) -> dict[str, list[tuple[float, float]]]:
    """Component pairs of the two double eigenspaces, keyed ``"S15"`` and ``"S24"``."""
    v = alternating6_spectrum(m1, m2).eigenvectors
    return {"S15": eigenpair_tuples(v[1], v[5]), "S24": eigenpair_tuples(v[2], v[4])}


# -- sine / cosine of the distribution function -------------------------------------


def trig_vectors(mu: DiscreteMeasure, kappa: float, shift: float = 0.0) -> tuple[np.ndarray, np.ndarray]:
    """``(sin(pi kappa F(z_i - shift)))_i`` and the matching cosine vector."""
    if kappa == 0:
        raise ZeroKappa("kappa must be nonzero")
    f = np.array([distribution_function(mu, z, shift) for z in mu.z])
    phase = np.pi * kappa * f
    return np.sin(phase), np.cos(phase)
