"""Step functions over a discrete measure and the mu-calculus acting on them.

A function in the domain of the mu-derivative is constant on ``[0, z_1]``,
on each ``(z_i, z_{i+1}]`` and on ``(z_N, 1]``, with ``f(1) = f(0) = f(z_1)``.
It is therefore stored as its atom values ``(f(z_1), ..., f(z_N))`` only.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateMeasure, DomainError, MeasureMismatch, NotADerivative
from .measure import DiscreteMeasure


@dataclass(frozen=True, eq=False)
class StepFunction:
    measure: DiscreteMeasure
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.array(self.values, dtype=np.float64)
        if v.shape != (self.measure.n,):
            raise MeasureMismatch(
                "expected %d atom values, got shape %s" % (self.measure.n, v.shape)
            )
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    def __call__(self, x: float) -> float:
        return evaluate(self, x)

    def __repr__(self):
        return "StepFunction(n=%d, values=%s)" % (self.measure.n, self.values.tolist())

    def segments(self) -> list[tuple[float, float, float]]:
        """Constancy intervals as ``(left, right, value)`` rows.

        The wrap-around interval is emitted as the two rows ``[0, z_1]`` and
        ``(z_N, 1]`` carrying the same value.
        """
        z, v = self.measure.z, self.values
        rows = [(0.0, float(z[0]), float(v[0]))]
        rows += [(float(z[i]), float(z[i + 1]), float(v[i + 1])) for i in range(len(z) - 1)]
        rows.append((float(z[-1]), 1.0, float(v[0])))
        return rows


def _check_same(f: StepFunction, g: StepFunction) -> DiscreteMeasure:
    if f.measure is not g.measure and f.measure != g.measure:
        raise MeasureMismatch("functions live over different measures")
    return f.measure


def _require_operator_measure(mu: DiscreteMeasure) -> None:
    if mu.n < 2:
        raise DegenerateMeasure("the mu-derivative of a single Dirac mass is the null operator")


def evaluate(f: StepFunction, x: float) -> float:
    """Value of the piecewise-constant extension at ``x`` in [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise DomainError("x = %r outside [0, 1]" % x)
    z = f.measure.z
    # index of the first atom >= x; atoms past z_N wrap to z_1
    k = int(np.searchsorted(z, x, side="left"))
    return float(f.values[k % len(z)])


def inner(mu: DiscreteMeasure, f: StepFunction, g: StepFunction) -> float:
    if _check_same(f, g) != mu:
        raise MeasureMismatch("functions do not live over the given measure")
    return float(np.dot(mu.alpha * f.values, g.values))


def norm(mu: DiscreteMeasure, f: StepFunction) -> float:
    return math.sqrt(inner(mu, f, f))


def integral_upto(mu: DiscreteMeasure, g: StepFunction, x: float) -> float:
    """Integral of ``g`` against ``mu`` over ``[0, x)``; ``[0, 0)`` is empty."""
    if not 0.0 <= x <= 1.0:
        raise DomainError("x = %r outside [0, 1]" % x)
    if g.measure != mu:
        raise MeasureMismatch("function does not live over the given measure")
    k = int(np.searchsorted(mu.z, x, side="left"))
    return math.fsum((mu.alpha[:k] * g.values[:k]).tolist())


def derivative_values(mu: DiscreteMeasure, values: np.ndarray) -> np.ndarray:
    """Periodic forward differences divided by the weights (the action of A)."""
    return (np.roll(values, -1) - values) / mu.alpha


def mu_derivative(mu: DiscreteMeasure, f: StepFunction) -> StepFunction:
    _require_operator_measure(mu)
    if f.measure != mu:
        raise MeasureMismatch("function does not live over the given measure")
    return StepFunction(mu, derivative_values(mu, f.values))


def mu_antiderivative(mu: DiscreteMeasure, g: StepFunction, f0: float) -> StepFunction:
    """Invert :func:`mu_derivative`: ``f(z_k) = f0 + sum_{i<k} alpha_i g(z_i)``.

    Only functions whose total mu-integral vanishes are derivatives of a
    periodic function; anything else raises :class:`NotADerivative`.
    """
    if g.measure != mu:
        raise MeasureMismatch("function does not live over the given measure")
    total = integral_upto(mu, g, 1.0)
    gmax = float(np.max(np.abs(g.values)))
    if abs(total) > 1e-10 * (1.0 + gmax):
        raise NotADerivative("total mu-integral is %.3e, expected 0" % total)
    increments = mu.alpha[:-1] * g.values[:-1]
    values = f0 + np.concatenate(([0.0], np.cumsum(increments)))
    return StepFunction(mu, values)


def energy(mu: DiscreteMeasure, f: StepFunction, g: StepFunction) -> float:
    """The mu-energy form, ``<grad f, grad g>``."""
    _check_same(f, g)
    return inner(mu, mu_derivative(mu, f), mu_derivative(mu, g))


def clamp_unit(f: StepFunction) -> StepFunction:
    return StepFunction(f.measure, np.clip(f.values, 0.0, 1.0))


def step_function_csv(f: StepFunction) -> str:
    """CSV with columns ``segment_left,segment_right,value``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["segment_left", "segment_right", "value"])
    for left, right, value in f.segments():
        w.writerow([fmt(left), fmt(right), fmt(value)])
    return buf.getvalue()


def fmt(x: float) -> str:
    """17 significant digits, enough for a bit-exact round trip."""
    return format(float(x), ".17g")
