"""Finitely supported probability measures on [0, 1)."""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ConstraintViolated,
    DomainError,
    MeasureFormatError,
    NonpositiveWeight,
    ShiftTooLarge,
    UnsortedPositions,
    WeightSumInvalid,
)

WEIGHT_SUM_TOL = 1e-12


@dataclass(frozen=True)
class DiscreteMeasure:
    """The measure ``sum_i weights[i] * delta(positions[i])``.

    Instances are immutable and compare by value. Build them through
    :func:`make_measure` (or the family constructors) so the invariants are
    checked; the bare constructor re-validates anyway.
    """

    positions: tuple[float, ...]
    weights: tuple[float, ...]
    _z: np.ndarray = field(init=False, repr=False, compare=False)
    _alpha: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        z = np.array(self.positions, dtype=np.float64)
        a = np.array(self.weights, dtype=np.float64)
        _validate(z, a)
        z.flags.writeable = False
        a.flags.writeable = False
        object.__setattr__(self, "_z", z)
        object.__setattr__(self, "_alpha", a)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def z(self) -> np.ndarray:
        """Atom positions as a read-only array."""
        return self._z

    @property
    def alpha(self) -> np.ndarray:
        """Atom weights as a read-only array."""
        return self._alpha

    @property
    def is_degenerate(self) -> bool:
        """True for a single Dirac mass, where the mu-derivative is the null operator."""
        return self.n == 1

    def fingerprint(self) -> str:
        """Short hash of the weight vector (positions do not affect the operators)."""
        return hashlib.sha256(self._alpha.tobytes()).hexdigest()[:16]

    def to_dict(self) -> dict:
        return {"atoms": [{"z": z, "alpha": a} for z, a in zip(self.positions, self.weights)]}


def _validate(z: np.ndarray, a: np.ndarray) -> None:
    if z.ndim != 1 or z.shape != a.shape or z.size == 0:
        raise MeasureFormatError("need a non-empty list of (position, weight) pairs")
    if not (np.all(np.isfinite(z)) and np.all(np.isfinite(a))):
        raise MeasureFormatError("positions and weights must be finite")
    if z[0] < 0.0 or z[-1] >= 1.0 or np.any(np.diff(z) <= 0.0):
        raise UnsortedPositions(
            "positions must satisfy 0 <= z_1 < z_2 < ... < z_N < 1, got %s" % z.tolist()
        )
    if np.any(a <= 0.0):
        raise NonpositiveWeight("all weights must be positive, got %s" % a.tolist())
    total = math.fsum(a.tolist())
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise WeightSumInvalid("weights sum to %.17g, not 1" % total)


def make_measure(atoms: Iterable[tuple[float, float]], normalize: bool = False) -> DiscreteMeasure:
    """Build a validated measure from ``(position, weight)`` pairs.

    With ``normalize`` the weights are divided by their sum first; the sum
    check then applies to the rescaled weights.
    """
    atoms = [(float(z), float(a)) for z, a in atoms]
    if not atoms:
        raise MeasureFormatError("need at least one atom")
    positions = tuple(z for z, _ in atoms)
    weights = [a for _, a in atoms]
    if normalize:
        if any(a <= 0.0 for a in weights):
            raise NonpositiveWeight("all weights must be positive, got %s" % weights)
        total = math.fsum(weights)
        weights = [a / total for a in weights]
    return DiscreteMeasure(positions, tuple(weights))


def uniform_measure(n: int, positions: Sequence[float] | None = None) -> DiscreteMeasure:
    """Equal weights ``1/n``; positions default to ``(i - 1)/n``."""
    if n < 1:
        raise MeasureFormatError("n must be positive")
    if positions is None:
        positions = [i / n for i in range(n)]
    elif len(positions) != n:
        raise MeasureFormatError("expected %d positions, got %d" % (n, len(positions)))
    return make_measure([(z, 1.0 / n) for z in positions])


def alternating_measure(
    m1: float, m2: float, positions: Sequence[float] | None = None
) -> DiscreteMeasure:
    """Six atoms with weights ``m1, m2, m1, m2, m1, m2`` where ``3*m1 + 3*m2 = 1``.

    Default positions are the cell midpoints ``(i - 1)/6 + 1/12``.
    """
    if m1 <= 0.0 or m2 <= 0.0:
        raise NonpositiveWeight("m1 and m2 must be positive")
    if abs(3.0 * m1 + 3.0 * m2 - 1.0) > WEIGHT_SUM_TOL:
        raise ConstraintViolated("3*m1 + 3*m2 = %.17g, expected 1" % (3.0 * m1 + 3.0 * m2))
    if positions is None:
        positions = [i / 6 + 1 / 12 for i in range(6)]
    elif len(positions) != 6:
        raise MeasureFormatError("expected 6 positions")
    return make_measure(zip(positions, [m1, m2] * 3))


def two_atom_measure(a1: float, a2: float, positions: Sequence[float] = (0.25, 0.75)) -> DiscreteMeasure:
    if a1 <= 0.0 or a2 <= 0.0:
        raise NonpositiveWeight("weights must be positive")
    if abs(a1 + a2 - 1.0) > WEIGHT_SUM_TOL:
        raise ConstraintViolated("a1 + a2 = %.17g, expected 1" % (a1 + a2))
    return make_measure(zip(positions, (a1, a2)))


def admissible_shift_bound(mu: DiscreteMeasure) -> float:
    """Supremum of the shifts ``eps`` allowed in :func:`distribution_function`."""
    gaps = np.diff(mu.z)
    return float(min(mu.z[0], gaps.min())) if gaps.size else float(mu.z[0])


def distribution_function(mu: DiscreteMeasure, x: float, shift: float = 0.0) -> float:
    """``F(x - shift) = sum of weights at atoms z_i <= x - shift``.

    ``shift`` must be 0 or lie strictly inside ``(0, min(z_1, min gap))``.
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError("x = %r outside [0, 1]" % x)
    if shift < 0.0 or (shift > 0.0 and shift >= admissible_shift_bound(mu)):
        raise ShiftTooLarge(
            "shift %r not in (0, %r)" % (shift, admissible_shift_bound(mu))
        )
    k = int(np.searchsorted(mu.z, x - shift, side="right"))
    return math.fsum(mu.weights[:k])


# -- JSON --------------------------------------------------------------------


def _reject_constant(name):
    raise MeasureFormatError("non-finite number %s in measure JSON" % name)


def measure_from_json(text: str) -> DiscreteMeasure:
    """Parse ``{"atoms": [{"z": ..., "alpha": ...}, ...]}``."""
    try:
        data = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise MeasureFormatError("invalid JSON: %s" % exc) from None
    if not isinstance(data, dict) or not isinstance(data.get("atoms"), list):
        raise MeasureFormatError('expected an object with an "atoms" list')
    pairs = []
    for atom in data["atoms"]:
        if not isinstance(atom, dict) or set(atom) != {"z", "alpha"}:
            raise MeasureFormatError('each atom must be {"z": <real>, "alpha": <real>}')
        z, a = atom["z"], atom["alpha"]
        if isinstance(z, bool) or isinstance(a, bool) or not all(
            isinstance(v, (int, float)) for v in (z, a)
        ):
            raise MeasureFormatError("atom fields must be numbers")
        if not (math.isfinite(z) and math.isfinite(a)):
            raise MeasureFormatError("non-finite atom field")
        pairs.append((float(z), float(a)))
    zs = [z for z, _ in pairs]
    if len(set(zs)) != len(zs):
        raise MeasureFormatError("duplicate atom position")
    return make_measure(pairs)


def measure_to_json(mu: DiscreteMeasure) -> str:
    return json.dumps(mu.to_dict())


def load_measure(path) -> DiscreteMeasure:
    with open(path, encoding="utf-8") as fh:
        return measure_from_json(fh.read())
