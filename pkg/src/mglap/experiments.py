"""Verification suite, convergence table, trig scan and CSV exports."""

from __future__ import annotations

import csv
import io
import json
import math
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import closed_forms as cf
from .errors import DegenerateMeasure, IndexOutOfRange, ZeroVector
from .functions import (
    StepFunction,
    clamp_unit,
    energy,
    fmt,
    inner,
    integral_upto,
    mu_antiderivative,
    mu_derivative,
    step_function_csv,
)
from .measure import (
    DiscreteMeasure,
    alternating_measure,
    make_measure,
    two_atom_measure,
    uniform_measure,
)
from .operators import derivative_matrix, laplacian_matrix, laplacian_stencil, matrix_rank
from .spectral import SpectralDecomposition, eigen_residual, spectrum

DEFAULT_JACOBI_CAP = 512
N_RANDOM_FUNCTIONS = 100


@dataclass
class CheckResult:
    name: str
    residual: float
    threshold: float
    passed: bool


@dataclass
class VerificationReport:
    checks: list[CheckResult]
    n: int
    weights_hash: str
    seed: int
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> str:
        d = asdict(self)
        return json.dumps(d, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        d = json.loads(text)
        checks = [CheckResult(**c) for c in d["checks"]]
        report = cls(checks, d["n"], d["weights_hash"], d["seed"])
        if report.passed != d["passed"]:
            raise ValueError("inconsistent pass flag in report")
        return report


def _check(name: str, residual: float, threshold: float) -> CheckResult:
    residual = float(residual)
    return CheckResult(name, residual, float(threshold), bool(residual <= threshold))


def random_positions(rng: np.random.Generator, n: int, min_gap: float = 1e-6) -> np.ndarray:
    """Sorted uniform draws in [0, 1), redrawn until consecutive gaps exceed ``min_gap``."""
    while True:
        z = np.sort(rng.uniform(0.0, 1.0, n))
        if n == 1 or np.diff(z).min() > min_gap:
            if z[-1] < 1.0:
                return z


def random_measure(
    rng: np.random.Generator, n: int | None = None, n_range=(2, 64), min_weight: float = 1e-6
) -> DiscreteMeasure:
    """Weights are normalised squared normals (redrawn below ``min_weight``)."""
    if n is None:
        n = int(rng.integers(n_range[0], n_range[1] + 1))
    while True:
        w = rng.standard_normal(n) ** 2
        w /= w.sum()
        if w.min() >= min_weight:
            break
    z = random_positions(rng, n)
    return make_measure(zip(z.tolist(), w.tolist()), normalize=True)


def verify(mu: DiscreteMeasure, tol: float = 1e-9, seed: int = 0) -> VerificationReport:
    """Run every structural and spectral check on ``mu``.

    ``tol`` scales the spectral checks (relative to ``||B||_F``); the other
    thresholds are fixed. Random functions come from ``seed`` only.
    """
    if mu.n < 2:
        raise DegenerateMeasure("verification needs N >= 2")
    rng = np.random.default_rng(seed)
    n = mu.n
    inv2max = float(np.max(mu.alpha ** -2.0))
    a = derivative_matrix(mu).entries
    bop = laplacian_matrix(mu)
    b = bop.entries
    bnorm = bop.frobenius()
    ones = np.ones(n)
    checks = [
        _check("row_sums_A", np.max(np.abs(a @ ones)), 0.0),
        _check("row_sums_B", np.max(np.abs(b @ ones)), 1e-12 * inv2max),
        _check("symmetry_B", np.max(np.abs(b - b.T)), 0.0),
        _check("stencil_B", np.max(np.abs(b - laplacian_stencil(mu))), 1e-12 * inv2max),
        _check("rank_A", abs(matrix_rank(a, 1e-10) - (n - 1)), 0),
        _check("rank_B", abs(matrix_rank(b, 1e-10) - (n - 1)), 0),
    ]

    fs = rng.standard_normal((N_RANDOM_FUNCTIONS, n)) * 2.0
    gs = rng.standard_normal((N_RANDOM_FUNCTIONS, n)) * 2.0
    worst_energy = worst_coord = worst_zero = worst_trip = worst_markov = 0.0
    for fv, gv in zip(fs, gs):
        f, g = StepFunction(mu, fv), StepFunction(mu, gv)
        df = mu_derivative(mu, f)
        e = inner(mu, df, mu_derivative(mu, g))
        bf = StepFunction(mu, b @ fv)
        scale = (1 + np.abs(fv).max()) * (1 + np.abs(gv).max()) * inv2max
        worst_energy = max(worst_energy, abs(e + inner(mu, bf, g)) / scale)
        # same identity in the plain Euclidean pairing, which -A^T A satisfies for any weights
        coord = np.dot(df.values, a @ gv) + np.dot(b @ fv, gv)
        worst_coord = max(worst_coord, abs(coord) / scale)
        worst_zero = max(
            worst_zero, abs(integral_upto(mu, df, 1.0)) / (1 + np.abs(df.values).max())
        )
        back = mu_antiderivative(mu, df, fv[0]).values
        worst_trip = max(worst_trip, np.max(np.abs(back - fv)) / (1 + np.abs(fv).max()))
        worst_markov = max(worst_markov, energy(mu, clamp_unit(f), clamp_unit(f)) - energy(mu, f, f))
    checks += [
        _check("energy_identity", worst_energy, 1e-10),
        _check("energy_identity_coordinates", worst_coord, 1e-10),
        _check("zero_total_derivative", worst_zero, 1e-12),
        _check("antiderivative_round_trip", worst_trip, 1e-10),
        _check("markov_clamp", worst_markov, 1e-12),
    ]

    vs = rng.standard_normal((N_RANDOM_FUNCTIONS, n))
    quad = np.einsum("ki,ij,kj->k", vs, b, vs) / np.einsum("ki,ki->k", vs, vs)
    checks.append(_check("negative_semidefinite", quad.max() / bnorm, 1e-10))

    d = spectrum(mu)
    lam = d.eigenvalues
    lower = 2.0 * float(np.min(np.diag(b)))
    checks += [
        _check("eigen_residual", d.max_residual / bnorm, tol),
        _check("eigen_orthonormal", np.max(np.abs(d.eigenvectors @ d.eigenvectors.T - np.eye(n))), 1e-10),
        _check("eigen_upper_bound", max(lam.max(), 0.0) / bnorm, tol),
        _check("eigen_lower_bound", max(lower - lam.min(), 0.0) / bnorm, tol),
        _check("zero_eigenvalue", abs(lam[0]) / bnorm, tol),
        _check("zero_eigenvalue_simple", len(d.groups[0]) - 1, 0),
    ]

    shuffled = random_positions(rng, n)
    other = make_measure(zip(shuffled.tolist(), mu.weights))
    checks.append(
        _check("position_independence", np.max(np.abs(laplacian_matrix(other).entries - b)), 0.0)
    )
    return VerificationReport(checks, n, mu.fingerprint(), seed)


# -- convergence to the classical Laplacian --------------------------------------


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    l: int
    lambda_numeric: float | None
    lambda_closed: float
    classical: float
    relative_gap: float


def jacobi_cap() -> int:
    return int(os.environ.get("MGL_JACOBI_CAP", DEFAULT_JACOBI_CAP))


def sorted_index(n: int, l: int) -> int:
    """Position of ``lambda_l`` in the descending uniform spectrum."""
    k = min(l, n - l)
    return 0 if k == 0 else 2 * k - 1


def convergence_table(n_list, l_list, cap: int | None = None) -> list[ConvergenceRow]:
    """Uniform-measure eigenvalues against ``-(2 pi l)^2`` for every ``(N, l)``.

    The Jacobi value is only computed for ``N <= cap`` (default from
    ``MGL_JACOBI_CAP`` or 512); above it ``lambda_numeric`` is ``None``.
    """
    cap = jacobi_cap() if cap is None else cap
    rows = []
    for n in n_list:
        if n < 3:
            raise IndexOutOfRange("convergence table needs N >= 3, got %d" % n)
        d = spectrum(uniform_measure(n)) if n <= cap else None
        for l in l_list:
            if not 0 <= l < n:
                raise IndexOutOfRange("l = %d not below N = %d" % (l, n))
            closed = cf.uniform_eigenvalue(n, l)
            classical = -((2.0 * math.pi * l) ** 2)
            gap = 0.0 if l == 0 else abs(closed / classical - 1.0)
            numeric = None if d is None else float(d.eigenvalues[sorted_index(n, l)])
            rows.append(ConvergenceRow(n, l, numeric, closed, classical, gap))
    return rows


def eigenfunction_sup_gap(n: int, l: int) -> float:
    """Sup distance between the step eigenfunction and sin/cos(2 pi l x) at the atoms
    ``z_k = k/N`` (no rate is claimed)."""
    v = cf.uniform_eigenfunction_values(n, l)
    x = np.arange(n) / n
    ref = np.ones(n) if l == 0 else (np.sin if l < n / 2 else np.cos)(2 * np.pi * l * x)
    return float(np.max(np.abs(v - ref)))


# -- sine / cosine counterexample scan -----------------------------------------------


@dataclass(frozen=True)
class ScanRow:
    kappa: float
    shift: float
    best_index: int
    residual_w: float
    residual_u: float


def _relative_residual(b, bnorm, lam, v) -> float:
    try:
        return eigen_residual(b, lam, v) / bnorm
    except ZeroVector:
        # B 0 = lam 0 holds trivially
        return 0.0


def scan_trig(mu: DiscreteMeasure, kappas, shifts=(0.0,)) -> list[ScanRow]:
    """For each ``(kappa, shift)``, the smallest relative eigen-residual
    ``||B v - lam_i v|| / (||v|| ||B||_F)`` over all eigenvalues, for the sine
    vector ``w`` and the cosine vector ``u``. ``best_index`` is the eigenvalue
    index attaining the smaller of the two."""
    bop = laplacian_matrix(mu)
    b, bnorm = bop.entries, bop.frobenius()
    lam = spectrum(mu).eigenvalues
    rows = []
    for shift in shifts:
        for kappa in kappas:
            w, u = cf.trig_vectors(mu, kappa, shift)
            rw = [_relative_residual(b, bnorm, x, w) for x in lam]
            ru = [_relative_residual(b, bnorm, x, u) for x in lam]
            best = int(np.argmin(np.minimum(rw, ru)))
            rows.append(ScanRow(float(kappa), float(shift), best, min(rw), min(ru)))
    return rows


def kappa_grid(step: float, kappa_max: float) -> list[float]:
    count = int(round(kappa_max / step))
    return [k * step for k in range(1, count + 1)]


def scan_floor(rows: list[ScanRow]) -> float:
    return min(min(r.residual_w, r.residual_u) for r in rows)


# -- CSV writers -------------------------------------------------------------------


def csv_text(header, rows) -> str:
    """CSV with LF line endings; ``header=None`` omits the header row."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def spectrum_csv(d: SpectralDecomposition, residuals=None) -> str:
    ids = d.group_ids()
    if residuals is None:
        residuals = [0.0] * len(d.eigenvalues)
    return csv_text(
        ["index", "eigenvalue", "group_id", "residual"],
        [[k, fmt(lam), ids[k], fmt(r)] for k, (lam, r) in enumerate(zip(d.eigenvalues, residuals))],
    )


def pair_residuals(b, d: SpectralDecomposition) -> list[float]:
    return [eigen_residual(b, lam, v) for lam, v in zip(d.eigenvalues, d.eigenvectors)]


def convergence_csv(rows: list[ConvergenceRow]) -> str:
    return csv_text(
        ["N", "l", "lambda_numeric", "lambda_closed", "classical", "relative_gap"],
        [
            [r.n, r.l, "" if r.lambda_numeric is None else fmt(r.lambda_numeric),
             fmt(r.lambda_closed), fmt(r.classical), fmt(r.relative_gap)]
            for r in rows
        ],
    )


def scan_csv(rows: list[ScanRow]) -> str:
    return csv_text(
        ["kappa", "shift", "best_index", "residual_w", "residual_u"],
        [[fmt(r.kappa), fmt(r.shift), r.best_index, fmt(r.residual_w), fmt(r.residual_u)] for r in rows],
    )


def ellipse_csv(m1: float, m2: float) -> str:
    spec = cf.EllipseSpec(m2 / m1)
    rows = []
    for name, tuples in cf.ellipse_tuples(m1, m2).items():
        for k, (x, y) in enumerate(tuples, start=1):
            rows.append([name, k, fmt(x), fmt(y), fmt(cf.ellipse_residual(spec, x, y))])
    return csv_text(["set", "component", "x", "y", "residual"], rows)


def _write(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def family_measure(family: str, params) -> tuple[DiscreteMeasure, cf.ClosedFormSpectrum, list[np.ndarray]]:
    """Measure, closed-form spectrum and real eigenfunction values for a family."""
    fam = cf.Family(family)
    if fam is cf.Family.UNIFORM:
        (n,) = params
        n = int(n)
        mu = uniform_measure(n)
        closed = cf.uniform_spectrum(n)
        values = [cf.uniform_eigenfunction_values(n, l) for l in range(n)]
    elif fam is cf.Family.ALTERNATING6:
        m1, m2 = params
        mu = alternating_measure(m1, m2)
        closed = cf.alternating6_spectrum(m1, m2)
        values = list(closed.eigenvectors)
    else:
        a1, a2 = params
        mu = two_atom_measure(a1, a2)
        closed = cf.two_atom_spectrum(a1, a2)
        values = list(closed.eigenvectors)
    return mu, closed, values


def export_figures(family: str, params, out_dir) -> list[Path]:
    """Write ``f_<l>.csv`` for every closed-form eigenfunction plus ``spectrum.csv``.

    Eigenfunction ``l`` pairs with the closed-form ``lambda_l`` (unsorted);
    ``spectrum.csv`` holds the Jacobi spectrum of the same measure.
    """
    mu, _, values = family_measure(family, params)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for l, v in enumerate(values):
        p = out / ("f_%d.csv" % l)
        _write(p, step_function_csv(StepFunction(mu, v)))
        paths.append(p)
    d = spectrum(mu)
    p = out / "spectrum.csv"
    _write(p, spectrum_csv(d, pair_residuals(laplacian_matrix(mu), d)))
    paths.append(p)
    return paths


def export_eigenfunctions(mu: DiscreteMeasure, out_dir) -> list[Path]:
    """Numerical eigenfunctions (sorted, unit norm) as step-function CSVs."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    d = spectrum(mu)
    paths = []
    for k, v in enumerate(d.eigenvectors):
        p = out / ("f_%d.csv" % k)
        _write(p, step_function_csv(StepFunction(mu, v)))
        paths.append(p)
    p = out / "spectrum.csv"
    _write(p, spectrum_csv(d, pair_residuals(laplacian_matrix(mu), d)))
    paths.append(p)
    return paths
