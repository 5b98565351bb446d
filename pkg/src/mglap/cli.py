"""Command-line entry point: ``mglap <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import closed_forms as cf
from . import experiments as ex
from .errors import MGLError
from .functions import fmt
from .measure import load_measure
from .operators import derivative_matrix, laplacian_matrix
from .spectral import eigen_residual, multiplicity_groups, spectrum


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.replace(",", " ").split()]


def _float_list(text: str) -> list[float]:
    return [float(t) for t in text.replace(",", " ").split()]


def _flatten(values: list[list]) -> list:
    return [x for chunk in values for x in chunk]


def _closed_for_measure(mu, family: str) -> cf.ClosedFormSpectrum:
    fam = cf.Family(family)
    a = mu.weights
    if fam is cf.Family.UNIFORM:
        if any(abs(w - 1.0 / mu.n) > 1e-12 for w in a):
            raise MGLError("measure is not uniform")
        return cf.uniform_spectrum(mu.n)
    if fam is cf.Family.TWO_ATOM:
        if mu.n != 2:
            raise MGLError("two_atom needs exactly two atoms")
        return cf.two_atom_spectrum(*a)
    if mu.n != 6 or a[0::2] != (a[0],) * 3 or a[1::2] != (a[1],) * 3:
        raise MGLError("alternating6 needs six atoms with weights m1, m2, m1, m2, m1, m2")
    return cf.alternating6_spectrum(a[0], a[1])


def _vector_json(v):
    v = np.asarray(v)
    if np.iscomplexobj(v):
        return {"re": [float(x) for x in v.real], "im": [float(x) for x in v.imag]}
    return [float(x) for x in v]


def cmd_spectrum(args) -> int:
    mu = load_measure(args.measure)
    b = laplacian_matrix(mu)
    if args.closed_form:
        closed = _closed_for_measure(mu, args.closed_form)
        lam, vecs = closed.eigenvalues, closed.eigenvectors
        residuals = [eigen_residual(b, x, v) for x, v in zip(lam, vecs)]
        # group equal closed-form values in order of first appearance
        ids, reps = [], []
        for x in lam:
            for gid, rep in enumerate(reps):
                if abs(x - rep) <= 1e-8 * max(1.0, abs(rep)):
                    ids.append(gid)
                    break
            else:
                reps.append(x)
                ids.append(len(reps) - 1)
        groups = None
    else:
        d = spectrum(mu)
        lam, vecs = d.eigenvalues, d.eigenvectors
        residuals = ex.pair_residuals(b, d)
        ids = d.group_ids()
        groups = [[g.start, g.stop] for g in multiplicity_groups(d)]
    if args.out == "csv":
        sys.stdout.write(
            ex.csv_text(
                ["index", "eigenvalue", "group_id", "residual"],
                [[k, fmt(x), ids[k], fmt(r)] for k, (x, r) in enumerate(zip(lam, residuals))],
            )
        )
    else:
        doc = {
            "n": mu.n,
            "closed_form": args.closed_form,
            "groups": groups,
            "max_residual": float(max(residuals)),
            "pairs": [
                {
                    "index": k,
                    "eigenvalue": float(x),
                    "group_id": ids[k],
                    "residual": float(r),
                    "eigenvector": _vector_json(v),
                }
                for k, (x, r, v) in enumerate(zip(lam, residuals, vecs))
            ],
        }
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0


def cmd_operator(args) -> int:
    mu = load_measure(args.measure)
    m = (derivative_matrix(mu) if args.which == "A" else laplacian_matrix(mu)).entries
    if args.format == "csv":
        sys.stdout.write(ex.csv_text(None, [[fmt(x) for x in row] for row in m]))
    else:
        sys.stdout.write(json.dumps([[float(x) for x in row] for row in m]) + "\n")
    return 0


def cmd_eigenfunctions(args) -> int:
    mu = load_measure(args.measure)
    for p in ex.export_eigenfunctions(mu, args.out_dir):
        print(p)
    return 0


def cmd_verify(args) -> int:
    mu = load_measure(args.measure)
    report = ex.verify(mu, args.tol, args.seed)
    sys.stdout.write(report.to_json() + "\n")
    return 0 if report.passed else 1


def cmd_converge(args) -> int:
    rows = ex.convergence_table(_flatten(args.N), _flatten(args.l))
    sys.stdout.write(ex.convergence_csv(rows))
    return 0


def cmd_scan_trig(args) -> int:
    mu = load_measure(args.measure)
    shifts = _flatten(args.shift) if args.shift else [0.0]
    rows = ex.scan_trig(mu, ex.kappa_grid(args.kappa_step, args.kappa_max), shifts)
    sys.stdout.write(ex.scan_csv(rows))
    return 0


def cmd_ellipse(args) -> int:
    sys.stdout.write(ex.ellipse_csv(args.m1, args.m2))
    return 0


def cmd_figures(args) -> int:
    params = {"uniform": (args.n,), "alternating6": (args.m1, args.m2), "two_atom": (args.a1, args.a2)}
    for p in ex.export_figures(args.family, params[args.family], args.out_dir):
        print(p)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mglap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="eigenvalues of the mu-Laplacian")
    p.add_argument("--measure", required=True)
    p.add_argument("--closed-form", choices=[f.value for f in cf.Family])
    p.add_argument("--out", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("operator", help="dump the matrix A or B")
    p.add_argument("--measure", required=True)
    p.add_argument("--which", choices=["A", "B"], default="B")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_operator)

    p = sub.add_parser("eigenfunctions", help="write eigenfunction CSVs")
    p.add_argument("--measure", required=True)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_eigenfunctions)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--measure", required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("converge", help="uniform eigenvalues vs -(2 pi l)^2")
    p.add_argument("--N", type=_int_list, nargs="+", required=True)
    p.add_argument("--l", type=_int_list, nargs="+", required=True)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("scan-trig", help="sin/cos(pi kappa F) eigen-residual scan")
    p.add_argument("--measure", required=True)
    p.add_argument("--kappa-step", type=float, required=True)
    p.add_argument("--kappa-max", type=float, required=True)
    p.add_argument("--shift", type=_float_list, nargs="+")
    p.set_defaults(func=cmd_scan_trig)

    p = sub.add_parser("ellipse", help="tuples S15, S24 and their ellipse residuals")
    p.add_argument("--m1", type=float, required=True)
    p.add_argument("--m2", type=float, required=True)
    p.set_defaults(func=cmd_ellipse)

    p = sub.add_parser("figures", help="closed-form eigenfunction CSVs for a family")
    p.add_argument("--family", choices=[f.value for f in cf.Family], required=True)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--m1", type=float, default=0.25)
    p.add_argument("--m2", type=float, default=1 / 12)
    p.add_argument("--a1", type=float, default=0.5)
    p.add_argument("--a2", type=float, default=0.5)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_figures)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MGLError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
