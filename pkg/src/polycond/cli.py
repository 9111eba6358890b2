"""Command-line front end.

Subcommands:

* analyze   - condition numbers of every eigenvalue of a polynomial document
* verify    - evaluate all exact identities and report the worst residuals
* empirical - measure condition numbers by actual perturbation experiments
* sweep     - the parametric-pencil sweep as CSV (optionally with a gnuplot script)
* chordal   - chordal distance and angle between two lines of C^2

Exit codes are frozen for scripting: 0 success, 1 verification failure,
2 parse/usage error, 3 non-regular polynomial, 4 numerical or domain failure,
5 ambiguous eigenvalue match. POLYCOND_TOL overrides the default tolerance.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys

import numpy as np

from .cond import relation_report
from .docio import read_document
from .eig import eigentriple, eigenvalues
from .errors import (
    AmbiguousMatch,
    DocumentError,
    InvalidInput,
    NotRegular,
    PolycondError,
)
from .generate import random_regular
from .numlin import DEFAULT_TOL
from .perturb import (
    TARGET_A,
    TARGET_R,
    TARGET_THETA,
    PerturbationSpec,
    empirical_condition,
    example_sweep,
)
from .poly import WEIGHTS_CUSTOM, MatrixPolynomial, WeightScheme

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_NOT_REGULAR = 3
EXIT_NUMERIC = 4
EXIT_AMBIGUOUS = 5

_TARGETS = {"a": TARGET_A, "r": TARGET_R, "theta": TARGET_THETA}


def _fmt(x: float, digits: int) -> str:
    return format(float(x), f".{digits}g")


def _fmt_complex(z: complex, digits: int) -> str:
    re_part = _fmt(z.real, digits)
    im_part = _fmt(abs(z.imag), digits)
    sign = "-" if z.imag < 0 else "+"
    return f"{re_part}{sign}{im_part}i"


def parse_complex(text: str) -> complex:
    """Parse literals like '2', '-1.5', '2+3i', '1i', '-i'."""
    s = text.strip().replace(" ", "")
    if not s:
        raise InvalidInput("empty complex literal")
    s = s.replace("i", "j")
    s = re.sub(r"(?<![0-9.])j", "1j", s)  # bare imaginary unit
    try:
        return complex(s)
    except ValueError as exc:
        raise InvalidInput(f"cannot parse complex literal {text!r}") from exc


def _resolve_tol(args) -> float:
    if args.tol is not None:
        return float(args.tol)
    env = os.environ.get("POLYCOND_TOL")
    return float(env) if env else DEFAULT_TOL


def _resolve_weights(args, doc_weights, poly: MatrixPolynomial) -> WeightScheme:
    mode = getattr(args, "weights", None)
    if mode is None:
        return doc_weights if doc_weights is not None else WeightScheme.coefficient_norms(poly)
    if mode == WEIGHTS_CUSTOM:
        if doc_weights is None or doc_weights.mode != WEIGHTS_CUSTOM:
            raise DocumentError(
                "weights: --weights custom requires a custom weights block in the document"
            )
        return doc_weights
    return WeightScheme.for_mode(poly, mode)


def _regime(lambda_abs: float) -> tuple[str, str]:
    if lambda_abs == math.inf:
        return "infinite", "kappa_a/kappa_r undefined; kappa_theta extends them past infinity"
    if lambda_abs == 0.0:
        return "zero", "kappa_r undefined; kappa_theta = kappa_a"
    if lambda_abs <= 0.5:
        return "small", "kappa_theta ~ kappa_a << kappa_r"
    if lambda_abs < 2.0:
        return "moderate", "kappa_theta within a factor 2 of both kappa_a and kappa_r"
    return "large", "kappa_theta << kappa_r << kappa_a"


def _lambda_str(point, digits: int) -> str:
    return "inf" if point.is_infinite else _fmt_complex(point.lam, digits)


def _cmd_analyze(args) -> int:
    tol = _resolve_tol(args)
    doc = read_document(args.file)
    poly = doc.polynomial
    weights = _resolve_weights(args, doc.weights, poly)
    eigs = eigenvalues(poly, tol)

    rows = []
    for e in eigs:
        t = eigentriple(poly, e.point, tol, known_eigenvalues=eigs)
        if t.simple:
            rep = relation_report(poly, t, weights)
            regime, note = _regime(rep.lambda_abs)
            rows.append({"report": rep, "regime": regime, "note": note, "entry": e})
        else:
            rows.append({"report": None, "regime": "non-simple", "note": "", "entry": e})

    d = args.digits
    if args.format == "json":
        out = {"weights_mode": weights.mode, "eigenvalues": []}
        for row in rows:
            e = row["entry"]
            if row["report"] is None:
                out["eigenvalues"].append(
                    {
                        "alpha": [e.point.alpha.real, e.point.alpha.imag],
                        "beta": [e.point.beta.real, e.point.beta.imag],
                        "simple": False,
                        "multiplicity": e.multiplicity,
                    }
                )
            else:
                item = row["report"].to_dict()
                item["simple"] = True
                item["regime"] = row["regime"]
                out["eigenvalues"].append(item)
        print(json.dumps(out, indent=1))
        return EXIT_OK

    def cell(v):
        return "" if v is None else _fmt(v, d)

    header = [
        "alpha", "beta", "lambda", "abs_lambda",
        "kappa_a", "kappa_r", "kappa_h", "kappa_theta", "regime", "simple",
    ]
    table = []
    for row in rows:
        e = row["entry"]
        rep = row["report"]
        if rep is None:
            table.append(
                [
                    _fmt_complex(e.point.alpha, d), _fmt_complex(e.point.beta, d),
                    _lambda_str(e.point, d), cell(e.point.abs_lambda),
                    "", "", "", "", row["regime"], "false",
                ]
            )
        else:
            table.append(
                [
                    _fmt_complex(e.point.alpha, d), _fmt_complex(e.point.beta, d),
                    _lambda_str(e.point, d), cell(rep.lambda_abs),
                    cell(rep.kappa_a), cell(rep.kappa_r),
                    cell(rep.kappa_h), cell(rep.kappa_theta), row["regime"], "true",
                ]
            )

    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(table)
        sys.stdout.write(buf.getvalue())
        return EXIT_OK

    print(f"weights: {weights.mode}")
    print("  ".join(header))
    for row, srcrow in zip(table, rows):
        filler = "undef" if srcrow["report"] is not None else "-"
        line = "  ".join(item if item else filler for item in row)
        if srcrow["note"]:
            line += f"   ({srcrow['note']})"
        print(line)
    return EXIT_OK


def _cmd_verify(args) -> int:
    tol = _resolve_tol(args)
    if (args.file is None) == (args.random is None):
        raise InvalidInput("verify needs either a document file or --random N K SEED")
    if args.random is not None:
        n, k, seed = args.random
        poly = random_regular(n, k, seed)
        doc_weights = None
    else:
        doc = read_document(args.file)
        poly, doc_weights = doc.polynomial, doc.weights
    weights = _resolve_weights(args, doc_weights, poly)
    corrupt = 1.0 + 1e-5 if args.debug_corrupt else 1.0

    eigs = eigenvalues(poly, tol)
    worst: dict[str, float] = {}
    simple_count = 0
    for e in eigs:
        t = eigentriple(poly, e.point, tol, known_eigenvalues=eigs)
        if not t.simple:
            continue
        simple_count += 1
        rep = relation_report(poly, t, weights, _kappa_theta_scale=corrupt)
        for name, value in rep.identity_residuals.items():
            worst[name] = max(worst.get(name, 0.0), value)

    d = args.digits
    for name in sorted(worst):
        print(f"{name}: {_fmt(worst[name], d)}")
    overall = max(worst.values(), default=0.0)
    print(f"simple eigenvalues checked: {simple_count}")
    print(f"worst residual: {_fmt(overall, d)}")
    if overall <= args.max_residual:
        return EXIT_OK
    print(f"FAILED: worst residual exceeds {args.max_residual:g}", file=sys.stderr)
    return EXIT_VERIFY_FAILED


def _cmd_empirical(args) -> int:
    tol = _resolve_tol(args)
    doc = read_document(args.file)
    poly = doc.polynomial
    weights = _resolve_weights(args, doc.weights, poly)
    target = _TARGETS[args.target]
    spec = PerturbationSpec(
        epsilon=args.eps, weights=weights, samples=args.samples, seed=args.seed
    )

    eigs = eigenvalues(poly, tol)
    d = args.digits
    print("lambda  formula  extremal_ratio  mc_max_ratio  extremal_gap")
    printed = 0
    for e in eigs:
        t = eigentriple(poly, e.point, tol, known_eigenvalues=eigs)
        if not t.simple:
            continue
        if target == TARGET_A and t.point.is_infinite:
            continue
        if target == TARGET_R and (t.point.is_infinite or t.point.is_zero):
            continue
        est = empirical_condition(poly, t, spec, target)
        print(
            f"{_lambda_str(t.point, d)}  {_fmt(est.formula_value, d)}  "
            f"{_fmt(est.extremal_ratio, d)}  {_fmt(est.mc_max_ratio, d)}  "
            f"{_fmt(est.extremal_gap, d)}"
        )
        printed += 1
    if printed == 0:
        from .errors import UndefinedForInfinite, UndefinedForZeroOrInfinite

        if target == TARGET_R:
            raise UndefinedForZeroOrInfinite(
                "kappa_r is undefined at every (simple) eigenvalue of this polynomial"
            )
        if target == TARGET_A:
            raise UndefinedForInfinite(
                "kappa_a is undefined at every (simple) eigenvalue of this polynomial"
            )
        raise PolycondError("no simple eigenvalue to perturb")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    if not (0.0 < args.eps_min < args.eps_max < 1.0):
        raise InvalidInput("need 0 < --eps-min < --eps-max < 1")
    if args.points < 2:
        raise InvalidInput("--points must be at least 2")
    grid = np.logspace(math.log10(args.eps_min), math.log10(args.eps_max), args.points)
    records = example_sweep(grid)

    d = args.digits
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    from .perturb import SweepRecord

    writer.writerow(SweepRecord.FIELDS)
    for rec in records:
        writer.writerow([_fmt(v, d) for v in rec.row()])
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if args.gnuplot:
        if not args.out:
            raise InvalidInput("--gnuplot needs --out so the script can reference the CSV")
        script = "\n".join(
            [
                "set datafile separator ','",
                "set logscale xy",
                "set key top left",
                "set xlabel 'eps'",
                f"plot '{args.out}' using 1:2 with linespoints title '|lambda0|', \\",
                f"     '{args.out}' using 1:3 with linespoints title 'kappa_theta', \\",
                f"     '{args.out}' using 1:4 with linespoints title 'kappa_r'",
                "",
            ]
        )
        with open(args.gnuplot, "w", encoding="utf-8") as fh:
            fh.write(script)
    return EXIT_OK


def _cmd_chordal(args) -> int:
    from .eig import ProjectivePoint

    a, b = parse_complex(args.a), parse_complex(args.b)
    c, e = parse_complex(args.c), parse_complex(args.d)
    p = ProjectivePoint.from_pair(a, b)
    q = ProjectivePoint.from_pair(c, e)
    d = args.digits
    print(f"chi = {_fmt(p.chordal_to(q), d)}")
    print(f"theta = {_fmt(p.angle_to(q), d)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycond",
        description="Eigenvalue condition numbers for matrix polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, weights=True):
        p.add_argument("--tol", type=float, default=None, help="numerical tolerance")
        p.add_argument("--digits", type=int, default=17, help="significant digits in output")
        if weights:
            p.add_argument(
                "--weights",
                choices=["coeff", "max", "abs", "custom"],
                default=None,
                help="weight scheme (default: document weights, else coeff)",
            )

    p_an = sub.add_parser("analyze", help="condition numbers per eigenvalue")
    p_an.add_argument("file")
    p_an.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common(p_an)
    p_an.set_defaults(func=_cmd_analyze)

    p_ver = sub.add_parser("verify", help="check all exact identities")
    p_ver.add_argument("file", nargs="?", default=None)
    p_ver.add_argument(
        "--random",
        nargs=3,
        type=int,
        metavar=("N", "K", "SEED"),
        help="verify a generated random regular polynomial instead of a file",
    )
    p_ver.add_argument("--max-residual", type=float, default=1e-9)
    p_ver.add_argument(
        "--debug-corrupt",
        action="store_true",
        help="inject a fault into kappa_theta to prove the checks can fail",
    )
    common(p_ver)
    p_ver.set_defaults(func=_cmd_verify)

    p_emp = sub.add_parser("empirical", help="perturbation experiments per eigenvalue")
    p_emp.add_argument("file")
    p_emp.add_argument("--target", choices=["a", "r", "theta"], required=True)
    p_emp.add_argument("--eps", type=float, default=1e-6)
    p_emp.add_argument("--samples", type=int, default=100)
    p_emp.add_argument("--seed", type=int, default=0)
    common(p_emp)
    p_emp.set_defaults(func=_cmd_empirical)

    p_sw = sub.add_parser("sweep", help="parametric pencil sweep as CSV")
    p_sw.add_argument("--eps-min", type=float, required=True)
    p_sw.add_argument("--eps-max", type=float, required=True)
    p_sw.add_argument("--points", type=int, required=True)
    p_sw.add_argument("--out", default=None, help="write CSV here instead of stdout")
    p_sw.add_argument("--gnuplot", default=None, help="also write a gnuplot script here")
    common(p_sw, weights=False)
    p_sw.set_defaults(func=_cmd_sweep)

    p_ch = sub.add_parser("chordal", help="chordal distance between two lines")
    for name in ("a", "b", "c", "d"):
        p_ch.add_argument(name)
    common(p_ch, weights=False)
    p_ch.set_defaults(func=_cmd_chordal)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotRegular as exc:
        print(f"error: polynomial is not regular: {exc}", file=sys.stderr)
        return EXIT_NOT_REGULAR
    except AmbiguousMatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_AMBIGUOUS
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PolycondError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
