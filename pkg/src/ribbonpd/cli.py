"""Command-line front end.

Verbs: ``pdg``, ``euler``, ``dual``, ``maxgenus``, ``spectrum``, ``verify``,
``stats``.  Exit codes: 0 success, 2 usage error, 3 file parse error,
4 precondition violation, 5 verification failure.  Output is
byte-deterministic for fixed arguments (including across ``--threads``).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .enumeration import DEFAULT_SUBSET_CAP, euler_genus_polynomial, genus_polynomial, max_partial_dual_genus
from .families import FamilySpec, euler_closed_form, generate, genus_by_recurrence, genus_closed_form
from .fileio import ParseError, decode, encode
from .poly import IntPolynomial, spectrum
from .ribbon import EdgeSubset, PreconditionError, RibbonGraph, partial_dual
from .stats import asymptotic_rows, rows_to_csv
from .verifysuites import SUITES


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="ribbon-graph file")
    src.add_argument("--family", choices=(
        "cycle", "path", "dipole", "bouquet_twisted", "necklace",
        "fan_q", "fan_f2m2", "wheel", "wheel_bar", "join_with_bm",
    ))
    p.add_argument("--n", type=int, help="family size parameter")
    p.add_argument("--m", type=int, help="second family parameter (join_with_bm)")


def _family_spec(args) -> FamilySpec:
    if args.n is None:
        raise PreconditionError("--family requires --n")
    params = (args.n,)
    if args.family == "join_with_bm":
        if args.m is None:
            raise PreconditionError("join_with_bm requires --m")
        params = (args.n, args.m)
    elif args.m is not None:
        raise PreconditionError(f"family {args.family} does not take --m")
    try:
        return FamilySpec(args.family, params)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None


def _load_graph(args) -> RibbonGraph:
    if args.file is not None:
        return decode(Path(args.file).read_text(encoding="utf-8"))
    return generate(_family_spec(args))


def _emit_poly(p: IntPolynomial, fmt: str, out) -> None:
    if fmt == "text":
        out.write(p.to_text() + "\n")
    elif fmt == "csv":
        out.write(p.to_csv_row() + "\n")
    else:
        deg = max(p.degree(), 0)
        obj = {"degree": deg, "coefficients": [p.coefficient(i) for i in range(deg + 1)]}
        out.write(json.dumps(obj) + "\n")


def _parse_subset(text: str, width: int) -> EdgeSubset:
    text = text.strip()
    if not text:
        return EdgeSubset.empty(width)
    try:
        indices = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise PreconditionError(f"bad subset syntax {text!r} (want comma-separated edge indices)")
    return EdgeSubset.from_indices(indices, width)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ribbonpd",
        description="Partial duals of ribbon graphs: genus polynomials, "
        "recurrences and distribution statistics.",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("pdg", help="genus polynomial of all partial duals")
    _add_graph_source(p)
    p.add_argument("--method", choices=("brute", "closed", "recurrence"), default="brute")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_SUBSET_CAP,
                   help="largest edge count enumerated (2^e subsets)")

    p = sub.add_parser("euler", help="Euler-genus polynomial of all partial duals")
    _add_graph_source(p)
    p.add_argument("--method", choices=("brute", "closed"), default="brute")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_SUBSET_CAP)

    p = sub.add_parser("dual", help="write the partial dual over an edge subset")
    p.add_argument("--file", required=True)
    p.add_argument("--subset", required=True,
                   help="comma-separated edge indices (empty string for none)")
    p.add_argument("--out", required=True)

    p = sub.add_parser("maxgenus", help="maximum genus among all partial duals")
    p.add_argument("--file", required=True)
    p.add_argument("--method", choices=("brute", "xi"), default="brute")

    p = sub.add_parser("spectrum", help="exponent spectrum and interpolation verdict")
    p.add_argument("--file", required=True)
    p.add_argument("--euler", action="store_true", help="use the Euler-genus polynomial")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=tuple(SUITES), required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--max-edges", type=int)

    p = sub.add_parser("stats", help="mean/variance/KS table for a family")
    p.add_argument("--family", choices=("fan", "necklace"), required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--out", help="CSV output path (default stdout)")
    return ap


def _run(args, out) -> int:
    if args.verb == "pdg":
        if args.method == "brute":
            poly = genus_polynomial(_load_graph(args), cap=args.cap, threads=args.threads)
        else:
            if args.file is not None:
                raise PreconditionError(f"--method {args.method} needs --family input")
            fs = _family_spec(args)
            poly = genus_closed_form(fs) if args.method == "closed" else genus_by_recurrence(fs)
        _emit_poly(poly, args.format, out)
        return 0

    if args.verb == "euler":
        if args.method == "brute":
            poly = euler_genus_polynomial(_load_graph(args), cap=args.cap, threads=args.threads)
        else:
            if args.file is not None:
                raise PreconditionError("--method closed needs --family input")
            poly = euler_closed_form(_family_spec(args))
        _emit_poly(poly, args.format, out)
        return 0

    if args.verb == "dual":
        g = decode(Path(args.file).read_text(encoding="utf-8"))
        subset = _parse_subset(args.subset, g.edge_count)
        Path(args.out).write_text(encode(partial_dual(g, subset)), encoding="utf-8")
        return 0

    if args.verb == "maxgenus":
        g = decode(Path(args.file).read_text(encoding="utf-8"))
        out.write(f"{max_partial_dual_genus(g, args.method)}\n")
        return 0

    if args.verb == "spectrum":
        g = decode(Path(args.file).read_text(encoding="utf-8"))
        poly = euler_genus_polynomial(g) if args.euler else genus_polynomial(g)
        exps, interpolating = spectrum(poly)
        verdict = "interpolating" if interpolating else "NOT interpolating"
        out.write("{" + ",".join(str(i) for i in exps) + "} " + verdict + "\n")
        return 0

    if args.verb == "verify":
        kwargs = {}
        if args.seed is not None:
            kwargs["seed"] = args.seed
        if args.trials is not None:
            if args.suite == "props":
                kwargs["graphs"] = args.trials
                kwargs["orientable_graphs"] = args.trials
            elif args.suite == "theorems":
                kwargs["trials"] = args.trials
        if args.max_edges is not None and args.suite in ("props", "theorems"):
            kwargs["max_edges"] = args.max_edges
        if args.suite in ("families", "stats"):
            kwargs = {}
        ok, lines = SUITES[args.suite](**kwargs)
        for line in lines:
            out.write(line + "\n")
        out.write(("PASS" if ok else "FAIL") + f" suite {args.suite}\n")
        return 0 if ok else 5

    if args.verb == "stats":
        rows = asymptotic_rows(args.family, args.n_max)
        csv = rows_to_csv(rows)
        if args.out:
            Path(args.out).write_text(csv, encoding="utf-8")
        else:
            out.write(csv)
        return 0

    raise AssertionError(args.verb)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _run(args, sys.stdout)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    except (PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
