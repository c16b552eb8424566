"""Command line surface: coefficient tables and verification report streams.

    msharp expand --level 8 --weight 0 --m 1 --terms 10
    msharp verify duality --level 8 --k-min -6 --k-max 6 --m-max 15 --n-max 15
    msharp verify all

`expand` prints one row per exponent of the requested basis element, as CSV
(level, weight, family, m, n, coefficient) or JSON lines.  `verify` streams
one JSON report per checked claim to stdout and a summary to stderr.

Exit codes: 0 all claims pass, 1 at least one claim fails, 2 usage or
precision error.  Output is deterministic: identical invocations produce
byte-identical streams.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .cache import ENV_CACHE_DIR, cached_basis_element
from .levels import FULL_LEVELS
from .series import PrecisionError
from . import verify as V

_SUITES = ("duality", "main", "prior", "griffin", "griffin-ext", "uv",
           "identities", "f01", "lehner", "theta-span", "all")

_PRIOR_LEVELS = (2, 3, 4, 5, 7, 13)
_EXTENSION_LEVELS = (2, 3, 4, 5, 7, 8, 9, 16, 25)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="msharp",
        description="Exact canonical bases of weakly holomorphic modular "
                    "forms and machine checks of their congruence and "
                    "duality properties.")
    sub = parser.add_subparsers(dest="command", required=True)

    ex = sub.add_parser("expand", help="print coefficients of one basis element")
    ex.add_argument("--level", type=int, required=True)
    ex.add_argument("--weight", type=int, required=True)
    ex.add_argument("--m", type=int, required=True, help="pole order at infinity")
    ex.add_argument("--terms", type=int, default=25,
                    help="largest exponent to print (default 25)")
    ex.add_argument("--family", choices=("M", "S"), default="M")
    ex.add_argument("--format", choices=("csv", "json-lines"), default="csv")
    ex.add_argument("--cache-dir", default=None,
                    help=f"coefficient cache directory (default ${ENV_CACHE_DIR})")

    ve = sub.add_parser("verify", help="run a verification suite")
    ve.add_argument("suite", choices=_SUITES)
    ve.add_argument("--level", type=int, action="append", default=None,
                    help="restrict to a level (repeatable)")
    ve.add_argument("--terms", type=int, default=None,
                    help="coefficient range / index cap for the suite")
    ve.add_argument("--k-min", type=int, default=-8)
    ve.add_argument("--k-max", type=int, default=8)
    ve.add_argument("--m-max", type=int, default=None)
    ve.add_argument("--n-max", type=int, default=20)
    ve.add_argument("--alpha-max", type=int, default=None)
    ve.add_argument("--beta-max", type=int, default=None)
    ve.add_argument("--mprime-max", type=int, default=10)
    ve.add_argument("--nprime-max", type=int, default=10)
    ve.add_argument("--format", choices=("json-lines",), default="json-lines")
    ve.add_argument("--cache-dir", default=None)
    return parser


def _cmd_expand(args) -> int:
    cache_dir = args.cache_dir or os.environ.get(ENV_CACHE_DIR) or None
    if args.terms < -args.m:
        print(f"msharp: --terms must be at least {-args.m} for this element",
              file=sys.stderr)
        return 2
    el = cached_basis_element(args.level, args.weight, args.m, args.terms,
                              args.family, cache_dir)
    out = sys.stdout
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["level", "weight", "family", "m", "n", "coefficient"])
        for n in range(-args.m, args.terms + 1):
            writer.writerow([el.level, el.weight, el.family, el.pole_order,
                             n, str(el.series.coefficient(n))])
    else:
        for n in range(-args.m, args.terms + 1):
            out.write(json.dumps(
                {"level": el.level, "weight": el.weight, "family": el.family,
                 "m": el.pole_order, "n": n,
                 "coefficient": str(el.series.coefficient(n))},
                separators=(",", ":")) + "\n")
    return 0


def _suite_reports(args):
    suites = [args.suite] if args.suite != "all" else \
        [s for s in _SUITES if s != "all"]
    levels = args.level
    reports = []
    for suite in suites:
        if suite == "duality":
            m_max = args.m_max if args.m_max is not None else 20
            for N in levels or FULL_LEVELS:
                reports.extend(V.check_duality(
                    N, k_min=args.k_min, k_max=args.k_max,
                    m_max=m_max, n_max=args.n_max))
        elif suite == "main":
            cap = args.terms if args.terms is not None else V.DEFAULT_TERMS
            for N in levels or FULL_LEVELS:
                reports.extend(V.check_main_congruences(
                    N,
                    alpha_max=args.alpha_max if args.alpha_max is not None else 3,
                    beta_max=args.beta_max if args.beta_max is not None else 3,
                    max_index=cap))
        elif suite == "prior":
            cap = args.terms if args.terms is not None else V.DEFAULT_TERMS
            for N in levels or _PRIOR_LEVELS:
                reports.extend(V.check_prior_congruences(
                    N,
                    alpha_max=args.alpha_max if args.alpha_max is not None else 2,
                    beta_max=args.beta_max if args.beta_max is not None else 2,
                    max_index=cap))
        elif suite == "griffin":
            cap = args.terms if args.terms is not None else V.DEFAULT_TERMS
            reports.extend(V.check_griffin(
                alpha_max=args.alpha_max if args.alpha_max is not None else 2,
                beta_max=args.beta_max if args.beta_max is not None else 2,
                mprime_max=args.mprime_max, nprime_max=args.nprime_max,
                max_index=cap))
        elif suite == "griffin-ext":
            cap = args.terms if args.terms is not None else V.DEFAULT_TERMS
            for N in levels or _EXTENSION_LEVELS:
                reports.extend(V.check_griffin_extension(
                    N,
                    alpha_max=args.alpha_max if args.alpha_max is not None else 2,
                    beta_max=args.beta_max if args.beta_max is not None else 2,
                    mprime_max=args.mprime_max, nprime_max=args.nprime_max,
                    max_index=cap))
        elif suite == "uv":
            m_max = args.m_max if args.m_max is not None else 10
            terms = args.terms if args.terms is not None else 25
            reports.extend(V.check_uv_lemma(m_max=m_max, terms=terms))
        elif suite == "identities":
            reports.extend(V.check_j_identities(
                terms=args.terms if args.terms is not None else 50))
        elif suite == "f01":
            m_max = args.m_max if args.m_max is not None else 10
            reports.extend(V.check_f01_and_fm(
                terms=args.terms if args.terms is not None else 50,
                m_max=m_max))
        elif suite == "lehner":
            reports.extend(V.check_lehner(
                terms=args.terms if args.terms is not None else V.DEFAULT_TERMS))
        elif suite == "theta-span":
            m_max = args.m_max if args.m_max is not None else 15
            terms = args.terms if args.terms is not None else 30
            for N in levels or FULL_LEVELS:
                reports.extend(V.check_theta_span(N, m_max=m_max, terms=terms))
    return reports


def _cmd_verify(args) -> int:
    reports = _suite_reports(args)
    failures = 0
    expected_failures = 0
    for rep in reports:
        sys.stdout.write(rep.to_json() + "\n")
        if not rep.verdict:
            if rep.case.endswith(".printed"):
                expected_failures += 1
            else:
                failures += 1
    total = len(reports)
    print(f"msharp verify {args.suite}: {total - failures - expected_failures}"
          f"/{total} passed, {failures} failed"
          + (f", {expected_failures} printed-misprint readings failed (dual-checked)"
             if expected_failures else ""),
          file=sys.stderr)
    return 1 if failures else 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "expand":
            return _cmd_expand(args)
        return _cmd_verify(args)
    except PrecisionError as exc:
        print(f"msharp: precision error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"msharp: invalid parameters: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
