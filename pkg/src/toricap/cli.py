"""Command-line front end.

Subcommands: ``info``, ``report``, ``xa``, ``bound``, ``obstruct`` and
``amin``.  All numeric output is exact "p/q"; the ``--decimal N`` flag
adds clearly-marked approximations for human convenience.  Exit status
0 means success, 1 a refused computation (a precondition or hypothesis
does not hold), 2 an input error; failures print one machine-parsable
``error: ...`` line on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .capacities import (
    CSV_COLUMNS,
    capacity_report,
    report_csv_row,
    report_to_dict,
    sweep_to_csv,
    verify_xa,
)
from .domains import (
    Polygon2D,
    Rectilinear2D,
    StandardDomain,
    is_weakly_convex,
    parse_domain,
)
from .ech import (
    cube_bound,
    finite_d_bound,
    format_orbit_set,
    obstruction_search,
    parse_orbit_set,
)
from .errors import DomainError, InapplicableError, ToricapError
from .geometry import delta, eta, is_monotone
from .lagrangian import a_min_brute, a_min_closed
from .rationals import format_rational, parse_rational

DEFAULT_BOUND_DEGREES = (3, 9, 30, 90, 300)


def _fmt(value: Fraction, decimal: int | None) -> str:
    text = format_rational(value)
    if decimal is not None:
        text += f" (~{float(value):.{decimal}f})"
    return text


def _load_domain(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read domain file {path!r}: {exc.strerror}")
    return parse_domain(text)


def _parse_sweep(spec: str):
    try:
        bounds, step = spec.rsplit(":", 1)
        lo, hi = bounds.split("..", 1)
    except ValueError:
        raise DomainError(f"bad sweep {spec!r}, expected LO..HI:STEP")
    lo_f = parse_rational(lo)
    hi_f = parse_rational(hi)
    step_f = parse_rational(step)
    if step_f <= 0 or hi_f < lo_f:
        raise DomainError(f"bad sweep range {spec!r}")
    values = []
    a = lo_f
    while a <= hi_f:
        values.append(a)
        a += step_f
    return values


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_info(args) -> int:
    domain = _load_domain(args.file)
    print(f"kind: {_kind_name(domain)}")
    if isinstance(domain, StandardDomain):
        print(f"n: {domain.n}")
        print(f"a: {format_rational(domain.a)}")
    elif isinstance(domain, Polygon2D):
        print("n: 2")
        print(f"vertices: {len(domain.vertices)}")
        print(f"weakly_convex: {str(is_weakly_convex(domain)).lower()}")
    else:
        print("n: 2")
        print(f"rects: {len(domain.rects)}")
    print(f"monotone: {str(is_monotone(domain)).lower()}")
    print(f"delta: {format_rational(delta(domain))}")
    print(f"eta: {format_rational(eta(domain))}")
    return 0


def _kind_name(domain) -> str:
    if isinstance(domain, StandardDomain):
        return domain.kind
    if isinstance(domain, Polygon2D):
        return "polygon2d"
    if isinstance(domain, Rectilinear2D):
        return "rectilinear2d"
    return type(domain).__name__


def _interval_cell(iv, decimal) -> str:
    if iv.upper is None:
        return f"[{_fmt(iv.lower, decimal)}, unbounded)"
    if iv.exact:
        return _fmt(iv.lower, decimal)
    return f"[{_fmt(iv.lower, decimal)}, {_fmt(iv.upper, decimal)}]"


def _cmd_report(args) -> int:
    domain = _load_domain(args.file)
    report = capacity_report(domain)
    if args.format == "json":
        print(json.dumps(report_to_dict(report), indent=2))
        return 0
    if args.format == "csv":
        import csv as _csv
        import io as _io

        buf = _io.StringIO()
        writer = _csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS[1:])
        writer.writerow(report_csv_row(report)[1:])
        sys.stdout.write(buf.getvalue())
        return 0
    dec = args.decimal
    cert = report.c_L
    print(f"delta: {_fmt(report.delta, dec)}")
    print(f"eta: {_fmt(report.eta, dec)}")
    if cert.value is not None:
        print(f"c_L: {_fmt(cert.value, dec)}  [{cert.rule.value}]")
    else:
        print(
            f"c_L: [{_fmt(cert.lower, dec)}, {_fmt(cert.upper, dec)}]"
            f"  [{cert.rule.value}]"
        )
    if cert.witness is not None:
        witness = ", ".join(format_rational(c) for c in cert.witness)
        print(f"c_L witness: ({witness})")
    print(f"c_P: {_interval_cell(report.c_P, dec)}")
    print(f"c_N: {_interval_cell(report.c_N, dec)}")
    print(f"monotone: {str(report.monotone).lower()}")
    print(f"c_B: {_interval_cell(report.c_B, dec)}")
    print(f"c_Z: {_interval_cell(report.c_Z, dec)}")
    for note in report.notes:
        print(f"note: {note}")
    return 0


def _cmd_xa(args) -> int:
    values = [parse_rational(a) for a in args.a or []]
    if args.sweep:
        values.extend(_parse_sweep(args.sweep))
    if not values:
        raise DomainError("xa needs --a P/Q (repeatable) and/or --sweep LO..HI:STEP")
    values = sorted(set(values))
    checks = [verify_xa(a) for a in values]
    if args.format == "csv":
        sys.stdout.write(sweep_to_csv((c.a, c.report) for c in checks))
        return 0
    if args.format == "json":
        payload = [
            {
                "a": format_rational(c.a),
                "pass": c.passed,
                "expected": {
                    "c_P": format_rational(c.expected_cp),
                    "c_L": format_rational(c.expected_cl),
                    "c_N": format_rational(c.expected_cn),
                },
                "report": report_to_dict(c.report),
            }
            for c in checks
        ]
        print(json.dumps(payload, indent=2))
        return 0
    dec = args.decimal
    header = ["a", "delta", "eta", "c_L", "c_P", "c_N", "check"]
    rows = [header]
    for c in checks:
        r = c.report
        rows.append(
            [
                _fmt(c.a, dec),
                _fmt(r.delta, dec),
                _fmt(r.eta, dec),
                _fmt(r.c_L.value, dec),
                _interval_cell(r.c_P, dec),
                _interval_cell(r.c_N, dec),
                "pass" if c.passed else "FAIL",
            ]
        )
    _print_table(rows)
    return 0


def _print_table(rows) -> None:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())


def _cmd_bound(args) -> int:
    domain = _load_domain(args.file)
    if not isinstance(domain, Polygon2D):
        raise InapplicableError("the boundary-slope bound applies to polygon domains")
    dec = args.decimal
    bound = cube_bound(domain)
    print(f"cube bound: {_fmt(bound, dec)}")
    degrees = args.d if args.d else list(DEFAULT_BOUND_DEGREES)
    for d in degrees:
        print(f"d={d}: {_fmt(finite_d_bound(domain, d), dec)}")
    report = capacity_report(domain)
    if report.c_P.exact and report.c_P.lower < bound:
        print(
            f"note: not tight; exact cube capacity is "
            f"{_fmt(report.c_P.lower, dec)}"
        )
    return 0


def _cmd_obstruct(args) -> int:
    source = _load_domain(args.source)
    target = _load_domain(args.target)
    if not isinstance(source, Polygon2D) or not isinstance(target, Polygon2D):
        raise InapplicableError("obstruction search runs on polygon domains")
    alpha_prime = parse_orbit_set(args.alpha)
    report = obstruction_search(
        source,
        target,
        alpha_prime,
        vmax=args.vmax,
        lmax=args.lmax,
        include_axis_orbits=not args.no_axis_orbits,
    )
    print(f"status: {report.status.value}")
    if report.witness is not None:
        print(f"alpha: {format_orbit_set(report.witness.alpha)}")
        for i, (af, pf) in enumerate(
            zip(report.witness.alpha_factors, report.witness.alpha_prime_factors),
            start=1,
        ):
            print(f"factor {i}: {format_orbit_set(af)}  <=  {format_orbit_set(pf)}")
    if report.obstructed_a is not None:
        print(f"obstructed cube size: {format_rational(report.obstructed_a)}")
    b = report.bounds_used
    print(
        "bounds: "
        f"vmax={b.vmax} lmax={b.lmax} axis_orbits={str(b.include_axis_orbits).lower()}"
    )
    print(
        "search: "
        f"candidate_factors={b.candidate_factors} pruned={b.factors_pruned} "
        f"factorizations={b.factorizations_explored} "
        f"enumerations={b.enumerations_run} "
        f"truncated={str(b.enumeration_truncated).lower()}"
    )
    return 0


def _cmd_amin(args) -> int:
    coords = [parse_rational(c) for c in args.x.split(",") if c.strip() != ""]
    if not coords:
        raise DomainError("amin needs --x 'P/Q,P/Q,...'")
    dec = args.decimal
    closed = a_min_closed(coords)
    print(f"closed: {_fmt(closed, dec)}")
    if args.brute is not None:
        brute = a_min_brute(coords, args.brute)
        print(f"brute (K={args.brute}): {_fmt(brute, dec)}")
        print("agree" if brute == closed else "DISAGREE")
        return 0 if brute == closed else 1
    return 0


# ---------------------------------------------------------------------------
# Parser and entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricap",
        description=(
            "Exact symplectic-capacity invariants of toric domains: "
            "diagonal and min-coordinate radii, Lagrangian-capacity "
            "certificates, cube-capacity bounds, and combinatorial "
            "embedding obstructions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="domain summary and validity predicates")
    p.add_argument("file", help="domain JSON file")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("report", help="full capacity report for a domain")
    p.add_argument("file", help="domain JSON file")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--decimal", type=int, metavar="N", default=None,
                   help="also print N-digit decimal approximations")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("xa", help="closed-form checks for the pinched-corner family")
    p.add_argument("--a", action="append", metavar="P/Q",
                   help="family parameter (repeatable)")
    p.add_argument("--sweep", metavar="LO..HI:STEP",
                   help="rational sweep, inclusive of HI when the step lands on it")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--decimal", type=int, metavar="N", default=None)
    p.set_defaults(func=_cmd_xa)

    p = sub.add_parser("bound", help="cube-capacity bounds from boundary slopes")
    p.add_argument("file", help="domain JSON file (polygon)")
    p.add_argument("--d", action="append", type=int, metavar="N",
                   help="degree for the finite-degree bound (repeatable)")
    p.add_argument("--decimal", type=int, metavar="N", default=None)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("obstruct", help="bounded embedding-obstruction search")
    p.add_argument("--source", required=True, metavar="FILE")
    p.add_argument("--target", required=True, metavar="FILE")
    p.add_argument("--alpha", required=True, metavar="ORBIT-EXPR",
                   help="test orbit set, e.g. 'e(1,-1)^30 * e(-1,1)^30 * e(1,1)^2'")
    p.add_argument("--vmax", required=True, type=int,
                   help="bound on orbit direction components")
    p.add_argument("--lmax", required=True, type=int,
                   help="bound on the number of factors")
    p.add_argument("--no-axis-orbits", action="store_true",
                   help="exclude the axis directions (1,0) and (0,1)")
    p.set_defaults(func=_cmd_obstruct)

    p = sub.add_parser("amin", help="minimal torus-fiber area at a rational point")
    p.add_argument("--x", required=True, metavar="P/Q,P/Q,...",
                   help="fiber position coordinates")
    p.add_argument("--brute", type=int, metavar="K", default=None,
                   help="also run the exhaustive oracle over [-K,K]^n")
    p.add_argument("--decimal", type=int, metavar="N", default=None)
    p.set_defaults(func=_cmd_amin)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InapplicableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ToricapError as exc:  # catch-all for library errors
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
