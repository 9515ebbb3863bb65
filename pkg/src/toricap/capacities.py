"""Per-domain capacity reports and the pinched-corner polygon family.

``capacity_report`` aggregates the exact invariants into one auditable
record: the diagonal and min-coordinate radii, a Lagrangian-capacity
certificate, and interval bounds for the cube and NDUC capacities, each
bound annotated with the argument that produced it.  ``omega_a`` builds
the one-parameter family of weakly convex, non-monotone polygons on
which the cube and NDUC capacities separate, and ``verify_xa`` checks
the family's closed-form values end to end.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .domains import Polygon2D, StandardDomain, ToricDomain
from .ech import cube_bound
from .errors import DomainError, InapplicableError
from .geometry import cube_inclusion, delta, eta, is_monotone
from .lagrangian import CLCertificate, CLRule, lagrangian_capacity
from .rationals import format_rational


@dataclass(frozen=True)
class Interval:
    """Closed rational bracket; exact when it pinches to a point."""

    lower: Fraction
    upper: Optional[Fraction]  # None = no finite upper bound claimed

    def __post_init__(self):
        if self.upper is not None and self.lower > self.upper:
            raise ValueError(f"empty interval [{self.lower}, {self.upper}]")

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper


@dataclass(frozen=True)
class CapacityReport:
    delta: Fraction
    eta: Fraction
    c_L: CLCertificate
    c_P: Interval
    c_N: Interval
    monotone: bool
    c_B: Interval
    c_Z: Interval
    notes: tuple


def omega_a(a: Fraction) -> Polygon2D:
    """Pinched-corner polygon with chain (1-2a,0), (1-a,a), (a,1-a), (0,1-2a).

    Defined for 0 < a < 1/2; weakly convex for every such a and monotone
    for none of them (the first boundary edge climbs to the right).
    """
    a = Fraction(a)
    if not (0 < a < Fraction(1, 2)):
        raise DomainError(f"family parameter must satisfy 0 < a < 1/2, got {a}")
    return Polygon2D(
        (
            (1 - 2 * a, Fraction(0)),
            (1 - a, a),
            (a, 1 - a),
            (Fraction(0), 1 - 2 * a),
        )
    )


def _simplex_inclusion(domain: ToricDomain) -> Fraction:
    """Largest a with the simplex region of size a inside the domain."""
    if isinstance(domain, StandardDomain):
        if domain.kind in ("ball", "cylinder", "cube"):
            return domain.a
        return domain.n * domain.a  # the simplex corner can ride one cylinder
    if isinstance(domain, Polygon2D):
        # Convexity: both axis corners inside pull the hypotenuse inside.
        return min(domain.x_intercept, domain.y_intercept)
    # Conservative for non-convex unions: the inscribed square contains
    # the simplex of the same size.
    return cube_inclusion(domain)


def _cylinder_cover(domain: ToricDomain) -> Optional[Fraction]:
    """Smallest single-coordinate slab covering the domain (axes may swap)."""
    if isinstance(domain, StandardDomain):
        if domain.kind in ("ball", "cylinder", "cube"):
            return domain.a
        return None  # the union-of-cylinders region fits in no slab
    if isinstance(domain, Polygon2D):
        return min(
            max(x for x, _ in domain.vertices),
            max(y for _, y in domain.vertices),
        )
    return min(
        max(r.x1 for r in domain.rects),
        max(r.y1 for r in domain.rects),
    )


def capacity_report(domain: ToricDomain) -> CapacityReport:
    """Assemble every certified bound for one domain.

    The cube-capacity bracket combines the inscribed-cube size from
    below with the min-coordinate radius from above, tightened by the
    boundary-slope bound when its precondition holds.  The NDUC bracket
    runs from the Lagrangian lower bound to the min-coordinate radius.
    """
    d = delta(domain)
    e = eta(domain)
    mono = is_monotone(domain)
    cert = lagrangian_capacity(domain)
    notes = []

    cp_lower = cube_inclusion(domain)
    notes.append("c_P lower: inscribed cube (exact inclusion)")
    cp_upper = e
    cp_upper_note = "c_P upper: containment in the min-coordinate region"
    if isinstance(domain, Polygon2D):
        try:
            cb = cube_bound(domain)
        except InapplicableError:
            notes.append(
                "c_P upper: boundary-slope bound inapplicable; "
                "falling back to the min-coordinate radius"
            )
        else:
            if cb < cp_upper:
                cp_upper = cb
                cp_upper_note = "c_P upper: boundary tangent-slope bound"
    notes.append(cp_upper_note)

    cn_lower = cert.lower
    cn_upper = e
    notes.append("c_N upper: the domain fits the min-coordinate region at eta")
    notes.append(f"c_L: rule {cert.rule.value}")
    if mono:
        notes.append(
            "monotone domain: every cube-normalized capacity equals delta"
        )

    c_b = Interval(_simplex_inclusion(domain), _cylinder_cover(domain))
    c_z = c_b
    notes.append(
        "c_B/c_Z: trivial inclusion bracket only (not certified by this library)"
    )

    return CapacityReport(
        delta=d,
        eta=e,
        c_L=cert,
        c_P=Interval(cp_lower, cp_upper),
        c_N=Interval(cn_lower, cn_upper),
        monotone=mono,
        c_B=c_b,
        c_Z=c_z,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class XaCheck:
    a: Fraction
    passed: bool
    expected_cp: Fraction
    expected_cl: Fraction
    expected_cn: Fraction
    report: CapacityReport


def verify_xa(a: Fraction) -> XaCheck:
    """Check the closed forms of the pinched-corner family at one parameter.

    The cube capacity must equal min(1 - 2a, 1/2) exactly, and both the
    Lagrangian and NDUC capacities must equal 1/2, with the cube and NDUC
    brackets pinched.
    """
    a = Fraction(a)
    report = capacity_report(omega_a(a))
    expected_cp = min(1 - 2 * a, Fraction(1, 2))
    expected_cl = Fraction(1, 2)
    expected_cn = Fraction(1, 2)
    passed = (
        report.c_P.exact
        and report.c_P.lower == expected_cp
        and report.c_L.value == expected_cl
        and report.c_N.exact
        and report.c_N.lower == expected_cn
    )
    return XaCheck(
        a=a,
        passed=passed,
        expected_cp=expected_cp,
        expected_cl=expected_cl,
        expected_cn=expected_cn,
        report=report,
    )


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _interval_to_dict(iv: Interval) -> dict:
    return {
        "lower": format_rational(iv.lower),
        "upper": None if iv.upper is None else format_rational(iv.upper),
        "exact": iv.exact,
    }


def certificate_to_dict(cert: CLCertificate) -> dict:
    return {
        "value": None if cert.value is None else format_rational(cert.value),
        "rule": cert.rule.value,
        "witness": None
        if cert.witness is None
        else [format_rational(c) for c in cert.witness],
        "lower": format_rational(cert.lower),
        "upper": format_rational(cert.upper),
    }


def report_to_dict(report: CapacityReport) -> dict:
    return {
        "delta": format_rational(report.delta),
        "eta": format_rational(report.eta),
        "c_L": certificate_to_dict(report.c_L),
        "c_P": _interval_to_dict(report.c_P),
        "c_N": _interval_to_dict(report.c_N),
        "monotone": report.monotone,
        "c_B": _interval_to_dict(report.c_B),
        "c_Z": _interval_to_dict(report.c_Z),
        "notes": list(report.notes),
    }


CSV_COLUMNS = ("a", "delta", "eta", "cL", "cP_lo", "cP_hi", "cN_lo", "cN_hi", "monotone")


def _cl_cell(cert: CLCertificate) -> str:
    if cert.value is not None:
        return format_rational(cert.value)
    return f"{format_rational(cert.lower)}..{format_rational(cert.upper)}"


def report_csv_row(report: CapacityReport, a: Optional[Fraction] = None) -> list:
    row = [
        "" if a is None else format_rational(a),
        format_rational(report.delta),
        format_rational(report.eta),
        _cl_cell(report.c_L),
        format_rational(report.c_P.lower),
        format_rational(report.c_P.upper),
        format_rational(report.c_N.lower),
        format_rational(report.c_N.upper),
        "true" if report.monotone else "false",
    ]
    return row


def sweep_to_csv(rows) -> str:
    """CSV document for (a, report) pairs using the documented columns."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for a, report in rows:
        writer.writerow(report_csv_row(report, a))
    return buf.getvalue()
