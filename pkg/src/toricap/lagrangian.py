"""Minimal torus-fiber areas and Lagrangian-capacity certificates.

The fiber torus over an interior point x with positive rational
coordinates has minimal positive area equal to the smallest positive
value of the integer combinations k_1 x_1 + ... + k_n x_n, which for
rational positions is gcd arithmetic (``a_min_closed``).  An exhaustive
lattice-box enumeration (``a_min_brute``) serves as an independent
oracle for that closed form.

``lagrangian_capacity`` certifies the Lagrangian capacity of a domain by
a cascade of sufficient conditions, always reporting which rule fired so
results stay auditable:

* ``MonotoneDiagonal`` -- monotone domains, where all cube-normalized
  capacities collapse to the diagonal radius;
* ``EtaOnBoundary`` -- the diagonal point (eta, eta) lies on the
  boundary, so the fiber torus there realizes the value eta;
* ``LatticeWitness`` -- some boundary point (k1*eta, k2*eta) with integer
  k_i >= 1 lies on the min-coordinate shell, and its fiber torus again
  realizes eta;
* ``IntervalOnly`` -- none of the above applies; an honest interval is
  reported instead of a value.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .domains import Polygon2D, Rectilinear2D, StandardDomain, ToricDomain
from .errors import InapplicableError
from .geometry import (
    delta,
    domain_on_boundary,
    eta,
    is_monotone,
    rectilinear_contains,
)

try:
    import numpy as _np
except ImportError:  # pragma: no cover - numpy is a hard dependency
    _np = None


# ---------------------------------------------------------------------------
# Minimal positive lattice value of a rational fiber position
# ---------------------------------------------------------------------------

def _check_positive(x) -> tuple:
    pt = tuple(Fraction(c) for c in x)
    if not pt:
        raise InapplicableError("fiber position must have at least one coordinate")
    if any(c <= 0 for c in pt):
        raise InapplicableError(
            "fiber position coordinates must be positive (torus fibers live "
            "over the open quadrant)"
        )
    return pt


def a_min_closed(x: Sequence) -> Fraction:
    """Smallest positive value of sum(k_i * x_i) over integer k.

    Writing x_i = n_i / q over the common denominator q, the value group
    {sum k_i x_i} is (1/q) * (integer span of the n_i), whose smallest
    positive element is gcd(n_1, ..., n_n) / q.
    """
    pt = _check_positive(x)
    q = math.lcm(*(c.denominator for c in pt))
    nums = [int(c * q) for c in pt]
    return Fraction(math.gcd(*nums), q)


def a_min_brute(x: Sequence, bound: int) -> Fraction:
    """Oracle for ``a_min_closed``: exhaustive minimum over k in [-K, K]^n.

    Pure enumeration of the lattice box, kept independent of the gcd
    reasoning in the closed form.  The integer grid is evaluated with
    64-bit vectorized arithmetic when it provably cannot overflow, and
    with big-integer loops otherwise, so the result is exact either way.
    """
    pt = _check_positive(x)
    if bound < 1:
        raise InapplicableError(f"enumeration bound must be >= 1, got {bound}")
    q = math.lcm(*(c.denominator for c in pt))
    nums = [int(c * q) for c in pt]
    n = len(nums)
    size = (2 * bound + 1) ** n
    max_abs = sum(abs(v) * bound for v in nums)
    if _np is not None and size <= 16_000_000 and max_abs < 2**62:
        ax = _np.arange(-bound, bound + 1, dtype=_np.int64)
        values = _np.zeros(1, dtype=_np.int64)
        for v in nums:
            values = (values[:, None] + v * ax[None, :]).ravel()
        positive = values[values > 0]
        best = int(positive.min())
    else:
        best = None
        for k in itertools.product(range(-bound, bound + 1), repeat=n):
            s = sum(ki * vi for ki, vi in zip(k, nums))
            if s > 0 and (best is None or s < best):
                best = s
    # k = e_1 always yields the positive value x_1, so a minimum exists.
    return Fraction(best, q)


# ---------------------------------------------------------------------------
# Capacity certificates
# ---------------------------------------------------------------------------

class CLRule(str, Enum):
    MONOTONE_DIAGONAL = "MonotoneDiagonal"
    ETA_ON_BOUNDARY = "EtaOnBoundary"
    LATTICE_WITNESS = "LatticeWitness"
    INTERVAL_ONLY = "IntervalOnly"


@dataclass(frozen=True)
class CLCertificate:
    """Auditable Lagrangian-capacity result.

    ``value`` is present exactly when one of the definite rules fired,
    and then ``lower == value == upper``; for ``IntervalOnly`` only the
    bracket is claimed.  ``witness`` is the fiber-torus position backing
    the value, when there is one.
    """

    value: Optional[Fraction]
    rule: CLRule
    witness: Optional[tuple]
    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if self.rule is CLRule.INTERVAL_ONLY:
            if self.value is not None:
                raise ValueError("IntervalOnly certificates carry no value")
        else:
            if self.value is None:
                raise ValueError(f"rule {self.rule} requires a value")
            if not (self.lower <= self.value <= self.upper):
                raise ValueError("certificate value outside its own bracket")
        if self.lower > self.upper:
            raise ValueError("certificate bracket is empty")


def _definite(rule: CLRule, value: Fraction, witness) -> CLCertificate:
    return CLCertificate(value=value, rule=rule, witness=witness,
                         lower=value, upper=value)


def _max_extent(domain) -> tuple:
    if isinstance(domain, Polygon2D):
        return (
            max(x for x, _ in domain.vertices),
            max(y for _, y in domain.vertices),
        )
    return (
        max(r.x1 for r in domain.rects),
        max(r.y1 for r in domain.rects),
    )


def _lattice_witnesses(domain, e: Fraction):
    """Boundary points (k1*e, k2*e), integer k_i >= 1, on the shell min = e.

    A point of the min-coordinate shell has min(k1, k2) == 1; the scan is
    finite because coordinates are bounded by the domain extent.
    """
    max_x, max_y = _max_extent(domain)
    found = []
    for k1 in range(1, int(max_x / e) + 1):
        for k2 in (range(1, int(max_y / e) + 1) if k1 == 1 else (1,)):
            p = (k1 * e, k2 * e)
            if domain_on_boundary(domain, p):
                found.append((k1, k2, p))
    return found


def _interval_certificate(domain) -> CLCertificate:
    """Honest bracket when no definite rule applies.

    The lower end is the best fiber-torus area among candidate positions
    (domain corners and the diagonal point); the upper end is eta, since
    the domain sits inside the min-coordinate region of that size.
    """
    upper = eta(domain)
    candidates = []
    d = delta(domain)
    if d > 0:
        candidates.append((d, d))
    if isinstance(domain, Polygon2D):
        candidates.extend(
            p for p in domain.vertices if p[0] > 0 and p[1] > 0
        )
    else:
        for r in domain.rects:
            for p in ((r.x1, r.y1), (r.x0, r.y0), (r.x0, r.y1), (r.x1, r.y0)):
                if p[0] > 0 and p[1] > 0 and rectilinear_contains(domain, p):
                    candidates.append(p)
    lower = max(a_min_closed(p) for p in candidates) if candidates else Fraction(0)
    return CLCertificate(value=None, rule=CLRule.INTERVAL_ONLY, witness=None,
                         lower=lower, upper=upper)


def lagrangian_capacity(domain: ToricDomain) -> CLCertificate:
    """Certified Lagrangian capacity of a toric domain.

    Standard domains and polygons take the strongest applicable rule in
    the order MonotoneDiagonal, EtaOnBoundary, LatticeWitness.  For
    rectangle unions the corner structure makes the fiber-torus witness
    argument the robust route, so a non-diagonal lattice witness is
    preferred when one exists (same value either way, since a staircase
    has diagonal radius equal to eta).
    """
    if isinstance(domain, StandardDomain):
        d = delta(domain)
        witness = tuple([d] * domain.n)
        return _definite(CLRule.MONOTONE_DIAGONAL, d, witness)
    if isinstance(domain, Polygon2D):
        if is_monotone(domain):
            d = delta(domain)
            return _definite(CLRule.MONOTONE_DIAGONAL, d, (d, d))
        e = eta(domain)
        if domain_on_boundary(domain, (e, e)):
            return _definite(CLRule.ETA_ON_BOUNDARY, e, (e, e))
        witnesses = _lattice_witnesses(domain, e)
        if witnesses:
            _, _, p = max(witnesses, key=lambda w: (w[2][0], w[2][1]))
            return _definite(CLRule.LATTICE_WITNESS, e, p)
        return _interval_certificate(domain)
    if isinstance(domain, Rectilinear2D):
        e = eta(domain)
        witnesses = _lattice_witnesses(domain, e)
        nondiag = [w for w in witnesses if max(w[0], w[1]) >= 2]
        if nondiag:
            _, _, p = max(nondiag, key=lambda w: (w[2][0], w[2][1]))
            return _definite(CLRule.LATTICE_WITNESS, e, p)
        if is_monotone(domain):
            d = delta(domain)
            return _definite(CLRule.MONOTONE_DIAGONAL, d, (d, d))
        if witnesses:  # the diagonal point (e, e) itself
            return _definite(CLRule.ETA_ON_BOUNDARY, e, (e, e))
        return _interval_certificate(domain)
    raise InapplicableError(f"not a toric domain: {domain!r}")


def cube_normalized_value(domain: ToricDomain) -> Fraction:
    """Common value of every cube-normalized capacity on a monotone domain.

    Monotone domains are sandwiched between the cube and the
    min-coordinate region at the diagonal radius, so the value is delta.
    Refuses non-monotone domains rather than guessing.
    """
    if not is_monotone(domain):
        raise InapplicableError(
            "domain is not monotone: the cube-normalized collapse does not apply"
        )
    return delta(domain)
