"""Exact geometric invariants of toric moment domains.

The quantities computed here are:

* ``support`` -- the maximum of an integer linear functional over the
  positive boundary chain of a polygon;
* ``delta`` -- the diagonal radius sup{ a : (a, ..., a) in the region };
* ``eta`` -- the min-coordinate (NDUC) radius sup over the region of the
  smallest coordinate, i.e. the least a such that the domain fits in the
  union-of-cylinders region of size a;
* ``is_monotone`` -- whether every outward normal along the positive
  boundary has nonnegative components;
* ``cube_inclusion`` -- the largest a with [0, a]^n contained in the
  region.

Everything is evaluated in exact rational arithmetic: for these shape
classes all suprema are attained at vertices, edge intersections or grid
corners, so no tolerances are needed.
"""

from __future__ import annotations

from fractions import Fraction

from .domains import (
    Polygon2D,
    Rectilinear2D,
    StandardDomain,
    ToricDomain,
)
from .errors import DomainError, InapplicableError

ZERO = Fraction(0)


# ---------------------------------------------------------------------------
# Polygon helpers
# ---------------------------------------------------------------------------

def support(domain: Polygon2D, v) -> Fraction:
    """Max of v . p over the boundary vertex chain.

    A linear functional over a polygonal curve attains its maximum at a
    vertex, so this is a finite exact maximum.  ``v`` must be a nonzero
    integer pair.
    """
    vx, vy = v
    if vx == 0 and vy == 0:
        raise InapplicableError("support direction must be nonzero")
    return max(vx * x + vy * y for x, y in domain.vertices)


def _chain_halfplanes(domain: Polygon2D):
    """Outward (normal, offset) pairs for the chain edges.

    The region is the intersection of the closed quadrant with the
    halfplanes ``normal . p <= offset``; normals of a counterclockwise
    chain point away from the region.
    """
    planes = []
    for p, q in zip(domain.vertices, domain.vertices[1:]):
        nu = (q[1] - p[1], p[0] - q[0])  # rotate edge direction by -90 degrees
        planes.append((nu, nu[0] * p[0] + nu[1] * p[1]))
    return planes


def polygon_contains(domain: Polygon2D, p) -> bool:
    """Closed membership test for the region bounded by chain and axes."""
    x, y = p
    if x < 0 or y < 0:
        return False
    return all(nu[0] * x + nu[1] * y <= c for nu, c in _chain_halfplanes(domain))


def _on_segment(p, a, b) -> bool:
    ax, ay = a
    bx, by = b
    px, py = p
    if (bx - ax) * (py - ay) != (by - ay) * (px - ax):
        return False
    return min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by)


def polygon_on_boundary(domain: Polygon2D, p) -> bool:
    """True iff p lies on the chain or on one of the implicit axis segments."""
    x, y = p
    if y == 0 and 0 <= x <= domain.x_intercept:
        return True
    if x == 0 and 0 <= y <= domain.y_intercept:
        return True
    return any(
        _on_segment(p, a, b)
        for a, b in zip(domain.vertices, domain.vertices[1:])
    )


# ---------------------------------------------------------------------------
# Rectilinear helpers
# ---------------------------------------------------------------------------

def _grid_lines(rects, extra_x=(), extra_y=()):
    xs = {ZERO}
    ys = {ZERO}
    for r in rects:
        xs.update((r.x0, r.x1))
        ys.update((r.y0, r.y1))
    xs.update(extra_x)
    ys.update(extra_y)
    return sorted(xs), sorted(ys)


def _cell_covered(rects, cx0, cx1, cy0, cy1) -> bool:
    return any(
        r.x0 <= cx0 and cx1 <= r.x1 and r.y0 <= cy0 and cy1 <= r.y1
        for r in rects
    )


def _box_covered(rects, ax: Fraction, ay: Fraction) -> bool:
    """Whether [0, ax] x [0, ay] is covered by the closed rectangle union."""
    if ax == 0 or ay == 0:
        # A segment along an axis; covered iff every grid subsegment is.
        xs, ys = _grid_lines(rects, extra_x=(ax,), extra_y=(ay,))
        if ax == 0 and ay == 0:
            return any(r.x0 == 0 and r.y0 == 0 for r in rects)
        if ax == 0:
            cuts = [y for y in ys if y < ay] + [ay]
            return all(
                any(r.x0 == 0 and r.y0 <= lo and hi <= r.y1 for r in rects)
                for lo, hi in zip(cuts, cuts[1:])
            )
        cuts = [x for x in xs if x < ax] + [ax]
        return all(
            any(r.y0 == 0 and r.x0 <= lo and hi <= r.x1 for r in rects)
            for lo, hi in zip(cuts, cuts[1:])
        )
    xs, ys = _grid_lines(rects, extra_x=(ax,), extra_y=(ay,))
    xs = [x for x in xs if x <= ax]
    ys = [y for y in ys if y <= ay]
    for cx0, cx1 in zip(xs, xs[1:]):
        for cy0, cy1 in zip(ys, ys[1:]):
            if not _cell_covered(rects, cx0, cx1, cy0, cy1):
                return False
    return True


def rectilinear_contains(domain: Rectilinear2D, p) -> bool:
    return any(r.contains(p) for r in domain.rects)


def rectilinear_on_boundary(domain: Rectilinear2D, p) -> bool:
    """True iff p is in the closed union but not in its interior.

    Interior membership is probed exactly: p is interior iff for each of
    the four quadrant directions some rectangle contains a whole corner
    neighborhood of p in that direction.
    """
    if not rectilinear_contains(domain, p):
        return False
    x, y = p
    for sx in (-1, 1):
        for sy in (-1, 1):
            corner_ok = any(
                r.contains(p)
                and (r.x0 < x if sx < 0 else x < r.x1)
                and (r.y0 < y if sy < 0 else y < r.y1)
                for r in domain.rects
            )
            if not corner_ok:
                return True
    return False


def _is_staircase(domain: Rectilinear2D) -> bool:
    """Whether the union is downward closed (a staircase region)."""
    return all(_box_covered(domain.rects, r.x1, r.y1) for r in domain.rects)


# ---------------------------------------------------------------------------
# The invariants
# ---------------------------------------------------------------------------

def delta(domain: ToricDomain) -> Fraction:
    """Diagonal radius: the largest a with (a, ..., a) in the region."""
    if isinstance(domain, StandardDomain):
        if domain.kind == "ball":
            return domain.a / domain.n
        return domain.a  # cylinder, cube and NDUC all meet the diagonal at a
    if isinstance(domain, Polygon2D):
        # The diagonal ray exits through a chain edge whose outward normal
        # has positive coordinate sum; the tightest such edge gives delta.
        best = None
        for nu, c in _chain_halfplanes(domain):
            s = nu[0] + nu[1]
            if s > 0:
                t = c / s
                best = t if best is None or t < best else best
        if best is None:
            raise DomainError("bounded polygon without a diagonal exit edge")
        return best
    if isinstance(domain, Rectilinear2D):
        hits = [
            min(r.x1, r.y1)
            for r in domain.rects
            if max(r.x0, r.y0) <= min(r.x1, r.y1)
        ]
        if not hits:
            raise InapplicableError("diagonal does not meet the domain")
        return max(hits)
    raise DomainError(f"not a toric domain: {domain!r}")


def eta(domain: ToricDomain) -> Fraction:
    """Min-coordinate radius: sup over the region of the smallest coordinate.

    Equivalently the least a such that every point of the region has some
    coordinate <= a.  For a convex (or concave) region this coincides
    with the diagonal radius.
    """
    if isinstance(domain, StandardDomain):
        if domain.kind == "ball":
            return domain.a / domain.n
        return domain.a
    if isinstance(domain, Polygon2D):
        return delta(domain)  # the chain is convex by construction
    if isinstance(domain, Rectilinear2D):
        # Per rectangle the smallest coordinate is maximized at the
        # top-right corner.
        return max(min(r.x1, r.y1) for r in domain.rects)
    raise DomainError(f"not a toric domain: {domain!r}")


def is_monotone(domain: ToricDomain) -> bool:
    """Whether outward normals along the positive boundary are componentwise >= 0.

    For vertex chains this reads edge-wise: each edge direction (dx, dy)
    must have dx <= 0 and dy >= 0.  The NDUC region is accepted by
    convention (it is sandwiched between the cube and itself at the same
    size); this is a convention for the unbounded model, not a claim
    about smooth boundaries.  A rectilinear union is monotone iff it is a
    staircase region (downward closed).
    """
    if isinstance(domain, StandardDomain):
        return True
    if isinstance(domain, Polygon2D):
        return all(dx <= 0 and dy >= 0 for dx, dy in domain.edges())
    if isinstance(domain, Rectilinear2D):
        return _is_staircase(domain)
    raise DomainError(f"not a toric domain: {domain!r}")


def cube_inclusion(domain: ToricDomain) -> Fraction:
    """Largest a with the cube region [0, a]^n contained in the domain.

    This is an exact lower bound for the cube capacity.  For a convex
    polygon the square is contained iff its corners are, so the answer is
    min(delta, x-intercept, y-intercept); for monotone domains it equals
    delta; for a rectangle union it is found by grid decomposition.
    """
    if isinstance(domain, StandardDomain):
        if domain.kind == "ball":
            return domain.a / domain.n
        return domain.a
    if isinstance(domain, Polygon2D):
        return min(delta(domain), domain.x_intercept, domain.y_intercept)
    if isinstance(domain, Rectilinear2D):
        rects = domain.rects
        max_x = max(r.x1 for r in rects)
        max_y = max(r.y1 for r in rects)
        best = min(max_x, max_y)
        xs, ys = _grid_lines(rects)
        for cx0, cx1 in zip(xs, xs[1:]):
            for cy0, cy1 in zip(ys, ys[1:]):
                if not _cell_covered(rects, cx0, cx1, cy0, cy1):
                    # The growing square first meets this uncovered cell
                    # when its side exceeds max(cx0, cy0).
                    best = min(best, max(cx0, cy0))
        return best
    raise DomainError(f"not a toric domain: {domain!r}")


def domain_contains(domain: ToricDomain, p) -> bool:
    """Closed membership test for 2-dimensional domains."""
    if isinstance(domain, Polygon2D):
        return polygon_contains(domain, p)
    if isinstance(domain, Rectilinear2D):
        return rectilinear_contains(domain, p)
    raise InapplicableError("membership test implemented for planar domains only")


def domain_on_boundary(domain: ToricDomain, p) -> bool:
    """Boundary membership test for 2-dimensional domains."""
    if isinstance(domain, Polygon2D):
        return polygon_on_boundary(domain, p)
    if isinstance(domain, Rectilinear2D):
        return rectilinear_on_boundary(domain, p)
    raise InapplicableError("boundary test implemented for planar domains only")
