"""Combinatorial orbit-set engine for embedding obstructions.

A combinatorial orbit is a primitive integer direction ``v`` (with at
least one nonnegative component) plus an elliptic/hyperbolic marker
``s`` in {1, 0}; an orbit set is a finite formal product of distinct
orbits with positive multiplicities (multiplicity 1 whenever s = 0).
Five integer invariants are attached to an orbit set, and a rational
action is attached relative to a weakly convex polygon: the
multiplicity-weighted sum of the support values of the directions over
the boundary chain.

On top of these the module provides:

* ``leq_relation`` -- the three-condition comparison (index equality,
  action inequality, and the writhe-type count inequality) that an
  embedding forces on matched orbit-set factors;
* ``cube_bound`` -- the closed-form upper bound (x-intercept +
  y-intercept)/2 for the cube capacity of a weakly convex domain whose
  first and last boundary edges are at least diagonal-steep;
* ``finite_d_bound`` -- the weakest inequality any admissible factor of
  the canonical degree-d test product can impose, a certified upper
  bound converging to ``cube_bound`` from above;
* ``obstruction_search`` -- a bounded feasibility search for the factor
  decompositions that an embedding would have to admit, returning a
  verifiable witness, a within-bounds exhaustion certificate, or an
  inconclusive report when truncation could have hidden a witness.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional

from .domains import Polygon2D, is_square_polygon
from .errors import DomainError, InapplicableError
from .geometry import delta, support


# ---------------------------------------------------------------------------
# Orbits and orbit sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CombOrbit:
    """Primitive direction (x, y) with elliptic marker s = 1 or hyperbolic s = 0."""

    v: tuple
    s: int

    def __post_init__(self):
        x, y = self.v
        if not (isinstance(x, int) and isinstance(y, int)):
            raise DomainError("orbit direction must be an integer pair")
        if (x, y) == (0, 0):
            raise DomainError("orbit direction must be nonzero")
        if math.gcd(abs(x), abs(y)) != 1:
            raise DomainError(f"orbit direction {self.v} is not primitive")
        if x < 0 and y < 0:
            raise DomainError(
                f"orbit direction {self.v} must have a nonnegative component"
            )
        if self.s not in (0, 1):
            raise DomainError(f"orbit marker must be 0 or 1, got {self.s!r}")
        object.__setattr__(self, "v", (x, y))

    @property
    def key(self):
        return (self.v[0], self.v[1], self.s)


@dataclass(frozen=True)
class CombOrbitSet:
    """Formal product of distinct orbits with multiplicities, canonically sorted."""

    factors: tuple  # of (CombOrbit, multiplicity)

    def __post_init__(self):
        factors = tuple(sorted(self.factors, key=lambda f: f[0].key))
        seen = set()
        for orbit, m in factors:
            if not isinstance(orbit, CombOrbit):
                raise DomainError("factors must pair a CombOrbit with a multiplicity")
            if not isinstance(m, int) or m < 1:
                raise DomainError(f"multiplicity must be an integer >= 1, got {m!r}")
            if orbit.s == 0 and m != 1:
                raise DomainError("hyperbolic (s = 0) orbits must have multiplicity 1")
            if orbit in seen:
                raise DomainError(f"repeated orbit {orbit} in orbit set")
            seen.add(orbit)
        object.__setattr__(self, "factors", factors)

    def __bool__(self):
        return bool(self.factors)

    def multiplicity(self, orbit: CombOrbit) -> int:
        for o, m in self.factors:
            if o == orbit:
                return m
        return 0

    def orbits(self):
        return tuple(o for o, _ in self.factors)

    def product(self, other: "CombOrbitSet") -> "CombOrbitSet":
        """Formal product: multiplicities of shared orbits add."""
        merged = {o: m for o, m in self.factors}
        for o, m in other.factors:
            merged[o] = merged.get(o, 0) + m
        return CombOrbitSet(tuple(merged.items()))


EMPTY_ORBIT_SET = CombOrbitSet(())


@dataclass(frozen=True)
class OrbitNumbers:
    x: int
    y: int
    index: int
    m: int
    h: int


def orbit_invariants(alpha: CombOrbitSet) -> OrbitNumbers:
    """The five integers attached to an orbit set.

    ``index`` is x + y + the double sum over ordered factor pairs
    (including i = j) of m_i m_j max(x_i y_j, x_j y_i), plus the sum of
    s_i m_i.  ``h`` counts hyperbolic factors.
    """
    fx = [(o.v[0], o.v[1], o.s, m) for o, m in alpha.factors]
    x = sum(m * vx for vx, _, _, m in fx)
    y = sum(m * vy for _, vy, _, m in fx)
    double = 0
    for vx1, vy1, _, m1 in fx:
        for vx2, vy2, _, m2 in fx:
            double += m1 * m2 * max(vx1 * vy2, vx2 * vy1)
    s_term = sum(s * m for _, _, s, m in fx)
    total_m = sum(m for _, _, _, m in fx)
    h = sum(1 for _, _, s, _ in fx if s == 0)
    return OrbitNumbers(x=x, y=y, index=x + y + double + s_term, m=total_m, h=h)


def cross_term(alpha: CombOrbitSet, beta: CombOrbitSet) -> int:
    """Sum over pairs (i in alpha, j in beta) of m_i m_j max(x_i y_j, x_j y_i).

    The index of any formal product satisfies
    I(a * b) = I(a) + I(b) + 2 * cross_term(a, b).
    """
    total = 0
    for o1, m1 in alpha.factors:
        for o2, m2 in beta.factors:
            total += m1 * m2 * max(o1.v[0] * o2.v[1], o2.v[0] * o1.v[1])
    return total


def action(domain: Polygon2D, alpha: CombOrbitSet) -> Fraction:
    """Multiplicity-weighted sum of support values of the orbit directions."""
    return sum(
        (m * support(domain, o.v) for o, m in alpha.factors),
        start=Fraction(0),
    )


# ---------------------------------------------------------------------------
# Orbit-set literals
# ---------------------------------------------------------------------------

_FACTOR_RE = re.compile(
    r"^\s*([eh])\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*(?:\^\s*(-?\d+)\s*)?$"
)


def parse_orbit_set(text: str) -> CombOrbitSet:
    """Parse literals like ``e(1,-1)^3 * e(-1,1)^3 * e(1,1)^2`` or ``h(1,0)``."""
    parts = text.split("*")
    factors = []
    seen = set()
    for part in parts:
        m = _FACTOR_RE.match(part)
        if not m:
            raise DomainError(f"bad orbit factor: {part.strip()!r}")
        marker, xs, ys, ms = m.groups()
        s = 1 if marker == "e" else 0
        mult = int(ms) if ms is not None else 1
        if mult < 1:
            raise DomainError(f"multiplicity must be >= 1 in {part.strip()!r}")
        orbit = CombOrbit((int(xs), int(ys)), s)
        if orbit in seen:
            raise DomainError(f"duplicate orbit in literal: {part.strip()!r}")
        seen.add(orbit)
        factors.append((orbit, mult))
    return CombOrbitSet(tuple(factors))


def format_orbit_set(alpha: CombOrbitSet) -> str:
    if not alpha.factors:
        return "1"
    parts = []
    for o, m in alpha.factors:
        head = ("e" if o.s == 1 else "h") + f"({o.v[0]},{o.v[1]})"
        parts.append(head + (f"^{m}" if m > 1 else ""))
    return " * ".join(parts)


# ---------------------------------------------------------------------------
# Factor comparison and closed-form bounds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LeqResult:
    holds: bool
    failed: Optional[str]  # "i" | "ii" | "iii" when not holding


def leq_relation(
    source: Polygon2D,
    target: Polygon2D,
    alpha: CombOrbitSet,
    alpha_prime: CombOrbitSet,
) -> LeqResult:
    """The three-condition comparison forced on matched factors.

    (i) equal index; (ii) source action <= target action; (iii)
    x + y - h/2 on the source side at least x' + y' + m' - 1 on the
    target side, compared over the rationals to honor the h/2 term.
    """
    a = orbit_invariants(alpha)
    b = orbit_invariants(alpha_prime)
    if a.index != b.index:
        return LeqResult(False, "i")
    if action(source, alpha) > action(target, alpha_prime):
        return LeqResult(False, "ii")
    lhs = Fraction(2 * (a.x + a.y) - a.h, 2)
    rhs = b.x + b.y + b.m - 1
    if lhs < rhs:
        return LeqResult(False, "iii")
    return LeqResult(True, None)


def _slope_condition(domain: Polygon2D) -> bool:
    # Both end edges at least diagonal-steep: direction (dx, dy) with
    # dx <= dy.  This makes the supports of (1,-1) and (-1,1) attain
    # exactly the two axis intercepts.
    edges = domain.edges()
    dx0, dy0 = edges[0]
    dx1, dy1 = edges[-1]
    return dx0 <= dy0 and dx1 <= dy1


def cube_bound(domain: Polygon2D) -> Fraction:
    """Closed-form upper bound (x-intercept + y-intercept)/2 for the cube capacity.

    Requires the boundary chain to leave the x-axis and arrive at the
    y-axis at least diagonally (edge direction dx <= dy at both ends);
    otherwise the bound is not certified and the call refuses.
    """
    if not _slope_condition(domain):
        raise InapplicableError(
            "tangent-slope condition fails: both end edges must satisfy dx <= dy"
        )
    return Fraction(domain.x_intercept + domain.y_intercept, 2)


def finite_d_bound(domain: Polygon2D, d: int) -> Fraction:
    """Certified cube-capacity bound extracted from the degree-d test product.

    Any admissible factor forces the inequality
    a < (d_i * (x0 + y1) + k) / (2 d_i + 3 k - 1) for some k in {0, 1, 2}
    and some integer d_i in [ceil(d/3), d]; the max over all admissible
    pairs is therefore a sound upper bound.  It is non-increasing in d
    and converges to ``cube_bound`` from above.
    """
    if not isinstance(d, int) or d < 1:
        raise InapplicableError(f"degree must be an integer >= 1, got {d!r}")
    cube_bound(domain)  # validates the slope precondition
    s = domain.x_intercept + domain.y_intercept
    lo = -(-d // 3)
    best = None
    for di in range(lo, d + 1):
        for k in (0, 1, 2):
            val = Fraction(di * s + k, 2 * di + 3 * k - 1)
            if best is None or val > best:
                best = val
    return best


# ---------------------------------------------------------------------------
# Bounded enumeration of orbit sets
# ---------------------------------------------------------------------------

def _primitive_directions(vmax: int, include_axis_orbits: bool):
    for x in range(-vmax, vmax + 1):
        for y in range(-vmax, vmax + 1):
            if (x, y) == (0, 0) or (x < 0 and y < 0):
                continue
            if math.gcd(abs(x), abs(y)) != 1:
                continue
            if not include_axis_orbits and (x, y) in ((1, 0), (0, 1)):
                continue
            yield (x, y)


def candidate_orbits(
    domain: Polygon2D,
    action_cap: Fraction,
    vmax: int,
    include_axis_orbits: bool = True,
):
    """Orbits usable under the action cap: positive support not exceeding it.

    Directions of nonpositive support are excluded: every closed orbit
    contributes a positive period, so they cannot occur.
    """
    out = []
    for v in sorted(_primitive_directions(vmax, include_axis_orbits)):
        sup = support(domain, v)
        if 0 < sup <= action_cap:
            for s in (0, 1):
                out.append((CombOrbit(v, s), sup))
    out.sort(key=lambda item: item[0].key)
    return out


def enumeration_truncated(domain: Polygon2D, action_cap: Fraction) -> bool:
    """Whether any direction beyond *every* finite bound stays affordable.

    The families (1, -M) and (-M, 1) have support converging to (and
    reaching) the x- and y-intercepts, and every other excluded direction
    costs at least as much; so truncation can hide candidates exactly
    when the cap reaches the smaller intercept.
    """
    return min(domain.x_intercept, domain.y_intercept) <= action_cap


def enumerate_orbit_sets(
    domain: Polygon2D,
    action_cap: Fraction,
    index_target: int,
    vmax: int,
    include_axis_orbits: bool = True,
) -> Iterator[CombOrbitSet]:
    """All orbit sets within the direction bound, action cap and index target.

    Deterministic and duplicate-free: sets are emitted in lexicographic
    order of their multiplicity vector over the canonically sorted
    candidate list.  Within the stated bounds no valid set is skipped
    (multiplicities are finite because every candidate costs a positive
    action); ``enumeration_truncated`` reports whether the direction
    bound itself may exclude affordable candidates.
    """
    if vmax < 1:
        raise InapplicableError(f"direction bound must be >= 1, got {vmax}")
    if action_cap <= 0:
        return iter(())
    candidates = candidate_orbits(domain, action_cap, vmax, include_axis_orbits)

    def rec(i: int, remaining: Fraction, chosen):
        if i == len(candidates):
            if chosen:
                alpha = CombOrbitSet(tuple(chosen))
                if orbit_invariants(alpha).index == index_target:
                    yield alpha
            return
        orbit, sup = candidates[i]
        max_m = int(remaining / sup)
        if orbit.s == 0:
            max_m = min(max_m, 1)
        for m in range(0, max_m + 1):
            if m == 0:
                yield from rec(i + 1, remaining, chosen)
            else:
                chosen.append((orbit, m))
                yield from rec(i + 1, remaining - m * sup, chosen)
                chosen.pop()

    return rec(0, Fraction(action_cap), [])


# ---------------------------------------------------------------------------
# Obstruction search
# ---------------------------------------------------------------------------

class SearchStatus(str, Enum):
    FEASIBLE_WITNESS = "FeasibleWitness"
    INFEASIBLE_WITHIN_BOUNDS = "InfeasibleWithinBounds"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class SearchWitness:
    alpha: CombOrbitSet
    alpha_factors: tuple
    alpha_prime_factors: tuple


@dataclass(frozen=True)
class SearchBounds:
    vmax: int
    lmax: int
    include_axis_orbits: bool
    candidate_factors: int
    factors_pruned: int
    factorizations_explored: int
    enumerations_run: int
    enumeration_truncated: bool


@dataclass(frozen=True)
class SearchReport:
    status: SearchStatus
    witness: Optional[SearchWitness]
    bounds_used: SearchBounds
    obstructed_a: Optional[Fraction]


def _sub_multisets(alpha: CombOrbitSet):
    """All nonempty sub-multisets of an orbit set (its formal divisors)."""
    orbits = alpha.factors
    ranges = [range(0, m + 1) for _, m in orbits]
    for combo in itertools.product(*ranges):
        if all(c == 0 for c in combo):
            continue
        yield CombOrbitSet(
            tuple((o, c) for (o, _), c in zip(orbits, combo) if c > 0)
        )


def _multiset_vector(alpha: CombOrbitSet, basis):
    return tuple(alpha.multiplicity(o) for o in basis)


def _subset_indices_ok(parts, index_of, crosses, require_positive: bool) -> bool:
    n = len(parts)
    for mask in range(1, 1 << n):
        total = 0
        members = [j for j in range(n) if mask >> j & 1]
        for j in members:
            total += index_of[j]
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                total += 2 * crosses[members[a]][members[b]]
        if require_positive and total <= 0:
            return False
    return True


def _shares_orbits(a: CombOrbitSet, b: CombOrbitSet, s: int) -> bool:
    mine = {o for o in a.orbits() if o.s == s}
    return any(o in mine for o in b.orbits() if o.s == s)


def verify_witness(
    source: Polygon2D,
    target: Polygon2D,
    witness: SearchWitness,
    alpha_prime: CombOrbitSet,
) -> bool:
    """Independent replay of the witness conditions.

    Checks that the factor lists multiply back to the witness orbit set
    and to the given test set, that each matched pair satisfies the
    comparison relation, that equal factors on either side share no
    elliptic orbits, and that every nonempty sub-product has equal,
    positive index on both sides.
    """
    af = witness.alpha_factors
    pf = witness.alpha_prime_factors
    if len(af) != len(pf) or not af:
        return False
    prod_a = EMPTY_ORBIT_SET
    for f in af:
        prod_a = prod_a.product(f)
    prod_p = EMPTY_ORBIT_SET
    for f in pf:
        prod_p = prod_p.product(f)
    if prod_a != witness.alpha or prod_p != alpha_prime:
        return False
    for a, p in zip(af, pf):
        if not leq_relation(source, target, a, p).holds:
            return False
    for i in range(len(af)):
        for j in range(i + 1, len(af)):
            if af[i] == af[j] or pf[i] == pf[j]:
                if _shares_orbits(af[i], af[j], s=1):
                    return False
    idx_a = [orbit_invariants(f).index for f in af]
    idx_p = [orbit_invariants(f).index for f in pf]
    cr_a = [[cross_term(af[i], af[j]) for j in range(len(af))] for i in range(len(af))]
    cr_p = [[cross_term(pf[i], pf[j]) for j in range(len(pf))] for i in range(len(pf))]
    n = len(af)
    for mask in range(1, 1 << n):
        members = [j for j in range(n) if mask >> j & 1]
        ia = sum(idx_a[j] for j in members)
        ip = sum(idx_p[j] for j in members)
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                ia += 2 * cr_a[members[a]][members[b]]
                ip += 2 * cr_p[members[a]][members[b]]
        if ia != ip or ip <= 0:
            return False
    return True


def obstruction_search(
    source: Polygon2D,
    target: Polygon2D,
    alpha_prime: CombOrbitSet,
    vmax: int,
    lmax: int,
    include_axis_orbits: bool = True,
) -> SearchReport:
    """Bounded search for the factor decompositions an embedding must admit.

    The test set must have positive index and no hyperbolic factors.
    Every factorization of it into at most ``lmax`` parts is considered.
    A sound per-factor inequality closes most branches without touching
    the direction bound: the source action of any matching factor is at
    least the source diagonal radius times (x' + y' + m' - 1), so factors
    whose target action is below that threshold admit no match at any
    direction bound.  Surviving slots are filled from the bounded
    enumeration and checked against all pairwise and subset conditions.

    Outcomes: a re-verified ``FeasibleWitness``; or
    ``InfeasibleWithinBounds`` when exhaustion never depended on the
    direction bound truncating affordable candidates; or ``Inconclusive``
    when it did.  Within-bounds infeasibility is an obstruction claim for
    this combinatorial model and these bounds only.
    """
    if vmax < 1 or lmax < 1:
        raise InapplicableError(
            f"invalid search limits: vmax={vmax}, lmax={lmax} (both must be >= 1)"
        )
    inv = orbit_invariants(alpha_prime)
    if inv.index <= 0:
        raise InapplicableError(
            f"test orbit set must have positive index, got {inv.index}"
        )
    if inv.h != 0:
        raise InapplicableError("test orbit set must have no hyperbolic factors")

    delta_source = delta(source)
    basis = alpha_prime.orbits()
    target_vec = _multiset_vector(alpha_prime, basis)

    candidates = []
    pruned = 0
    total = 0
    for sub in _sub_multisets(alpha_prime):
        total += 1
        numbers = orbit_invariants(sub)
        if numbers.index <= 0:
            continue
        cap = action(target, sub)
        if delta_source * (numbers.x + numbers.y + numbers.m - 1) > cap:
            pruned += 1
            continue
        candidates.append((sub, numbers, cap))
    # Deterministic ordering: larger factors first so single-factor
    # decompositions are tried before fine splittings.
    candidates.sort(key=lambda c: (-c[1].m, _multiset_vector(c[0], basis)))

    max_part = max((c[1].m for c in candidates), default=0)

    enumerations_run = 0
    truncated_run = False
    factorizations = 0
    enum_cache: dict = {}

    def slot_candidates(factor: CombOrbitSet, numbers: OrbitNumbers, cap: Fraction):
        nonlocal enumerations_run, truncated_run
        key = factor
        if key in enum_cache:
            return enum_cache[key]
        enumerations_run += 1
        if enumeration_truncated(source, cap):
            truncated_run = True
        found = [
            a
            for a in enumerate_orbit_sets(
                source, cap, numbers.index, vmax, include_axis_orbits
            )
            if leq_relation(source, target, a, factor).holds
        ]
        enum_cache[key] = found
        return found

    def assign(slots):
        """Pick one source set per slot satisfying the joint conditions."""
        pf = [s[0] for s in slots]
        idx_p = [s[1].index for s in slots]
        cr_p = [
            [cross_term(pf[i], pf[j]) for j in range(len(pf))]
            for i in range(len(pf))
        ]
        options = []
        for factor, numbers, cap in slots:
            found = slot_candidates(factor, numbers, cap)
            if not found:
                return None
            options.append(found)

        chosen: list = []

        def rec(t: int):
            if t == len(slots):
                return True
            for a in options[t]:
                ok = True
                for i in range(t):
                    if chosen[i] == a or pf[i] == pf[t]:
                        if _shares_orbits(chosen[i], a, s=1):
                            ok = False
                            break
                    if _shares_orbits(chosen[i], a, s=0):
                        ok = False  # witness would repeat a hyperbolic orbit
                        break
                if not ok:
                    continue
                chosen.append(a)
                if _subset_match(t + 1):
                    if rec(t + 1):
                        return True
                chosen.pop()
            return False

        def _subset_match(upto: int) -> bool:
            # Subset index equality over the chosen prefix, rechecking
            # only subsets containing the newest slot.
            t = upto - 1
            for mask in range(1, 1 << upto):
                if not (mask >> t & 1):
                    continue
                members = [j for j in range(upto) if mask >> j & 1]
                ia = sum(orbit_invariants(chosen[j]).index for j in members)
                ip = sum(idx_p[j] for j in members)
                for x in range(len(members)):
                    for y in range(x + 1, len(members)):
                        ia += 2 * cross_term(chosen[members[x]], chosen[members[y]])
                        ip += 2 * cr_p[members[x]][members[y]]
                if ia != ip or ip <= 0:
                    return False
            return True

        if rec(0):
            return list(chosen)
        return None

    def factorizations_dfs(start: int, remaining, slots):
        nonlocal factorizations
        if all(r == 0 for r in remaining):
            factorizations += 1
            idx_p = [s[1].index for s in slots]
            cr_p = [
                [cross_term(slots[i][0], slots[j][0]) for j in range(len(slots))]
                for i in range(len(slots))
            ]
            if not _subset_indices_ok(slots, idx_p, cr_p, require_positive=True):
                return None
            picked = assign(slots)
            if picked is not None:
                return SearchWitness(
                    alpha=_product_all(picked),
                    alpha_factors=tuple(picked),
                    alpha_prime_factors=tuple(s[0] for s in slots),
                )
            return None
        if len(slots) == lmax:
            return None
        need = sum(remaining)
        if need > (lmax - len(slots)) * max_part:
            return None
        for i in range(start, len(candidates)):
            sub, numbers, cap = candidates[i]
            vec = _multiset_vector(sub, basis)
            if any(v > r for v, r in zip(vec, remaining)):
                continue
            new_remaining = tuple(r - v for r, v in zip(remaining, vec))
            slots.append(candidates[i])
            result = factorizations_dfs(i, new_remaining, slots)
            if result is not None:
                return result
            slots.pop()
        return None

    witness = factorizations_dfs(0, target_vec, [])

    if witness is not None and not verify_witness(source, target, witness, alpha_prime):
        raise AssertionError("internal error: witness failed re-verification")

    bounds = SearchBounds(
        vmax=vmax,
        lmax=lmax,
        include_axis_orbits=include_axis_orbits,
        candidate_factors=total,
        factors_pruned=pruned,
        factorizations_explored=factorizations,
        enumerations_run=enumerations_run,
        enumeration_truncated=truncated_run,
    )
    if witness is not None:
        return SearchReport(SearchStatus.FEASIBLE_WITNESS, witness, bounds, None)
    if truncated_run:
        return SearchReport(SearchStatus.INCONCLUSIVE, None, bounds, None)
    return SearchReport(
        SearchStatus.INFEASIBLE_WITHIN_BOUNDS,
        None,
        bounds,
        is_square_polygon(source),
    )


def _product_all(sets) -> CombOrbitSet:
    out = EMPTY_ORBIT_SET
    for s in sets:
        out = out.product(s)
    return out
