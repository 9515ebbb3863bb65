"""Exact symplectic-capacity invariants of toric moment domains.

Everything is computed in exact rational arithmetic over three shape
classes (standard families, weakly convex polygons, rectangle unions):
diagonal and min-coordinate radii, inscribed-cube sizes, certified
Lagrangian capacities, boundary-slope cube-capacity bounds, and a
combinatorial obstruction search for cube embeddings.
"""

from .capacities import (
    CapacityReport,
    Interval,
    XaCheck,
    capacity_report,
    omega_a,
    report_to_dict,
    sweep_to_csv,
    verify_xa,
)
from .domains import (
    Polygon2D,
    Rect,
    Rectilinear2D,
    StandardDomain,
    ToricDomain,
    domain_from_dict,
    domain_to_dict,
    is_weakly_convex,
    parse_domain,
    serialize_domain,
    square_polygon,
)
from .ech import (
    CombOrbit,
    CombOrbitSet,
    LeqResult,
    SearchReport,
    SearchStatus,
    SearchWitness,
    action,
    cross_term,
    cube_bound,
    enumerate_orbit_sets,
    enumeration_truncated,
    finite_d_bound,
    format_orbit_set,
    leq_relation,
    obstruction_search,
    orbit_invariants,
    parse_orbit_set,
    verify_witness,
)
from .errors import DomainError, InapplicableError, ToricapError
from .geometry import (
    cube_inclusion,
    delta,
    domain_contains,
    domain_on_boundary,
    eta,
    is_monotone,
    support,
)
from .lagrangian import (
    CLCertificate,
    CLRule,
    a_min_brute,
    a_min_closed,
    cube_normalized_value,
    lagrangian_capacity,
)
from .rationals import format_rational, parse_rational

__version__ = "0.1.0"

__all__ = [
    "CLCertificate",
    "CLRule",
    "CapacityReport",
    "CombOrbit",
    "CombOrbitSet",
    "DomainError",
    "InapplicableError",
    "Interval",
    "LeqResult",
    "Polygon2D",
    "Rect",
    "Rectilinear2D",
    "SearchReport",
    "SearchStatus",
    "SearchWitness",
    "StandardDomain",
    "ToricDomain",
    "ToricapError",
    "XaCheck",
    "a_min_brute",
    "a_min_closed",
    "action",
    "capacity_report",
    "cross_term",
    "cube_bound",
    "cube_inclusion",
    "cube_normalized_value",
    "delta",
    "domain_contains",
    "domain_from_dict",
    "domain_on_boundary",
    "domain_to_dict",
    "enumerate_orbit_sets",
    "enumeration_truncated",
    "eta",
    "finite_d_bound",
    "format_orbit_set",
    "format_rational",
    "is_monotone",
    "is_weakly_convex",
    "lagrangian_capacity",
    "leq_relation",
    "obstruction_search",
    "omega_a",
    "orbit_invariants",
    "parse_domain",
    "parse_orbit_set",
    "parse_rational",
    "report_to_dict",
    "serialize_domain",
    "square_polygon",
    "support",
    "sweep_to_csv",
    "verify_witness",
    "verify_xa",
]
