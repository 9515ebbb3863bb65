"""Report assembly, the pinched-corner family, and serialization."""

import random
from fractions import Fraction

import pytest

from toricap import (
    CLRule,
    DomainError,
    Rect,
    Rectilinear2D,
    StandardDomain,
    capacity_report,
    delta,
    is_monotone,
    omega_a,
    report_to_dict,
    square_polygon,
    sweep_to_csv,
    verify_xa,
)
from toricap.capacities import CSV_COLUMNS

from generators import make_monotone_polygon, make_staircase, make_weakly_convex_polygon

F = Fraction


def test_omega_a_chain():
    dom = omega_a(F(1, 4))
    assert dom.vertices == (
        (F(1, 2), F(0)), (F(3, 4), F(1, 4)), (F(1, 4), F(3, 4)), (F(0), F(1, 2))
    )
    assert not is_monotone(omega_a(F(1, 5)))


def test_omega_a_range():
    with pytest.raises(DomainError):
        omega_a(F(1, 2))
    with pytest.raises(DomainError):
        omega_a(F(0))
    with pytest.raises(DomainError):
        omega_a(F(3, 5))


def test_report_examples():
    r = capacity_report(omega_a(F(1, 5)))
    assert r.c_P.exact and r.c_P.lower == F(1, 2)
    assert r.c_L.value == F(1, 2)
    assert r.c_N.exact and r.c_N.lower == F(1, 2)

    r = capacity_report(omega_a(F(3, 10)))
    assert r.c_P.exact and r.c_P.lower == F(2, 5)
    assert r.c_N.exact and r.c_N.lower == F(1, 2)
    assert not r.monotone

    for dom in (square_polygon(F(1)), StandardDomain("cube", 2, F(1))):
        r = capacity_report(dom)
        assert r.delta == r.eta == 1
        assert r.c_P.exact and r.c_P.lower == 1
        assert r.c_N.exact and r.c_N.lower == 1
        assert r.c_L.value == 1
        assert r.monotone


def test_report_nduc():
    r = capacity_report(StandardDomain("nduc", 2, F(7, 3)))
    assert r.monotone
    assert r.c_P.exact and r.c_P.lower == F(7, 3)
    assert r.c_N.exact and r.c_N.lower == F(7, 3)
    assert r.c_Z.upper is None  # no slab covers the union of cylinders


def test_report_interval_invariants():
    rng = random.Random(53)
    domains = [make_staircase(rng) for _ in range(10)]
    domains += [make_monotone_polygon(rng) for _ in range(10)]
    domains += [make_weakly_convex_polygon(rng) for _ in range(10)]
    domains += [omega_a(F(i, 20)) for i in range(1, 10)]
    domains.append(StandardDomain("ball", 3, F(2)))
    domains.append(StandardDomain("cylinder", 2, F(3, 7)))
    for dom in domains:
        r = capacity_report(dom)
        assert r.c_P.lower <= r.c_P.upper
        assert r.c_N.lower <= r.c_N.upper
        assert r.c_P.upper <= r.c_N.upper
        if r.c_L.value is not None:
            assert r.c_N.lower <= r.c_L.value <= r.c_N.upper
        if r.monotone:
            assert (
                r.delta == r.eta == r.c_P.lower == r.c_P.upper
                == r.c_N.lower == r.c_N.upper == r.c_L.value
            )


def test_monotone_collapse_on_staircases():
    rng = random.Random(59)
    for _ in range(25):
        dom = make_staircase(rng)
        r = capacity_report(dom)
        d = delta(dom)
        assert r.monotone
        assert {r.delta, r.eta, r.c_P.lower, r.c_P.upper,
                r.c_N.lower, r.c_N.upper, r.c_L.value} == {d}


def test_verify_xa_examples():
    assert verify_xa(F(1, 8)).passed
    assert verify_xa(F(1, 8)).expected_cp == F(1, 2)
    assert verify_xa(F(1, 3)).passed
    assert verify_xa(F(1, 3)).expected_cp == F(1, 3)
    assert verify_xa(F(9, 20)).passed
    assert verify_xa(F(9, 20)).expected_cp == F(1, 10)


def test_verify_xa_crossover_exact():
    check = verify_xa(F(1, 4))
    assert check.passed
    assert check.expected_cp == F(1, 2) == 1 - 2 * F(1, 4)


def test_lshape_lattice_witness_report():
    e = F(1, 2)
    dom = Rectilinear2D(
        (Rect(F(0), 2 * e, F(0), e), Rect(F(0), e, F(0), 2 * e))
    )
    r = capacity_report(dom)
    assert r.c_L.value == e
    assert r.c_L.rule is CLRule.LATTICE_WITNESS


def test_report_to_dict_shape():
    data = report_to_dict(capacity_report(omega_a(F(3, 10))))
    assert data["delta"] == "1/2"
    assert data["c_P"] == {"lower": "2/5", "upper": "2/5", "exact": True}
    assert data["c_L"]["rule"] == "EtaOnBoundary"
    assert data["c_L"]["witness"] == ["1/2", "1/2"]
    assert isinstance(data["notes"], list) and data["notes"]


def test_sweep_csv_columns():
    rows = [(a, capacity_report(omega_a(a))) for a in (F(1, 5), F(3, 10))]
    text = sweep_to_csv(rows)
    lines = text.strip().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[1] == "1/5,1/2,1/2,1/2,1/2,1/2,1/2,1/2,false"
    assert lines[2] == "3/10,1/2,1/2,1/2,2/5,2/5,1/2,1/2,false"
