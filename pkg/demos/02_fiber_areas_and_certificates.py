"""Minimal torus-fiber areas and Lagrangian-capacity certificates.

Run:  python demos/02_fiber_areas_and_certificates.py
"""

from fractions import Fraction as F

from toricap import (
    Rect,
    Rectilinear2D,
    a_min_brute,
    a_min_closed,
    lagrangian_capacity,
    omega_a,
    square_polygon,
)

# The fiber torus over (x1, ..., xn) has minimal positive area equal to
# the smallest positive integer combination of the coordinates -- a gcd
# computation for rational points.  The exhaustive box enumeration is an
# independent oracle for the closed form.
for point in ([F(1, 2), F(1, 2)], [F(2, 3), F(1, 2)], [F(3, 4), F(5, 6), F(1, 2)]):
    closed = a_min_closed(point)
    brute = a_min_brute(point, 50)
    tag = "ok" if closed == brute else "MISMATCH"
    print(f"A_min{tuple(str(c) for c in point)} = {closed}  (oracle {brute}, {tag})")
print()

# Certificates name the argument that fixes the capacity value.
examples = [
    ("square of side 1 (monotone)", square_polygon(F(1))),
    ("pinched-corner polygon, a = 3/10", omega_a(F(3, 10))),
    (
        "two-arm union (witness off the diagonal)",
        Rectilinear2D((Rect(F(0), F(1), F(0), F(1, 2)),
                       Rect(F(0), F(1, 2), F(0), F(1)))),
    ),
    (
        "no certificate applies: honest interval",
        Rectilinear2D((Rect(F(0), F(1), F(0), F(1, 4)),
                       Rect(F(2, 3), F(7, 8), F(0), F(1, 2)))),
    ),
]
for name, dom in examples:
    cert = lagrangian_capacity(dom)
    print(f"{name}:")
    print(f"  rule    = {cert.rule.value}")
    if cert.value is not None:
        print(f"  value   = {cert.value}")
        print(f"  witness = {cert.witness}")
    else:
        print(f"  bracket = [{cert.lower}, {cert.upper}]")
    print()
