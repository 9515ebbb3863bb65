"""Build the three domain kinds and compute their basic exact invariants.

Run:  python demos/01_domains_and_radii.py
"""

from fractions import Fraction as F

from toricap import (
    Polygon2D,
    Rect,
    Rectilinear2D,
    StandardDomain,
    cube_inclusion,
    delta,
    eta,
    is_monotone,
    parse_domain,
    serialize_domain,
    square_polygon,
)


def describe(name, dom):
    print(f"{name}:")
    print(f"  delta (diagonal radius)        = {delta(dom)}")
    print(f"  eta (min-coordinate radius)    = {eta(dom)}")
    print(f"  cube_inclusion (largest cube)  = {cube_inclusion(dom)}")
    print(f"  monotone                       = {is_monotone(dom)}")
    print()


# Standard families: ball, cylinder, cube, and the union-of-cylinders
# region (NDUC).  The diagonal radius of the ball is a/n; the other
# three meet the diagonal at their size parameter.
describe("ball B_3(1)", StandardDomain("ball", 3, F(1)))
describe("cube P_2(1)", StandardDomain("cube", 2, F(1)))
describe("NDUC N_2(7/3)", StandardDomain("nduc", 2, F(7, 3)))

# A convex polygon is given by its boundary chain from the x-axis to the
# y-axis; the origin and axis segments are implicit.  The simplex below
# is the moment region of the ball of size 1.
simplex = Polygon2D(((F(1), F(0)), (F(0), F(1))))
describe("simplex polygon", simplex)
describe("square polygon of side 3/4", square_polygon(F(3, 4)))

# A staircase union of rectangles is monotone; all its radii agree.
staircase = Rectilinear2D(
    (Rect(F(0), F(2), F(0), F(1, 2)), Rect(F(0), F(1, 2), F(0), F(2)))
)
describe("staircase union", staircase)

# Domains round-trip bit-exactly through their JSON documents.
text = serialize_domain(staircase)
print("JSON document:", text)
assert parse_domain(text) == staircase
print("round trip: ok")
