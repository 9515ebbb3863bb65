"""Sweep the pinched-corner family: where cube and NDUC capacities separate.

For every parameter the NDUC and Lagrangian capacities stay at 1/2 while
the cube capacity follows min(1 - 2a, 1/2); the two agree up to a = 1/4
and separate beyond it.

Run:  python demos/04_family_sweep.py
"""

from fractions import Fraction as F

from toricap import capacity_report, omega_a, sweep_to_csv, verify_xa

values = [F(k, 40) for k in range(1, 20)]

print("a      c_P     c_L   c_N   separated")
for a in values:
    check = verify_xa(a)
    assert check.passed
    r = check.report
    sep = "yes" if r.c_P.lower != r.c_N.lower else ""
    print(f"{str(a):6} {str(r.c_P.lower):7} {str(r.c_L.value):5} "
          f"{str(r.c_N.lower):5} {sep}")

print()
print("CSV of the same sweep (pipe into a plotter of your choice):")
print(sweep_to_csv((a, capacity_report(omega_a(a))) for a in values[:5]), end="")
