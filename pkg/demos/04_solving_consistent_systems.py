#!/usr/bin/env python3
# Solving consistent fuzzy systems: a strong solution, then a weak one.

import numpy as np

from fuzzylinsys import (
    AffineFn,
    FlsProblem,
    FuzzyNumber,
    build_associated,
    solve,
    verify_solution,
)

np.set_printoptions(precision=4, suppress=True)


def fz(l0, l1, u0, u1):
    return FuzzyNumber(AffineFn(l0, l1), AffineFn(u0, u1))


def show(report):
    print(" ", report.classification)
    print("  method:", report.method, " generalized:", report.is_generalized)
    for i, (fn, verdict) in enumerate(zip(report.fuzzy_x, report.verdicts), 1):
        tag = "valid" if verdict.is_valid else f"violates {verdict.violations}"
        print(f"  x~{i} = ({fn.lower.c0:+.4g} {fn.lower.c1:+.4g}r, "
              f"{fn.upper.c0:+.4g} {fn.upper.c1:+.4g}r)  [{tag}]")
    print("  overall:", "strong" if report.strong else "weak",
          " residual:", f"{report.residual:.2e}")


# The associated matrix here is singular with index 1, yet the system is
# consistent: the core-EP route returns an exact solution whose components
# are all valid fuzzy numbers -- a strong solution.
print("2x2 system, strong solution")
p1 = FlsProblem(
    a=np.array([[-2.0, 1.0], [4.0, -2.0]]),
    y=[fz(-1, 3, 3, -1), fz(-6, 2, 2, -6)],
)
r1 = solve(p1)
show(r1)

# Re-substituting the solution into the crisp system on an r-grid:
print("  verify:", f"{verify_solution(build_associated(p1), r1):.2e}")

# This 3x3 system has an index-2 associated matrix.  The right-hand side
# stays inside the column space of s^2, so the solution is still exact --
# but its first component has lower(r) > upper(r), so as a fuzzy vector the
# answer is only weak.
print("\n3x3 system, weak solution")
p2 = FlsProblem(
    a=np.array([[2.0, 0.0, 0.0], [-1.0, 1.0, 1.0], [-1.0, -1.0, -1.0]]),
    y=[fz(0, 4, -8, 0), fz(12, -1, -4, -3), fz(8, 1, -8, -1)],
)
r2 = solve(p2)
show(r2)

# Nonsingular systems short-circuit to a plain linear solve.
print("\nidentity system, unique solution")
p3 = FlsProblem(a=np.eye(2), y=[fz(0, 1, 2, -1), fz(1, 0, 3, -2)])
show(solve(p3))
