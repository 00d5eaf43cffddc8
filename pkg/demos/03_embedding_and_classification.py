#!/usr/bin/env python3
# How a fuzzy linear system turns into a crisp one twice the size, and how
# the crisp system is classified before solving.

import numpy as np

from fuzzylinsys import AffineFn, FlsProblem, FuzzyNumber, build_associated, classify

np.set_printoptions(precision=4, suppress=True)


def fz(l0, l1, u0, u1):
    return FuzzyNumber(AffineFn(l0, l1), AffineFn(u0, u1))


# The coefficient matrix is crisp; only the right-hand side is fuzzy.
a = np.array([[-2.0, 1.0], [4.0, -2.0]])
problem = FlsProblem(a=a, y=[fz(-1, 3, 3, -1), fz(-6, 2, 2, -6)])

# The embedding splits a into its positive parts d and the magnitudes of its
# negative parts e, then tiles them into s = [[d, e], [e, d]].  Lower
# endpoints of the solution couple to upper endpoints of the data through
# the negative coefficients, which is exactly what the off-diagonal blocks
# express.
sys = build_associated(problem)
print("d (positive parts):\n", sys.d)
print("e (negative parts):\n", sys.e)
print("associated matrix s:\n", sys.s)

# The right-hand side becomes an affine vector family y0 + r*y1; the upper
# endpoints enter negated.
print("y0 =", sys.y0)
print("y1 =", sys.y1)
print("note: d - e == a:", np.array_equal(sys.d - sys.e, a),
      " d + e == |a|:", np.array_equal(sys.d + sys.e, np.abs(a)))

# Classification compares rank(s) with the rank of s augmented by the whole
# right-hand-side family, and records the matrix index of s.
print("\nsingular but consistent:", classify(sys))

# A nonsingular matrix gives the unique-solution class.
sys_unique = build_associated(
    FlsProblem(a=np.eye(2), y=[fz(0, 1, 2, -1), fz(1, 0, 3, -2)])
)
print("nonsingular:            ", classify(sys_unique))

# And a right-hand side outside the reachable family gives an inconsistent
# system; no exact solution exists, only a generalized one.
sys_bad = build_associated(
    FlsProblem(a=np.array([[-1.0, 1.0], [-1.0, 1.0]]),
               y=[fz(3, 0, 2, 1), fz(4, 0, 0, 8)])
)
print("inconsistent:           ", classify(sys_bad))
