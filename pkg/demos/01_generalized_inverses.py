#!/usr/bin/env python3
# Tour of the generalized-inverse engine: numerical rank, matrix index,
# Moore-Penrose, core, and core-EP inverses.

import numpy as np

from fuzzylinsys import (
    core_ep_decompose,
    core_ep_via_decomposition,
    core_ep_via_formula,
    core_inverse,
    matrix_index,
    matrix_power,
    moore_penrose,
    rank,
)

np.set_printoptions(precision=4, suppress=True)

# A singular 4x4 matrix. Its rank is 2 and its index (the first power where
# the rank sequence stabilizes) is 1, so it has a core inverse.
s = np.array([
    [0.0, 1.0, 2.0, 0.0],
    [4.0, 0.0, 0.0, 2.0],
    [2.0, 0.0, 0.0, 1.0],
    [0.0, 2.0, 4.0, 0.0],
])
print("rank(s) =", rank(s))
print("index(s) =", matrix_index(s))

# The Moore-Penrose inverse exists for any matrix and satisfies the four
# defining equations; check the first one by substitution.
mp = moore_penrose(s)
print("\nMoore-Penrose inverse:\n", mp)
print("||s @ mp @ s - s|| =", np.linalg.norm(s @ mp @ s - s))

# Index <= 1 means the core inverse exists.
ci = core_inverse(s)
print("\ncore inverse:\n", ci)

# A matrix with a nilpotent part of index 2: the core inverse no longer
# exists, but the core-EP inverse always does.  Two independent routes
# compute it: the explicit power formula and the orthogonal decomposition.
m = np.array([
    [0.0, 1.0, 1.0, 0.0],
    [0.0, 1.0, 1.0, 0.0],
    [1.0, 0.0, 0.0, 1.0],
    [1.0, 0.0, 0.0, 1.0],
])
print("\nindex(m) =", matrix_index(m))
via_formula = core_ep_via_formula(m)
via_factors = core_ep_via_decomposition(m)
print("core-EP inverse (formula route):\n", via_formula)
print("routes agree to", np.abs(via_formula - via_factors).max())

# The decomposition itself: m = u @ [[t, s_block], [0, n_block]] @ u.T with
# t nonsingular and n_block nilpotent.
dec = core_ep_decompose(m)
print("\nnonsingular block t =", dec.t.ravel())
print("nilpotent block n:\n", dec.n_block)
print("n_block squared vanishes:", np.linalg.norm(matrix_power(dec.n_block, 2)))

# The defining equations of the core-EP inverse, checked by substitution:
# x @ m^(k+1) = m^k, m @ x @ x = x, and m @ x symmetric.
k = matrix_index(m)
x = via_formula
mk = matrix_power(m, k)
print("\ndefining-equation residuals:")
print("  x m^(k+1) - m^k :", np.linalg.norm(x @ mk @ m - mk))
print("  m x^2 - x       :", np.linalg.norm(m @ x @ x - x))
print("  (m x)^T - m x   :", np.linalg.norm((m @ x).T - m @ x))
