"""Exact rational-arithmetic oracles, independent of the library under test."""

from fractions import Fraction


def exact_rank(rows) -> int:
    """Rank by fraction-free Gaussian elimination; exact for rational entries."""
    m = [[Fraction(v) for v in row] for row in rows]
    n_rows = len(m)
    n_cols = len(m[0])
    pivot_row = 0
    for col in range(n_cols):
        pr = next((r for r in range(pivot_row, n_rows) if m[r][col] != 0), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        pivot = m[pivot_row][col]
        for r in range(pivot_row + 1, n_rows):
            if m[r][col] != 0:
                f = m[r][col] / pivot
                m[r] = [a - f * b for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == n_rows:
            break
    return pivot_row


def int_matmul(a, b):
    n, mid, m = len(a), len(b), len(b[0])
    return [
        [sum(a[i][t] * b[t][j] for t in range(mid)) for j in range(m)] for i in range(n)
    ]


def int_matpow(a, k):
    n = len(a)
    result = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(k):
        result = int_matmul(result, a)
    return result


def exact_index(s) -> int:
    """Smallest k with rank(S^(k+1)) == rank(S^k), in exact arithmetic."""
    n = len(s)
    prev = n
    power = int_matpow(s, 0)
    for k in range(1, n + 2):
        power = int_matmul(power, s)
        r = exact_rank(power)
        if r == prev:
            return k - 1
        prev = r
    raise AssertionError("index did not stabilize; oracle bug")


def exact_in_colspace(sk, y) -> bool:
    augmented = [row + [yi] for row, yi in zip(sk, y)]
    return exact_rank(augmented) == exact_rank(sk)
