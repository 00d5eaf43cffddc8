"""Fuzzy linear systems: crisp block embedding, classification, and solvers.

An n x n fuzzy linear system ``A x~ = y~`` (crisp A, fuzzy right-hand side)
embeds into the crisp 2n x 2n system ``S X(r) = Y(r)`` where
``S = [[D, E], [E, D]]`` collects the entrywise positive parts D and negative
parts E of A.  Consistent systems are solved exactly; inconsistent ones get a
generalized solution through the core-EP inverse of S, which by its block
structure needs only two n x n core-EP inverses, of ``|A| = D + E`` and
``A = D - E``.
"""

from dataclasses import dataclass, field

import numpy as np

from . import ginv
from ._util import as_square
from .errors import DimensionMismatchError, IndexTooLargeError, NumericalFailureError
from .fuzzy import AffineFn, FuzzyNumber, Validity, validity
from .ginv import DEFAULT_TOLERANCES, TolerancePolicy

__all__ = [
    "CONSISTENT_UNIQUE",
    "CONSISTENT_INFINITE",
    "INCONSISTENT",
    "METHOD_INVERSE",
    "METHOD_CORE_EP",
    "METHOD_2I",
    "METHOD_2II",
    "DEFAULT_GRID",
    "FlsProblem",
    "AssociatedSystem",
    "Classification",
    "SolveReport",
    "build_associated",
    "classify",
    "core_ep_from_blocks",
    "block_core_ep",
    "solve",
    "verify_solution",
]

CONSISTENT_UNIQUE = "ConsistentUnique"
CONSISTENT_INFINITE = "ConsistentInfinite"
INCONSISTENT = "Inconsistent"

METHOD_INVERSE = "Inverse"
METHOD_CORE_EP = "CoreEp"
METHOD_2I = "Method2-i"
METHOD_2II = "Method2-ii"
_METHODS = (METHOD_INVERSE, METHOD_CORE_EP, METHOD_2I, METHOD_2II)

DEFAULT_GRID = 11


@dataclass
class FlsProblem:
    """A crisp square coefficient matrix with a fuzzy right-hand side."""

    a: np.ndarray
    y: list[FuzzyNumber]

    def __post_init__(self):
        self.a = as_square(self.a)
        self.y = list(self.y)
        if len(self.y) != self.a.shape[0]:
            raise DimensionMismatchError(
                f"right-hand side has {len(self.y)} components for a "
                f"{self.a.shape[0]}x{self.a.shape[1]} matrix"
            )


@dataclass
class AssociatedSystem:
    """The embedded crisp system ``S X(r) = y0 + r*y1``."""

    s: np.ndarray
    d: np.ndarray
    e: np.ndarray
    y0: np.ndarray
    y1: np.ndarray

    @property
    def n(self) -> int:
        """Order of the original fuzzy system (S is 2n x 2n)."""
        return self.d.shape[0]


@dataclass(frozen=True)
class Classification:
    kind: str
    rank_s: int
    rank_aug: int
    index_s: int


@dataclass
class SolveReport:
    """Outcome of a solve: crisp affine solution, fuzzy back-mapping, verdicts."""

    classification: Classification
    method: str
    crisp_x0: np.ndarray
    crisp_x1: np.ndarray
    fuzzy_x: list[FuzzyNumber]
    verdicts: list[Validity] = field(default_factory=list)
    residual: float = 0.0
    is_generalized: bool = False

    @property
    def strong(self) -> bool:
        """True when every fuzzy component passes all validity clauses."""
        return all(v.is_valid for v in self.verdicts)


def build_associated(problem: FlsProblem) -> AssociatedSystem:
    """Embed the fuzzy system into its crisp 2n x 2n companion.

    D takes the nonnegative entries of A, E the magnitudes of the negative
    ones, and the right-hand side stacks the lower endpoints over the negated
    upper endpoints.
    """
    a = problem.a
    d = np.maximum(a, 0.0)
    e = np.maximum(-a, 0.0)
    s = np.block([[d, e], [e, d]])
    y0 = np.array(
        [fn.lower.c0 for fn in problem.y] + [-fn.upper.c0 for fn in problem.y],
        dtype=float,
    )
    y1 = np.array(
        [fn.lower.c1 for fn in problem.y] + [-fn.upper.c1 for fn in problem.y],
        dtype=float,
    )
    return AssociatedSystem(s=s, d=d, e=e, y0=y0, y1=y1)


def classify(sys: AssociatedSystem, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> Classification:
    """Rank-based consistency taxonomy of the embedded system.

    The right-hand side is the affine family ``y0 + r*y1``, so the system is
    consistent for every r exactly when both generators lie in the column
    space of S; ``rank_aug`` is therefore the rank of ``[S | y0 | y1]``.
    """
    rank_s = ginv.rank(sys.s, tol)
    rank_aug = ginv.rank(np.column_stack([sys.s, sys.y0, sys.y1]), tol)
    index_s = ginv.matrix_index(sys.s, tol)
    size = sys.s.shape[0]
    if rank_s < rank_aug:
        kind = INCONSISTENT
    elif rank_s == size:
        kind = CONSISTENT_UNIQUE
    else:
        kind = CONSISTENT_INFINITE
    return Classification(kind=kind, rank_s=rank_s, rank_aug=rank_aug, index_s=index_s)


def core_ep_from_blocks(d, e, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> np.ndarray:
    """Core-EP inverse of ``[[d, e], [e, d]]`` assembled from its blocks.

    The block structure ``[[h, z], [z, h]]`` holds with
    ``h = ((d+e)^ce + (d-e)^ce) / 2`` and ``z = ((d+e)^ce - (d-e)^ce) / 2``,
    so only two half-size core-EP inverses are needed.
    """
    d = as_square(d)
    e = as_square(e)
    if d.shape != e.shape:
        raise DimensionMismatchError(f"block shapes differ: {d.shape} vs {e.shape}")
    p = ginv.core_ep_via_formula(d + e, tol)
    q = ginv.core_ep_via_formula(d - e, tol)
    h = 0.5 * (p + q)
    z = 0.5 * (p - q)
    return np.block([[h, z], [z, h]])


def block_core_ep(sys: AssociatedSystem, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> np.ndarray:
    """Core-EP inverse of the associated matrix via its D/E block structure."""
    return core_ep_from_blocks(sys.d, sys.e, tol)


def solve(
    problem: FlsProblem,
    tol: TolerancePolicy = DEFAULT_TOLERANCES,
    method: str | None = None,
    grid: int = DEFAULT_GRID,
) -> SolveReport:
    """Solve the fuzzy linear system, choosing the route automatically.

    Route selection (``method=None``): a nonsingular associated matrix is
    inverted directly; a singular one with the right-hand side inside the
    column space of ``S**k`` (k the matrix index) uses the core-EP inverse and
    yields an exact solution; otherwise ``X = S^ce Y`` is returned as a
    generalized solution, the solution of an auxiliary consistent system.
    ``method`` forces one of :data:`METHOD_INVERSE`, :data:`METHOD_CORE_EP`,
    :data:`METHOD_2I`, :data:`METHOD_2II`.

    The residual is the max over a uniform r-grid of the infinity norm of
    ``S X(r) - Y(r)`` for exact solutions, or of the auxiliary-system
    mismatch for generalized ones.
    """
    if grid < 2:
        raise ValueError(f"grid must have at least 2 points, got {grid}")
    sys = build_associated(problem)
    cls = classify(sys, tol)
    s = sys.s
    n = sys.n
    k = cls.index_s

    if k == 0:
        sk = np.eye(2 * n)
        member = True
    else:
        # _ranked_power snaps a numerically-zero S**k to exact zeros so the
        # membership test does not see roundoff as a full column space.
        sk = ginv._ranked_power(s, k, tol)[0]
        member = ginv.in_column_space(sk, sys.y0, tol) and ginv.in_column_space(
            sk, sys.y1, tol
        )

    if method is None:
        if k == 0:
            method = METHOD_INVERSE
        elif member:
            method = METHOD_CORE_EP
        else:
            method = METHOD_2I
    elif method not in _METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {_METHODS}")

    if method == METHOD_INVERSE:
        if k != 0:
            raise IndexTooLargeError(
                f"direct inversion requires matrix index 0, got {k}"
            )
        try:
            x0 = np.linalg.solve(s, sys.y0)
            x1 = np.linalg.solve(s, sys.y1)
        except np.linalg.LinAlgError as exc:
            raise NumericalFailureError(f"linear solve failed: {exc}") from exc
    else:
        s_ce = block_core_ep(sys, tol)
        x0 = s_ce @ sys.y0
        x1 = s_ce @ sys.y1

    rs = np.linspace(0.0, 1.0, grid)
    if member:
        residual = _grid_residual(s, x0, x1, sys.y0, sys.y1, rs)
        scale = max(1.0, _grid_scale(sys.y0, sys.y1, rs))
        if residual > tol.residual_tol * scale:
            raise NumericalFailureError(
                f"exact route left residual {residual:.3e}; membership test and "
                "solution disagree under the tolerance policy"
            )
    elif method == METHOD_2II:
        lhs = sk.T @ s
        residual = _grid_residual(lhs, x0, x1, sk.T @ sys.y0, sk.T @ sys.y1, rs)
    else:
        proj = sk @ ginv.one_three_inverse(sk, tol)
        residual = _grid_residual(s, x0, x1, proj @ sys.y0, proj @ sys.y1, rs)

    fuzzy_x = _to_fuzzy(x0, x1, n)
    verdicts = [validity(fn, tol.equality_tol) for fn in fuzzy_x]
    return SolveReport(
        classification=cls,
        method=method,
        crisp_x0=x0,
        crisp_x1=x1,
        fuzzy_x=fuzzy_x,
        verdicts=verdicts,
        residual=residual,
        is_generalized=not member,
    )


def verify_solution(
    sys: AssociatedSystem,
    report: SolveReport,
    grid: int = DEFAULT_GRID,
    tol: TolerancePolicy = DEFAULT_TOLERANCES,
) -> float:
    """Re-substitute a reported solution and return the max grid residual.

    Exact solutions are checked against the original right-hand side;
    generalized ones against the projected right-hand side
    ``S^k (S^k)^(1,3) Y(r)`` of the auxiliary consistent system.
    """
    if grid < 2:
        raise ValueError(f"grid must have at least 2 points, got {grid}")
    rs = np.linspace(0.0, 1.0, grid)
    if report.is_generalized:
        k = report.classification.index_s
        sk = ginv._ranked_power(sys.s, k, tol)[0]
        proj = sk @ ginv.one_three_inverse(sk, tol)
        rhs0, rhs1 = proj @ sys.y0, proj @ sys.y1
    else:
        rhs0, rhs1 = sys.y0, sys.y1
    return _grid_residual(sys.s, report.crisp_x0, report.crisp_x1, rhs0, rhs1, rs)


def _to_fuzzy(x0: np.ndarray, x1: np.ndarray, n: int) -> list[FuzzyNumber]:
    # Rows n..2n of the crisp solution carry the negated upper endpoints.
    return [
        FuzzyNumber(
            lower=AffineFn(float(x0[i]), float(x1[i])),
            upper=AffineFn(float(-x0[n + i]), float(-x1[n + i])),
        )
        for i in range(n)
    ]


def _grid_residual(mat, x0, x1, rhs0, rhs1, rs) -> float:
    worst = 0.0
    for r in rs:
        gap = mat @ (x0 + r * x1) - (rhs0 + r * rhs1)
        worst = max(worst, float(np.linalg.norm(gap, np.inf)))
    return worst


def _grid_scale(y0, y1, rs) -> float:
    return max(float(np.linalg.norm(y0 + r * y1, np.inf)) for r in rs)
