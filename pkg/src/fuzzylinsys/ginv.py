"""Generalized-inverse engine for dense real matrices.

Provides a numerical rank with an explicit cutoff policy, the Moore-Penrose
inverse, the matrix index, the core and core-EP inverses (the latter by two
independent routes), and column-space membership tests.  All functions are
pure: they take plain ``numpy`` arrays and return new arrays.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ._util import as_matrix, as_square, as_vector
from .errors import IndexTooLargeError, NumericalFailureError

__all__ = [
    "TolerancePolicy",
    "DEFAULT_TOLERANCES",
    "CoreEpDecomposition",
    "rank",
    "moore_penrose",
    "one_three_inverse",
    "matrix_power",
    "matrix_index",
    "core_ep_decompose",
    "core_ep_via_decomposition",
    "core_ep_via_formula",
    "core_inverse",
    "in_column_space",
]


@dataclass(frozen=True)
class TolerancePolicy:
    """Numerical cutoffs used throughout the package.

    ``rank_rel_tol`` is the relative singular-value cutoff deciding rank;
    ``None`` means the usual shape-dependent default ``max(rows, cols) * eps``.
    ``residual_tol`` bounds residuals in membership and consistency checks,
    and ``equality_tol`` bounds matrix-equality comparisons.
    """

    rank_rel_tol: float | None = None
    residual_tol: float = 1e-8
    equality_tol: float = 1e-9

    def __post_init__(self):
        for name in ("rank_rel_tol", "residual_tol", "equality_tol"):
            value = getattr(self, name)
            if name == "rank_rel_tol" and value is None:
                continue
            if not (0.0 < value < 1.0):
                raise ValueError(f"{name} must lie strictly between 0 and 1, got {value}")

    def rank_cutoff(self, shape) -> float:
        """Relative cutoff for the given matrix shape."""
        if self.rank_rel_tol is not None:
            return self.rank_rel_tol
        return max(shape) * np.finfo(float).eps


DEFAULT_TOLERANCES = TolerancePolicy()


@dataclass
class CoreEpDecomposition:
    """Orthogonal block triangularization ``a = u @ [[t, s], [0, n]] @ u.T``.

    ``t`` is nonsingular of order ``rank(a**k)`` where ``k`` is the matrix
    index, and ``n_block`` is nilpotent (``n_block**k == 0``).  ``u`` is real
    orthogonal; ``t`` is quasi-upper-triangular (2x2 bumps carry complex
    eigenvalue pairs of the nonsingular part).
    """

    u: np.ndarray
    t: np.ndarray
    s_block: np.ndarray
    n_block: np.ndarray
    k: int

    @property
    def rho(self) -> int:
        return self.t.shape[0]

    def assemble(self) -> np.ndarray:
        """Reconstruct the original matrix from the factors."""
        n = self.u.shape[0]
        rho = self.rho
        core = np.zeros((n, n))
        core[:rho, :rho] = self.t
        core[:rho, rho:] = self.s_block
        core[rho:, rho:] = self.n_block
        return self.u @ core @ self.u.T


def rank(m, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> int:
    """Numerical rank: number of singular values above the relative cutoff."""
    a = as_matrix(m)
    s = _singular_values(a)
    smax = float(s[0]) if s.size else 0.0
    if smax == 0.0:
        return 0
    return int(np.count_nonzero(s > tol.rank_cutoff(a.shape) * smax))


def moore_penrose(m, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> np.ndarray:
    """Moore-Penrose inverse by SVD, dropping singular values below the cutoff."""
    a = as_matrix(m)
    try:
        u, s, vt = np.linalg.svd(a, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailureError(f"SVD failed: {exc}") from exc
    cutoff = tol.rank_cutoff(a.shape) * (float(s[0]) if s.size else 0.0)
    inv = np.zeros_like(s)
    keep = s > cutoff
    inv[keep] = 1.0 / s[keep]
    return (vt.T * inv) @ u.T


def one_three_inverse(m, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> np.ndarray:
    """A {1,3}-inverse of ``m``.

    Any matrix satisfying equations (1) ``A X A = A`` and (3) ``(A X)^T = A X``
    will do; the Moore-Penrose inverse satisfies both and is the canonical
    choice here.
    """
    return moore_penrose(m, tol)


def matrix_power(m, k: int) -> np.ndarray:
    """``m**k`` by repeated squaring, with ``m**0 = I``."""
    a = as_square(m)
    if not isinstance(k, (int, np.integer)) or k < 0:
        raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
    return np.linalg.matrix_power(a, int(k))


def matrix_index(m, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> int:
    """Smallest k >= 0 with rank(m**(k+1)) == rank(m**k).

    Powers of a nilpotent part vanish exactly in exact arithmetic but only to
    roundoff in floats, so the rank of m**k is judged against the natural
    scale sigma_max(m)**k rather than against the power's own largest
    singular value.  Always terminates with k <= n in exact arithmetic; if
    the rank sequence has not stabilized by then the tolerance policy is
    inconsistent with the matrix and a numerical failure is raised.
    """
    a = as_square(m)
    n = a.shape[0]
    smax = float(_singular_values(a)[0])
    prev = n  # rank of m**0
    power = np.eye(n)
    reference = 1.0
    for k in range(1, n + 2):
        power = power @ a
        reference *= smax
        # roundoff in k chained products grows like k * eps * sigma_max**k
        r = _rank_against_reference(power, (k + 1) * reference, tol)
        if r == prev:
            return k - 1
        prev = r
    raise NumericalFailureError(
        "rank sequence did not stabilize within the matrix dimension; "
        "the rank cutoff is inconsistent for this matrix"
    )


def core_ep_decompose(m, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> CoreEpDecomposition:
    """Split ``m`` into its nonsingular core and nilpotent part.

    Returns real orthogonal ``u`` and blocks ``t`` (nonsingular, order
    ``rho = rank(m**k)``), ``s_block`` and nilpotent ``n_block`` with
    ``m = u @ [[t, s], [0, n]] @ u.T``.

    The separation is eigenvalue-based: a Schur triangularization is reordered
    so the ``rho`` largest eigenvalue moduli lead.  Complex conjugate pairs are
    handled in complex arithmetic internally and the basis is re-realified, so
    all returned factors are real.  Zero eigenvalues of a defective matrix are
    computed with error on the order of ``norm(m) * eps**(1/k)``, so the
    reordering threshold is placed adaptively inside the modulus gap rather
    than at the rank cutoff itself; if no gap separates the two groups, a
    numerical failure is raised.
    """
    a = as_square(m)
    n = a.shape[0]
    k = matrix_index(a, tol)
    rho = _ranked_power(a, k, tol)[1]

    if rho == n:
        t, u = _real_schur(a)
        s_block = np.zeros((n, 0))
        n_block = np.zeros((0, 0))
        dec = CoreEpDecomposition(u=u, t=t, s_block=s_block, n_block=n_block, k=k)
    elif rho == 0:
        n_full, u = _real_schur(a)
        dec = CoreEpDecomposition(
            u=u, t=np.zeros((0, 0)), s_block=np.zeros((0, n)), n_block=n_full, k=k
        )
    else:
        q1, q2 = _split_invariant_basis(a, rho)
        # Inner Schur passes tidy the blocks: t becomes quasi-triangular and
        # n_block (all eigenvalues numerically zero) strictly triangular.
        t0, v = _real_schur(q1.T @ a @ q1)
        q1 = q1 @ v
        n0, w = _real_schur(q2.T @ a @ q2)
        q2 = q2 @ w
        dec = CoreEpDecomposition(
            u=np.hstack([q1, q2]),
            t=t0,
            s_block=q1.T @ a @ q2,
            n_block=n0,
            k=k,
        )

    _check_decomposition(a, dec, tol)
    return dec


def core_ep_via_decomposition(m, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> np.ndarray:
    """Core-EP inverse assembled as ``u @ [[t^-1, 0], [0, 0]] @ u.T``."""
    dec = core_ep_decompose(m, tol)
    n = dec.u.shape[0]
    rho = dec.rho
    core = np.zeros((n, n))
    if rho:
        try:
            core[:rho, :rho] = np.linalg.inv(dec.t)
        except np.linalg.LinAlgError as exc:
            raise NumericalFailureError(f"nonsingular block inversion failed: {exc}") from exc
    return dec.u @ core @ dec.u.T


def core_ep_via_formula(m, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> np.ndarray:
    """Core-EP inverse as ``A^k [(A^T)^k A^(k+1)]^+ (A^T)^k``.

    All-real route, no eigenvalue reordering; this is the default production
    path.  For index 0 it reduces to the ordinary inverse, for index <= 1 to
    the core inverse.
    """
    a = as_square(m)
    k = matrix_index(a, tol)
    ak, rho = _ranked_power(a, k, tol)
    if rho == 0:
        return np.zeros_like(a)  # nilpotent: empty nonsingular part
    inner = ak.T @ ak @ a  # (A^T)^k A^(k+1)
    return ak @ moore_penrose(inner, tol) @ ak.T


def core_inverse(m, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> np.ndarray:
    """Core inverse; defined only for matrices of index <= 1.

    For index <= 1 the core-EP inverse coincides with the core inverse, so the
    value is computed by :func:`core_ep_via_formula` and additionally verified
    against equation (1), ``A X A = A``.
    """
    a = as_square(m)
    k = matrix_index(a, tol)
    if k > 1:
        raise IndexTooLargeError(f"core inverse requires matrix index <= 1, got {k}")
    x = core_ep_via_formula(a, tol)
    residual = np.linalg.norm(a @ x @ a - a)
    if residual > tol.equality_tol * (1.0 + np.linalg.norm(a)):
        raise NumericalFailureError(
            f"core inverse failed its defining equation (residual {residual:.3e})"
        )
    return x


def in_column_space(m, y, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> bool:
    """Whether ``y`` lies in the column space of ``m``.

    Decided by the least-squares residual: true iff
    ``min_z ||m z - y|| <= residual_tol * max(1, ||y||)``.
    """
    a = as_matrix(m)
    v = as_vector(y, a.shape[0])
    try:
        z, *_ = np.linalg.lstsq(a, v, rcond=tol.rank_cutoff(a.shape))
    except np.linalg.LinAlgError as exc:
        raise NumericalFailureError(f"least-squares solve failed: {exc}") from exc
    residual = float(np.linalg.norm(a @ z - v))
    return residual <= tol.residual_tol * max(1.0, float(np.linalg.norm(v)))


def _singular_values(a: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.svd(a, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailureError(f"SVD failed: {exc}") from exc


def _rank_against_reference(p: np.ndarray, reference: float, tol: TolerancePolicy) -> int:
    """Rank of ``p``, treating it as zero when its norm is roundoff relative
    to ``reference`` (the natural scale of the expression that produced it)."""
    s = _singular_values(p)
    smax = float(s[0]) if s.size else 0.0
    if smax <= tol.rank_cutoff(p.shape) * reference:
        return 0
    return int(np.count_nonzero(s > tol.rank_cutoff(p.shape) * smax))


def _ranked_power(a: np.ndarray, k: int, tol: TolerancePolicy):
    """``(a**k, rank(a**k))`` with the rank judged against sigma_max(a)**k;
    a numerically-zero power snaps to the exact zero matrix."""
    ak = matrix_power(a, k)
    if k == 0:
        return ak, a.shape[0]
    reference = (k + 1) * float(_singular_values(a)[0]) ** k
    r = _rank_against_reference(ak, reference, tol)
    if r == 0:
        return np.zeros_like(ak), 0
    return ak, r


def _real_schur(a: np.ndarray):
    """Real Schur form ``a = u @ t @ u.T`` (t quasi-upper-triangular)."""
    if a.shape[0] == 0:
        return np.zeros((0, 0)), np.zeros((0, 0))
    try:
        t, u = scipy.linalg.schur(a, output="real")
    except (scipy.linalg.LinAlgError, ValueError) as exc:
        raise NumericalFailureError(f"Schur decomposition failed: {exc}") from exc
    return t, u


def _split_invariant_basis(a: np.ndarray, rho: int):
    """Real orthonormal bases (q1, q2) with span(q1) the invariant subspace
    of the ``rho`` largest-modulus eigenvalues and q2 its complement."""
    moduli = np.sort(np.abs(np.linalg.eigvals(a)))[::-1]
    hi, lo = moduli[rho - 1], moduli[rho]
    if hi <= lo:
        raise NumericalFailureError(
            "cannot separate zero from nonzero eigenvalues under the tolerance: "
            f"moduli {hi:.3e} and {lo:.3e} straddle the split"
        )
    theta = float(np.sqrt(hi * lo)) if lo > 0.0 else 0.5 * float(hi)
    try:
        _, u, sdim = scipy.linalg.schur(
            a.astype(complex), output="complex", sort=lambda lam: abs(lam) > theta
        )
    except (scipy.linalg.LinAlgError, ValueError) as exc:
        raise NumericalFailureError(f"ordered Schur decomposition failed: {exc}") from exc
    if sdim != rho:
        raise NumericalFailureError(
            f"eigenvalue reordering selected {sdim} eigenvalues where rank(m^k) = {rho}"
        )
    leading = u[:, :rho]
    # The selected eigenvalue set is closed under conjugation, so the span of
    # [Re, Im] is a real subspace of dimension exactly rho (singular values
    # are 1 with multiplicity rho and 0 otherwise).
    basis, sv, _ = np.linalg.svd(np.hstack([leading.real, leading.imag]))
    if sv[rho - 1] < 0.5:
        raise NumericalFailureError("invariant subspace could not be realified")
    return basis[:, :rho], basis[:, rho:]


def _check_decomposition(a: np.ndarray, dec: CoreEpDecomposition, tol: TolerancePolicy):
    scale = 1.0 + np.linalg.norm(a)
    if np.linalg.norm(dec.assemble() - a) > tol.equality_tol * scale:
        raise NumericalFailureError("block triangularization does not reconstruct the input")
    rho = dec.rho
    if rho:
        sv = _singular_values(dec.t)
        if sv[-1] <= tol.rank_cutoff(a.shape) * (_singular_values(a)[0]):
            raise NumericalFailureError(
                "nonsingular block is numerically singular under the rank cutoff"
            )
