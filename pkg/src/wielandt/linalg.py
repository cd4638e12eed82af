"""Dense Hermitian kernel: validated matrices, inner products, Cholesky and a
cyclic Jacobi eigensolver.

Everything works on plain numpy arrays. Real input stays real (float64),
anything else is promoted to complex128. Matrices accepted by
:func:`hermitian` are returned read-only so they can be shared freely.
"""

import numpy as np

from .errors import (
    DimensionError,
    EigFailure,
    NotHermitian,
    NotPositiveDefinite,
    WielandtError,
)

TOL_HERM = 1e-12
MAX_SWEEPS = 100


def _as_array(a):
    a = np.asarray(a)
    if a.dtype.kind in "biuf":
        a = a.astype(np.float64)
    elif a.dtype.kind == "c":
        a = a.astype(np.complex128)
    else:
        raise WielandtError(f"unsupported dtype {a.dtype}")
    if not np.all(np.isfinite(a)):
        raise WielandtError("non-finite entries")
    return a


def as_vector(v, n=None):
    """Validate a 1-d vector (optionally of length ``n``)."""
    v = _as_array(v)
    if v.ndim != 1 or v.size == 0:
        raise DimensionError(f"expected a non-empty 1-d vector, got shape {v.shape}")
    if n is not None and v.size != n:
        raise DimensionError(f"vector has length {v.size}, expected {n}")
    return v


def _freeze(a):
    a = np.array(a, copy=True)
    a.flags.writeable = False
    return a


def hermitian(H, tol=TOL_HERM):
    """Return ``H`` as a read-only Hermitian matrix.

    Asymmetry up to ``tol`` (relative to the largest entry) is treated as
    round-off and removed by averaging with the adjoint; anything larger
    raises :class:`NotHermitian`.
    """
    H = _as_array(H)
    if H.ndim != 2 or H.shape[0] != H.shape[1] or H.shape[0] == 0:
        raise DimensionError(f"expected a square matrix, got shape {H.shape}")
    scale = np.max(np.abs(H))
    asym = np.max(np.abs(H - H.conj().T))
    if asym > tol * max(scale, np.finfo(float).tiny):
        raise NotHermitian(f"asymmetry {asym:.3e} exceeds tolerance")
    H = 0.5 * (H + H.conj().T)
    if H.dtype.kind == "c" and not np.any(H.imag):
        H = H.real.copy()
    return _freeze(H)


def is_real(*arrays):
    return all(np.asarray(a).dtype.kind != "c" for a in arrays)


def inner(G, u, v):
    """Inner product ``<u, v>_G = v* G u`` (linear in the first argument)."""
    G = np.asarray(G)
    u = np.asarray(u)
    v = np.asarray(v)
    n = G.shape[0]
    if u.shape != (n,) or v.shape != (n,):
        raise DimensionError(
            f"vectors of shape {u.shape} and {v.shape} do not match a {n}x{n} form")
    z = complex(np.vdot(v, G @ u))
    return z


def norm(G, u):
    q = inner(G, u, u).real
    return float(np.sqrt(max(q, 0.0)))


def cholesky(G):
    """Lower-triangular ``L`` with ``L L* = G`` and positive real diagonal.

    Raises
    ------
    NotPositiveDefinite
        If a pivot drops to ``n * 1e-12 * max(diag(G))`` or below.
    """
    G = np.asarray(G)
    n = G.shape[0]
    dtype = np.float64 if is_real(G) else np.complex128
    L = np.zeros((n, n), dtype=dtype)
    floor = n * 1e-12 * max(np.max(np.real(np.diag(G))), 0.0)
    for j in range(n):
        row = L[j, :j]
        pivot = G[j, j].real - float(np.real(np.vdot(row, row)))
        if pivot <= floor:
            raise NotPositiveDefinite(f"pivot {pivot:.3e} at column {j}")
        d = np.sqrt(pivot)
        L[j, j] = d
        if j + 1 < n:
            L[j + 1:, j] = (G[j + 1:, j] - L[j + 1:, :j] @ row.conj()) / d
    return L


def solve_lower(L, B):
    """Forward substitution for ``L X = B`` with ``L`` lower triangular."""
    L = np.asarray(L)
    B = np.asarray(B)
    vec = B.ndim == 1
    if vec:
        B = B[:, None]
    X = np.zeros(B.shape, dtype=np.result_type(L, B, np.float64))
    for i in range(L.shape[0]):
        X[i] = (B[i] - L[i, :i] @ X[:i]) / L[i, i]
    return X[:, 0] if vec else X


def solve_upper(U, B):
    """Back substitution for ``U X = B`` with ``U`` upper triangular."""
    U = np.asarray(U)
    B = np.asarray(B)
    vec = B.ndim == 1
    if vec:
        B = B[:, None]
    X = np.zeros(B.shape, dtype=np.result_type(U, B, np.float64))
    for i in range(U.shape[0] - 1, -1, -1):
        X[i] = (B[i] - U[i, i + 1:] @ X[i + 1:]) / U[i, i]
    return X[:, 0] if vec else X


def _off(A):
    return np.linalg.norm(A - np.diag(np.diag(A)))


def herm_eig(H, max_sweeps=MAX_SWEEPS):
    """Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Parameters
    ----------
    H : array_like, (n, n)
        Hermitian matrix (validated with :func:`hermitian`).
    max_sweeps : int
        Sweep cap before :class:`EigFailure` is raised.

    Returns
    -------
    evals : ndarray, (n,)
        Eigenvalues in ascending order. Ties keep the original column order.
    evecs : ndarray, (n, n)
        Orthonormal eigenvectors as columns.
    """
    A = np.array(hermitian(H))
    n = A.shape[0]
    V = np.eye(n, dtype=A.dtype)
    target = 1e-13 * np.linalg.norm(A)
    for _ in range(max_sweeps):
        if _off(A) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                h = A[p, q]
                ah = abs(h)
                if ah == 0.0:
                    continue
                theta = (A[q, q].real - A[p, p].real) / (2.0 * ah)
                t = np.copysign(1.0, theta) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.hypot(t, 1.0)
                s = t * c
                phase = np.conj(h) / ah
                J = np.array([[c, s], [-s * phase, c * phase]], dtype=A.dtype)
                idx = [p, q]
                A[:, idx] = A[:, idx] @ J
                A[idx, :] = J.conj().T @ A[idx, :]
                A[p, q] = A[q, p] = 0.0
                V[:, idx] = V[:, idx] @ J
    if _off(A) > target:
        raise EigFailure(f"no convergence after {max_sweeps} sweeps")
    evals = np.real(np.diag(A)).copy()
    order = np.argsort(evals, kind="stable")
    return evals[order], V[:, order]
