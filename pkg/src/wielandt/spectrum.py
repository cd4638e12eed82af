"""Spectral structure of a pair of inner products.

The pair is held as two Gram matrices ``G1``, ``G2`` with
``<u, v>_j = v* G_j u``. All norm-ratio extremes come from the pencil
``G2 x = sigma G1 x``: ``m`` and ``M`` are the square roots of its smallest and
largest eigenvalues, and ``V_m``/``V_M`` are the matching eigenspaces.
"""

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import DependentVectors, DimensionError, NotPositiveDefinite, ZeroVector

TOL_MEMBER = 1e-8
DEGENERATE_GAP = 1e-10


@dataclass(frozen=True)
class GramPair:
    """Two positive-definite Gram matrices on the same space.

    ``source_matrix`` is set when the pair was built from an invertible
    matrix ``A`` (``G1 = I`` and ``G2 = A* A``).
    """

    G1: np.ndarray
    G2: np.ndarray
    source_matrix: np.ndarray | None = field(default=None, compare=False)

    def __post_init__(self):
        G1 = linalg.hermitian(self.G1)
        G2 = linalg.hermitian(self.G2)
        if G1.shape != G2.shape:
            raise DimensionError(f"Gram matrices {G1.shape} and {G2.shape} differ in size")
        linalg.cholesky(G1)
        linalg.cholesky(G2)
        object.__setattr__(self, "G1", G1)
        object.__setattr__(self, "G2", G2)

    @property
    def n(self):
        return self.G1.shape[0]

    @property
    def is_real(self):
        return linalg.is_real(self.G1, self.G2)

    def inner1(self, u, v):
        return linalg.inner(self.G1, u, v)

    def inner2(self, u, v):
        return linalg.inner(self.G2, u, v)

    def norm1(self, u):
        return linalg.norm(self.G1, u)

    def norm2(self, u):
        return linalg.norm(self.G2, u)


def pair_from_matrix(A):
    """Pair ``<x, y>_1 = y* x`` and ``<x, y>_2 = (Ay)* (Ax)``."""
    A = linalg._as_array(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {A.shape}")
    G2 = A.conj().T @ A
    G2 = 0.5 * (G2 + G2.conj().T)
    try:
        linalg.cholesky(G2)
    except NotPositiveDefinite as exc:
        raise NotPositiveDefinite(f"matrix is singular to working precision ({exc})") from None
    G1 = np.eye(A.shape[0], dtype=A.dtype)
    A = linalg._freeze(A)
    return GramPair(G1, G2, source_matrix=A)


@dataclass(frozen=True)
class SpectralData:
    pencil_evals: np.ndarray
    pencil_basis: np.ndarray
    m: float
    M: float
    Vm_basis: np.ndarray
    VM_basis: np.ndarray
    tol_member: float = TOL_MEMBER

    @property
    def kappa(self):
        return self.M / self.m

    @property
    def chi(self):
        return (self.M**2 - self.m**2) / (self.M**2 + self.m**2)

    @property
    def mu(self):
        return (self.M - self.m) / (self.M + self.m)

    @property
    def degenerate(self):
        """True when the two inner products are proportional (``m == M``)."""
        return self.M - self.m <= DEGENERATE_GAP * self.M

    def summary(self):
        return {"m": self.m, "M": self.M, "kappa": self.kappa,
                "chi": self.chi, "mu": self.mu}


def analyze(pair, tol_member=TOL_MEMBER):
    """Solve the pencil ``(G2, G1)`` by Cholesky reduction.

    ``G1 = L L*`` turns the pencil into the ordinary Hermitian problem for
    ``L^-1 G2 L^-*``; its eigenvectors mapped back through ``L^-*`` are
    ``G1``-orthonormal.
    """
    L = linalg.cholesky(pair.G1)
    X = linalg.solve_lower(L, pair.G2)
    C = linalg.solve_lower(L, X.conj().T)
    C = 0.5 * (C + C.conj().T)
    sigma, Y = linalg.herm_eig(C)
    basis = linalg.solve_upper(L.conj().T, Y)
    sigma = np.maximum(sigma, 0.0)
    if sigma[0] <= 0.0:
        raise NotPositiveDefinite("pencil has a non-positive eigenvalue")

    m, M = float(np.sqrt(sigma[0])), float(np.sqrt(sigma[-1]))
    if M - m <= DEGENERATE_GAP * M:
        m = M = float(np.sqrt(np.sqrt(sigma[0] * sigma[-1])))
        Vm = VM = basis
    else:
        Vm = basis[:, sigma <= sigma[0] * (1 + tol_member)]
        VM = basis[:, sigma >= sigma[-1] * (1 - tol_member)]
    return SpectralData(
        pencil_evals=linalg._freeze(sigma),
        pencil_basis=linalg._freeze(basis),
        m=m,
        M=M,
        Vm_basis=linalg._freeze(Vm),
        VM_basis=linalg._freeze(VM),
        tol_member=tol_member,
    )


@dataclass(frozen=True)
class DoubleBasis:
    b: np.ndarray
    B: np.ndarray
    n_small: float
    N_big: float


def _check_nonzero(pair, *vectors):
    out = []
    for v in vectors:
        v = linalg.as_vector(v, pair.n)
        if pair.norm1(v) == 0.0:
            raise ZeroVector("zero vector")
        out.append(v)
    return out


def double_basis(spec, pair, u, v):
    """Basis ``{b, B}`` of the real plane through ``u`` and ``v`` that is
    orthogonal for both (real parts of the) inner products.

    ``b`` and ``B`` are unit in the first norm; ``n_small = |b|_2`` and
    ``N_big = |B|_2`` with ``n_small <= N_big``. For real input the plane is
    the ordinary span.
    """
    u, v = _check_nonzero(pair, u, v)
    nu, nv = pair.norm1(u), pair.norm1(v)
    c = pair.inner1(v, u).real
    if nu**2 * nv**2 - c**2 <= 1e-12 * nu**2 * nv**2:
        raise DependentVectors("u and v span a line")
    e1 = u / nu
    f = v - pair.inner1(v, e1).real * e1
    e2 = f / pair.norm1(f)
    E = np.column_stack([e1, e2])
    S = np.array([[pair.inner2(E[:, j], E[:, i]).real for j in range(2)] for i in range(2)])
    s, Y = linalg.herm_eig(S)
    s = np.maximum(s, 0.0)
    b, B = E @ Y[:, 0], E @ Y[:, 1]
    return DoubleBasis(b=b, B=B, n_small=float(np.sqrt(s[0])), N_big=float(np.sqrt(s[1])))


@dataclass(frozen=True)
class EMembership:
    w: np.ndarray
    W: np.ndarray
    residual_m: float
    residual_M: float
    is_member: bool


def _residual(pair, basis, x, scale):
    nx = pair.norm1(x)
    if nx <= 1e-13 * scale:
        return 0.0
    coeffs = basis.conj().T @ (pair.G1 @ x)
    r = x - basis @ coeffs
    return pair.norm1(r) / nx


def e_membership(spec, pair, u, v, which_norm=1):
    """Test whether ``(u, v)`` lies in the equality set ``E``.

    ``u`` and ``v`` are normalised in norm ``which_norm``; the normalised sum
    must lie in ``V_m`` and the difference in ``V_M``. Residuals are relative
    distances (first norm) to the respective eigenspaces, with an exactly
    vanishing sum or difference counting as a member.
    """
    if which_norm not in (1, 2):
        raise ValueError("which_norm must be 1 or 2")
    u, v = _check_nonzero(pair, u, v)
    norm = pair.norm1 if which_norm == 1 else pair.norm2
    uh, vh = u / norm(u), v / norm(v)
    w, W = uh + vh, uh - vh
    scale = pair.norm1(uh) + pair.norm1(vh)
    rm = _residual(pair, spec.Vm_basis, w, scale)
    rM = _residual(pair, spec.VM_basis, W, scale)
    ok = rm <= spec.tol_member and rM <= spec.tol_member
    return EMembership(w=w, W=W, residual_m=rm, residual_M=rM, is_member=bool(ok))
