import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wielandt import linalg
from wielandt.errors import DimensionError, EigFailure, NotHermitian, NotPositiveDefinite, WielandtError
from wielandt.oracle import make_rng, random_pd, random_vectors

seeds = st.integers(0, 2**32 - 1)
dims = st.integers(2, 16)


def _random_herm(rng, n, cplx):
    X = rng.standard_normal((n, n))
    if cplx:
        X = X + 1j * rng.standard_normal((n, n))
    return 0.5 * (X + X.conj().T)


# --- inner products ------------------------------------------------------

def test_inner_examples():
    e1, e2 = np.eye(2)
    assert linalg.inner(np.eye(2), e1, e2) == 0
    assert linalg.inner(np.diag([1.0, 4.0]), e2, e2) == 4
    assert linalg.inner(np.eye(2), e1, 1j * e1) == pytest.approx(-1j)


def test_inner_dimension_mismatch():
    with pytest.raises(DimensionError):
        linalg.inner(np.eye(2), np.ones(3), np.ones(2))


@given(seeds, dims)
def test_inner_conjugate_symmetric_and_linear(seed, n):
    rng = make_rng(seed)
    G = random_pd(rng, n)
    u, v, w = random_vectors(rng, n, 3)
    a, b = 0.7 - 1.3j, -2.1 + 0.4j
    scale = np.linalg.norm(G) * (np.linalg.norm(u) + np.linalg.norm(w)) * np.linalg.norm(v) * 4
    assert abs(linalg.inner(G, v, u) - np.conj(linalg.inner(G, u, v))) <= 1e-13 * scale
    lhs = linalg.inner(G, a * u + b * w, v)
    rhs = a * linalg.inner(G, u, v) + b * linalg.inner(G, w, v)
    assert abs(lhs - rhs) <= 1e-13 * scale
    assert linalg.inner(G, u, u).imag == pytest.approx(0.0, abs=1e-13 * scale)


# --- validation ----------------------------------------------------------

def test_hermitian_symmetrizes_roundoff():
    H = np.array([[1.0, 2.0], [2.0 + 1e-14, 3.0]])
    out = linalg.hermitian(H)
    assert out[0, 1] == out[1, 0]
    assert not out.flags.writeable


def test_hermitian_rejects_asymmetric():
    with pytest.raises(NotHermitian):
        linalg.hermitian(np.array([[1.0, 2.0], [2.1, 3.0]]))


def test_hermitian_drops_zero_imaginary_part():
    assert linalg.hermitian(np.eye(2, dtype=complex)).dtype == np.float64


@pytest.mark.parametrize("bad", [np.ones((2, 3)), np.ones(3), np.zeros((0, 0))])
def test_hermitian_rejects_bad_shapes(bad):
    with pytest.raises(DimensionError):
        linalg.hermitian(bad)


def test_non_finite_rejected():
    with pytest.raises(WielandtError):
        linalg.hermitian(np.array([[1.0, np.nan], [np.nan, 1.0]]))


# --- cholesky ------------------------------------------------------------

@pytest.mark.parametrize("G, L", [
    (np.eye(2), np.eye(2)),
    (np.diag([1.0, 4.0]), np.diag([1.0, 2.0])),
    ([[2.0, 1.0], [1.0, 2.0]], [[np.sqrt(2), 0.0], [1 / np.sqrt(2), np.sqrt(1.5)]]),
])
def test_cholesky_examples(G, L):
    np.testing.assert_allclose(linalg.cholesky(np.array(G)), L, atol=1e-15)


@given(seeds, dims, st.booleans())
def test_cholesky_round_trip(seed, n, cplx):
    G = random_pd(make_rng(seed), n, cplx)
    L = linalg.cholesky(G)
    assert np.all(np.triu(L, 1) == 0)
    assert np.all(np.real(np.diag(L)) > 0) and not np.any(np.imag(np.diag(L)))
    assert np.linalg.norm(L @ L.conj().T - G) <= 1e-10 * np.linalg.norm(G)
    # numpy as an independent reference
    np.testing.assert_allclose(L, np.linalg.cholesky(G), atol=1e-10 * np.linalg.norm(G))


@pytest.mark.parametrize("G", [
    [[1.0, 2.0], [2.0, 1.0]],
    [[1.0, 1.0], [1.0, 1.0]],
    [[0.0, 0.0], [0.0, 1.0]],
])
def test_cholesky_rejects_non_pd(G):
    with pytest.raises(NotPositiveDefinite):
        linalg.cholesky(np.array(G))


@given(seeds, st.integers(1, 10))
def test_triangular_solves(seed, n):
    rng = make_rng(seed)
    G = random_pd(rng, n)
    L = linalg.cholesky(G)
    B = random_vectors(rng, n, 3).T
    X = linalg.solve_lower(L, B)
    np.testing.assert_allclose(L @ X, B, atol=1e-10 * np.abs(B).max())
    Y = linalg.solve_upper(L.conj().T, B[:, 0])
    np.testing.assert_allclose(L.conj().T @ Y, B[:, 0], atol=1e-10 * np.abs(B).max())


# --- eigensolver ---------------------------------------------------------

def test_herm_eig_examples():
    lam, Q = linalg.herm_eig(np.diag([1.0, 4.0]))
    np.testing.assert_array_equal(lam, [1.0, 4.0])
    np.testing.assert_array_equal(np.abs(Q), np.eye(2))

    lam, _ = linalg.herm_eig(np.array([[1.0, 1.0], [1.0, 2.0]]))
    np.testing.assert_allclose(lam, [(3 - np.sqrt(5)) / 2, (3 + np.sqrt(5)) / 2], atol=1e-14)

    lam, Q = linalg.herm_eig(4 * np.eye(2))
    np.testing.assert_array_equal(lam, [4.0, 4.0])
    np.testing.assert_allclose(Q.conj().T @ Q, np.eye(2), atol=1e-15)


def test_herm_eig_random_reconstruction():
    """200 random Hermitian matrices, dims 2..16, real and complex."""
    rng = make_rng(7, 0)
    worst_rec = worst_res = worst_orth = 0.0
    for trial in range(200):
        n = int(rng.integers(2, 17))
        H = _random_herm(rng, n, trial % 2 == 1)
        lam, Q = linalg.herm_eig(H)
        nH = np.linalg.norm(H)
        assert np.all(np.diff(lam) >= 0)
        worst_rec = max(worst_rec, np.linalg.norm(Q @ np.diag(lam) @ Q.conj().T - H) / nH)
        worst_res = max(worst_res, np.max(np.linalg.norm(H @ Q - Q * lam, axis=0)) / nH)
        worst_orth = max(worst_orth, np.max(np.abs(Q.conj().T @ Q - np.eye(n))))
        np.testing.assert_allclose(lam, np.linalg.eigvalsh(H), atol=1e-12 * nH)
    assert worst_rec <= 1e-9
    assert worst_res <= 1e-10
    assert worst_orth <= 1e-12


def test_herm_eig_ties_keep_column_order():
    lam, Q = linalg.herm_eig(np.diag([3.0, 1.0, 3.0]))
    np.testing.assert_array_equal(lam, [1.0, 3.0, 3.0])
    np.testing.assert_array_equal(Q, np.eye(3)[:, [1, 0, 2]])


def test_herm_eig_sweep_cap():
    H = _random_herm(make_rng(1), 6, True)
    with pytest.raises(EigFailure):
        linalg.herm_eig(H, max_sweeps=1)
