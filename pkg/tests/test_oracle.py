import dataclasses

import numpy as np
import pytest

from wielandt.angles import full_report, half_tan
from wielandt.errors import RangeError
from wielandt.oracle import (
    OracleConfig,
    batch_angles,
    default_threads,
    hexagon_min,
    make_rng,
    random_pair,
    random_unit_vectors,
    random_vectors,
    ratio_extremes,
    run_suite,
)
from wielandt.spectrum import analyze

FAST = OracleConfig(seed=42, trials=300, grid_steps=128)


def test_rng_streams_are_keyed():
    a = make_rng(42, 1).standard_normal(4)
    assert np.array_equal(a, make_rng(42, 1).standard_normal(4))
    assert not np.array_equal(a, make_rng(42, 2).standard_normal(4))


def test_random_unit_vectors():
    X = random_unit_vectors(make_rng(0), 5, 100)
    np.testing.assert_allclose(np.linalg.norm(X, axis=1), 1.0, atol=1e-14)
    assert np.iscomplexobj(X)
    assert not np.iscomplexobj(random_vectors(make_rng(0), 5, 3, complex_=False))


def test_batch_angles_match_scalar(fix_b):
    pair, _ = fix_b
    rng = make_rng(3)
    U, V = random_vectors(rng, 2, 20, False), random_vectors(rng, 2, 20, False)
    out = batch_angles(pair.G2, U, V)
    for k in range(20):
        rep = full_report(pair, U[k], V[k])
        assert out["cos"][k] == pytest.approx(rep.cos_psi, abs=1e-12)
        assert out["cos_line"][k] == pytest.approx(rep.cos_Psi, abs=1e-12)
        assert out["tan_half"][k] == pytest.approx(half_tan(pair.G2, U[k], V[k]), rel=1e-10)
        assert out["tan_half_line"][k] == pytest.approx(np.tan(rep.Psi / 2), rel=1e-10)


def test_default_threads_env(monkeypatch):
    monkeypatch.setenv("WIELANDT_THREADS", "3")
    assert default_threads() == 3
    monkeypatch.delenv("WIELANDT_THREADS")
    assert default_threads() >= 1


def test_config_validation():
    with pytest.raises(ValueError):
        OracleConfig(trials=0)
    with pytest.raises(ValueError):
        OracleConfig(grid_steps=4)


def test_ratio_extremes_fix_a(fix_a):
    pair, spec = fix_a
    rep = ratio_extremes(spec, pair, OracleConfig(seed=42, trials=2000, grid_steps=256))
    assert rep.empirical_max_ratio == pytest.approx(2.0, abs=1e-3)
    assert rep.empirical_min_ratio == pytest.approx(0.5, abs=1e-3)
    assert not rep.violations
    assert rep.seed == 42


def test_ratio_extremes_fix_b(fix_b):
    pair, spec = fix_b
    rep = ratio_extremes(spec, pair, FAST)
    assert rep.empirical_max_ratio == pytest.approx((3 + np.sqrt(5)) / 2, abs=1e-3)


def test_ratio_extremes_proportional(proportional):
    pair, spec = proportional
    rep = ratio_extremes(spec, pair, FAST)
    assert rep.empirical_max_ratio == pytest.approx(1.0, abs=1e-12)
    assert rep.empirical_min_ratio == pytest.approx(1.0, abs=1e-12)


def test_ratio_extremes_detects_corruption(fix_a):
    pair, spec = fix_a
    bad = dataclasses.replace(spec, m=spec.m * 1.1)
    rep = ratio_extremes(bad, pair, FAST)
    assert any(v["bound"] == "TAN upper" for v in rep.violations)


def test_grid_refinement_moves_toward_kappa(rand_pair):
    pair, spec = rand_pair
    prev = None
    for steps in (16, 32, 64):
        rep = ratio_extremes(spec, pair, OracleConfig(seed=1, trials=200, grid_steps=steps))
        gap = spec.kappa - rep.empirical_max_ratio
        assert gap >= -1e-9 * spec.kappa
        if prev is not None:
            assert gap <= prev + 1e-6
        prev = gap


@pytest.mark.parametrize("mu", [0.0, 1 / 3, 0.9])
def test_hexagon_min(mu):
    val, (x, y) = hexagon_min(mu, 601)
    assert val == pytest.approx(-mu**2, abs=1e-4)
    if mu > 0:
        assert abs(x) == pytest.approx(mu, abs=0.01) and x * y < 0


def test_hexagon_range():
    with pytest.raises(RangeError):
        hexagon_min(1.0)


def test_suite_passes_on_fixtures(fix_a, fix_b, proportional):
    for pair, spec in (fix_a, fix_b, proportional):
        rep = run_suite(pair, FAST, spec)
        assert rep.passed, rep.violations


def test_suite_passes_on_random_pairs(rand_pair):
    pair, _ = rand_pair
    rep = run_suite(pair, FAST)
    assert rep.passed, [r.as_dict() for r in rep.results if not r.passed]


def test_suite_detects_inflated_m(fix_a):
    pair, spec = fix_a
    rep = run_suite(pair, FAST, dataclasses.replace(spec, m=spec.m * 1.1))
    assert not rep.passed
    assert "bounds.TAN" in rep.violations


def test_suite_is_deterministic_across_threads(fix_b):
    pair, _ = fix_b
    one = run_suite(pair, dataclasses.replace(FAST, threads=1)).as_dict()
    four = run_suite(pair, dataclasses.replace(FAST, threads=4)).as_dict()
    assert one == four


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_suite_reports_instead_of_raising(fix_a):
    pair, spec = fix_a
    broken = dataclasses.replace(spec, Vm_basis=np.zeros((2, 0)))
    rep = run_suite(pair, FAST, broken)
    assert not rep.passed
    assert any(r.note for r in rep.results if not r.passed)


def test_random_pair_is_valid():
    for n in (2, 5, 16):
        pair = random_pair(make_rng(n), n, True)
        spec = analyze(pair)
        assert spec.kappa <= np.exp(4.0) + 1e-9
