"""Acceptance gate: ten end-to-end criteria at their stated tolerances.

Each test prints one ``PASS``/``FAIL`` line (also collected into the
terminal summary) and then asserts, so a failure is both visible and fatal.
"""

import os
import time

import numpy as np

from conftest import ACCEPTANCE_LINES, DATA
from wielandt import bounds, extremal
from wielandt.angles import full_report, half_tan
from wielandt.cli import main
from wielandt.oracle import (
    OracleConfig,
    batch_angles,
    hexagon_min,
    make_rng,
    random_pair,
    random_pd,
    random_vectors,
    ratio_extremes,
)
from wielandt.spectrum import GramPair, analyze, double_basis, e_membership


def report(num, ok, detail, t0):
    line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}  ({time.perf_counter() - t0:.1f}s)"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def _pairs(dims, per_dim, seed, cplx_every=2):
    for n in dims:
        for k in range(per_dim):
            pair = random_pair(make_rng(seed, n, k), n, k % cplx_every == 0)
            yield pair, analyze(pair)


# 1 ---------------------------------------------------------------------------

def test_01_fixture_exactness():
    t0 = time.perf_counter()
    pair = GramPair(np.eye(2), np.diag([1.0, 4.0]))
    spec = analyze(pair)
    got = np.array([spec.m, spec.M, spec.kappa, spec.chi, spec.mu])
    want = np.array([1.0, 2.0, 2.0, 3 / 5, 1 / 3])
    err_spec = np.max(np.abs(got - want))
    u = np.array([1.0, 1.0]) / np.sqrt(2)
    v = np.array([1.0, -1.0]) / np.sqrt(2)
    rep = full_report(pair, u, v)
    t2, t1 = half_tan(pair.G2, u, v), half_tan(pair.G1, u, v)
    err_pair = max(abs(rep.cos_psi + 3 / 5), abs(t2 - 2.0), abs(t2 - spec.kappa * t1))
    member = e_membership(spec, pair, u, v).is_member
    ok = err_spec <= 1e-12 and err_pair <= 1e-10 and member
    report(1, ok, f"constants err {err_spec:.1e} (<=1e-12), pair err {err_pair:.1e} (<=1e-10), (u,v) in E: {member}", t0)


# 2 ---------------------------------------------------------------------------

def test_02_wielandt_sharpness():
    t0 = time.perf_counter()
    worst_excess, worst_attain = -np.inf, 0.0
    for n in range(2, 9):
        for cplx in (False, True):
            pair = random_pair(make_rng(2, n, int(cplx)), n, cplx)
            spec = analyze(pair)
            rng = make_rng(20, n, int(cplx))
            U = random_vectors(rng, n, 1000, cplx)
            V = random_vectors(rng, n, 1000, cplx)
            # remove the first-product component of v along u
            G1, G2 = pair.G1, pair.G2
            c = np.einsum("ij,ij->i", U.conj(), V @ G1.T) / np.einsum("ij,ij->i", U.conj(), U @ G1.T).real
            V = V - c[:, None] * U
            ip1 = np.abs(np.einsum("ij,ij->i", V.conj(), U @ G1.T))
            n1 = np.sqrt(np.einsum("ij,ij->i", U.conj(), U @ G1.T).real * np.einsum("ij,ij->i", V.conj(), V @ G1.T).real)
            assert np.max(ip1 / n1) <= 1e-12
            cos2 = batch_angles(G2, U, V)["cos_line"]
            worst_excess = max(worst_excess, np.max(cos2) - spec.chi)
            ep = extremal.construct_main(spec, pair, np.pi / 2, "right")
            attained = full_report(pair, ep.u, ep.v).cos_Psi
            worst_attain = max(worst_attain, abs(attained - spec.chi))
    ok = worst_excess <= 1e-9 and worst_attain <= 1e-10
    report(2, ok, f"max(|cos Psi| - chi) = {worst_excess:.2e} (<=1e-9), constructed |cos Psi - chi| = {worst_attain:.1e} (<=1e-10)", t0)


# 3 ---------------------------------------------------------------------------

def test_03_tan_validity_and_oracle_extremes():
    t0 = time.perf_counter()
    cfg = OracleConfig(seed=42, trials=1000, grid_steps=256)
    violations, worst_gap, pairs = 0, 0.0, 0
    for pair, spec in _pairs((2, 3, 4, 8, 16), 10, 42):
        pairs += 1
        rng = make_rng(3, pair.n, pairs)
        cplx = not pair.is_real
        U = random_vectors(rng, pair.n, 1000, cplx)
        V = random_vectors(rng, pair.n, 1000, cplx)
        a1, a2 = batch_angles(pair.G1, U, V), batch_angles(pair.G2, U, V)
        r = spec.M / spec.m
        for key in ("tan_half", "tan_half_line"):
            t1, t2 = a1[key], a2[key]
            lo, hi = t1 / r, t1 * r
            tol_lo = 1e-9 * np.maximum(1.0, np.abs(lo))
            tol_hi = 1e-9 * np.maximum(1.0, np.abs(hi))
            violations += int(np.sum((t2 < lo - tol_lo) | (t2 > hi + tol_hi)))
        rep = ratio_extremes(spec, pair, cfg, task=pairs)
        violations += len(rep.violations)
        gap = max(abs(rep.empirical_max_ratio - spec.kappa), abs(rep.empirical_min_ratio - 1 / spec.kappa))
        worst_gap = max(worst_gap, gap)
    ok = violations == 0 and worst_gap <= 1e-3 and pairs == 50
    report(3, ok, f"{pairs} pairs x 1000 vectors: {violations} TAN/TAN2 violations (tol 1e-9), "
                  f"oracle |extreme - kappa^(+-1)| <= {worst_gap:.1e} (<=1e-3)", t0)


# 4 ---------------------------------------------------------------------------

def test_04_equality_both_directions():
    t0 = time.perf_counter()
    fixtures = [GramPair(np.eye(2), np.diag([1.0, 4.0])),
                GramPair(np.eye(2), np.array([[1.0, 1.0], [1.0, 2.0]]))]
    fixtures += [p for p, _ in _pairs((3, 4, 8), 2, 4)]
    worst_ratio, worst_margin, bad_class, checked = 0.0, np.inf, 0, 0
    for pair in fixtures:
        spec = analyze(pair)
        for phi in np.linspace(0.1, 3.0, 15):
            for side in ("right", "left"):
                ep = extremal.construct_main(spec, pair, phi, side)
                cl = extremal.classify(spec, pair, ep.u, ep.v)
                want = spec.kappa if side == "right" else 1 / spec.kappa
                worst_ratio = max(worst_ratio, abs(ep.achieved_ratio - want) / want)
                bad_class += not (cl.main_right if side == "right" else cl.main_left)
                # 1e-3 in-plane nudge of v, perpendicular to v: leaves E
                d = ep.u - pair.inner1(ep.u, ep.v).real / pair.norm1(ep.v) ** 2 * ep.v
                v2 = ep.v + 1e-3 * pair.norm1(ep.v) / pair.norm1(d) * d
                c2 = extremal.classify(spec, pair, ep.u, v2)
                bad_class += c2.main_right or c2.main_left
                ratio = half_tan(pair.G2, ep.u, v2) / half_tan(pair.G1, ep.u, v2)
                margin = spec.kappa - ratio if side == "right" else ratio - 1 / spec.kappa
                # compare on the kappa scale for both sides
                margin = margin if side == "right" else spec.kappa - 1 / ratio
                worst_margin = min(worst_margin, margin)
                checked += 1
    ok = worst_ratio <= 1e-9 and bad_class == 0 and worst_margin >= 1e-7
    report(4, ok, f"{checked} constructions: ratio rel err {worst_ratio:.1e} (<=1e-9), "
                  f"misclassified {bad_class}, perturbed margin >= {worst_margin:.2e} (>=1e-7)", t0)


# 5 ---------------------------------------------------------------------------

def test_05_kolotilina():
    t0 = time.perf_counter()
    B = np.diag([4.0, 1.0])
    worst = 0.0
    for c in (0.0, 0.3, 0.6, 0.9):
        x, y = extremal.construct_kolotilina(B, c)
        lhs, rhs = extremal.kolotilina_sides(B, x, y)
        worst = max(worst, abs(lhs - rhs) / rhs)
    x, y = extremal.construct_kolotilina(B, 0.6)
    exact = abs(abs(np.vdot(y, B @ x)) - 3.0)
    ok = worst <= 1e-9 and exact <= 1e-12
    report(5, ok, f"sides rel diff {worst:.1e} (<=1e-9), |y*Bx| - 3 = {exact:.1e} at cos 0.6 (<=1e-12)", t0)


# 6 ---------------------------------------------------------------------------

def test_06_dominance_chain():
    t0 = time.perf_counter()
    rng = make_rng(6)
    failures = 0
    for _ in range(1000):
        m, M = np.sort(np.exp(rng.uniform(-3.0, 3.0, 2)))
        spec = analyze(GramPair(np.eye(2), np.diag([m * m, M * M])))
        d_lo, d_hi = bounds.dragomir_reference_bounds(spec)
        r_lo, _ = bounds.difference_bounds(spec, "Regen")
        a_lo, a_hi = bounds.difference_bounds(spec, "AbsGen")
        strict = spec.m < spec.M
        chain = (d_lo < r_lo < a_lo and a_hi < d_hi) if strict else (d_lo <= r_lo <= a_lo and a_hi <= d_hi)
        c = rng.uniform(0.0, 1.0 / spec.kappa**2)
        applicable, yeh = bounds.yeh_bound(spec, c)
        ours = bounds.cos_interval(spec, c)[1]
        failures += (not chain) or (not applicable) or yeh < ours - 1e-15
    spec = analyze(GramPair(np.eye(2), np.diag([1.0, 4.0])))
    applicable, yeh = bounds.yeh_bound(spec, 0.25)
    ours = bounds.cos_interval(spec, 0.25)[1]
    fix_err = max(abs(yeh - 1.0), abs(ours - 17 / 23))
    ok = failures == 0 and applicable and fix_err <= 1e-12
    report(6, ok, f"1000 spectra: {failures} chain/Yeh failures; FIX-A Yeh={yeh:.15g} ours={ours:.15g} "
                  f"(err {fix_err:.1e}, <=1e-12)", t0)


# 7 ---------------------------------------------------------------------------

def test_07_yan_identity():
    t0 = time.perf_counter()
    rng = make_rng(7)
    worst = 0.0
    grid = np.linspace(0.0, 1.0, 100)
    for _ in range(200):
        lam = np.exp(rng.uniform(-3.0, 3.0, int(rng.integers(2, 11))))
        for c in grid:
            worst = max(worst, abs(bounds.yan_bound(lam, c) - bounds.yan_closed_form(lam, c)))
    # the inequality itself on complex data
    excess = -np.inf
    for n in (2, 3, 5, 8):
        B = random_pd(make_rng(70, n), n, True)
        lam = np.linalg.eigvalsh(B)
        r = make_rng(71, n)
        X, Y = random_vectors(r, n, 2000, True), random_vectors(r, n, 2000, True)
        cosP = np.abs(np.einsum("ij,ij->i", Y.conj(), X)) / (np.linalg.norm(X, axis=1) * np.linalg.norm(Y, axis=1))
        lhs = np.abs(np.einsum("ij,ij->i", Y.conj(), X @ B.T))
        nx = np.sqrt(np.einsum("ij,ij->i", X.conj(), X @ B.T).real)
        ny = np.sqrt(np.einsum("ij,ij->i", Y.conj(), Y @ B.T).real)
        bound = np.array([bounds.yan_closed_form(lam, c) for c in np.clip(cosP, 0, 1)])
        excess = max(excess, np.max(lhs / (nx * ny) - bound))
    ok = worst <= 1e-12 and excess <= 1e-9
    report(7, ok, f"brute vs closed form max diff {worst:.1e} (<=1e-12); complex trials max excess {excess:.2e} (<=1e-9)", t0)


# 8 ---------------------------------------------------------------------------

def test_08_cos_product_floor():
    t0 = time.perf_counter()
    hex_err = max(abs(hexagon_min(mu, 601)[0] + mu**2) for mu in np.round(np.arange(0.0, 0.95, 0.1), 10))
    dip = np.inf
    for pair, spec in _pairs((2, 3, 4, 8), 3, 8):
        rng = make_rng(80, pair.n)
        cplx = not pair.is_real
        U, V = random_vectors(rng, pair.n, 2000, cplx), random_vectors(rng, pair.n, 2000, cplx)
        prod = batch_angles(pair.G1, U, V)["cos"] * batch_angles(pair.G2, U, V)["cos"]
        dip = min(dip, np.min(prod) + spec.mu**2)
    ls = abs(bounds.ls_floor(np.eye(2), np.diag([1.0, 4.0])) + 1 / 9)
    ok = hex_err <= 1e-4 and dip >= -1e-9 and ls <= 1e-12
    report(8, ok, f"hexagon err {hex_err:.1e} (<=1e-4), min(cos*cos + mu^2) = {dip:.2e} (>=-1e-9), "
                  f"ls_floor err {ls:.1e} (<=1e-12)", t0)


# 9 ---------------------------------------------------------------------------

def test_09_structural_invariants():
    t0 = time.perf_counter()
    worst_orth, worst_sin, disagree, tested = 0.0, 0.0, 0, 0
    for pair, spec in _pairs((2, 3, 4, 8, 16), 3, 9):
        rng = make_rng(90, pair.n)
        cplx = not pair.is_real
        for _ in range(20):
            w = spec.Vm_basis @ random_vectors(rng, spec.Vm_basis.shape[1], 1, cplx)[0]
            W = spec.VM_basis @ random_vectors(rng, spec.VM_basis.shape[1], 1, cplx)[0]
            for ip, nm in ((pair.inner1, pair.norm1), (pair.inner2, pair.norm2)):
                worst_orth = max(worst_orth, abs(ip(w, W)) / (nm(w) * nm(W)))
            for u, v in ((w + W, w - W), tuple(random_vectors(rng, pair.n, 2, cplx))):
                disagree += (e_membership(spec, pair, u, v, 1).is_member
                             != e_membership(spec, pair, u, v, 2).is_member)
                db = double_basis(spec, pair, u, v)
                rep = full_report(pair, u, v)
                lhs = pair.norm2(u) * pair.norm2(v) * np.sin(rep.psi)
                rhs = db.n_small * db.N_big * pair.norm1(u) * pair.norm1(v) * np.sin(rep.phi)
                worst_sin = max(worst_sin, abs(lhs - rhs) / max(abs(rhs), 1e-300))
                tested += 1
    ok = worst_orth <= 1e-9 and disagree == 0 and worst_sin <= 1e-9
    report(9, ok, f"orthogonality residual {worst_orth:.1e} (<=1e-9), E1/E2 disagreements {disagree}/{tested}, "
                  f"sin identity rel err {worst_sin:.1e} (<=1e-9)", t0)


# 10 --------------------------------------------------------------------------

def test_10_cli_contract(capsys):
    t0 = time.perf_counter()
    files = sorted(f for f in os.listdir(DATA) if f.endswith(".json"))
    codes = {}
    for f in files:
        codes[f] = main(["verify", os.path.join(DATA, f), "--seed", "42"])
        capsys.readouterr()
    fa = os.path.join(DATA, "fix_a.json")
    corrupt = main(["verify", fa, "--seed", "42", "--corrupt-m", "1.1"])
    capsys.readouterr()
    main(["verify", fa, "--seed", "42", "--threads", "1"])
    first = capsys.readouterr().out
    main(["verify", fa, "--seed", "42", "--threads", "4"])
    second = capsys.readouterr().out
    identical = first == second and len(first) > 0
    ok = all(c == 0 for c in codes.values()) and corrupt == 1 and identical
    report(10, ok, f"verify exit codes {codes}; corrupted m exit {corrupt}; byte-identical reruns: {identical}", t0)
