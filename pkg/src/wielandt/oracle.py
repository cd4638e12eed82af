"""Brute-force verification of the angle inequalities.

Nothing in here trusts the closed forms it checks: extremes of the
half-angle tangent ratio are found by random search, local ascent and an
exhaustive grid, and the property suite samples vector pairs and compares
observed quantities against every bound.

Random streams come from numpy's PCG64 seeded with
``SeedSequence([seed, task_index])``, so each task is reproducible on its own
and the aggregated report does not depend on thread scheduling.
"""

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from . import angles, bounds, extremal, linalg
from .errors import RangeError
from .spectrum import analyze, double_basis, e_membership

TOL = 1e-9


@dataclass(frozen=True)
class OracleConfig:
    seed: int = 42
    trials: int = 1000
    grid_steps: int = 256
    dims: tuple = (2, 3, 4, 8, 16)
    tol: float = TOL
    threads: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.grid_steps < 8:
            raise ValueError("grid_steps must be >= 8")


def make_rng(seed, *keys):
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, *keys])))


def default_threads():
    env = os.environ.get("WIELANDT_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


# --- random objects -------------------------------------------------------

def random_vectors(rng, n, count, complex_=True):
    """``count`` rows of Gaussian vectors (complex parts drawn independently)."""
    X = rng.standard_normal((count, n))
    if complex_:
        X = X + 1j * rng.standard_normal((count, n))
    return X


def random_unit_vectors(rng, n, count, complex_=True):
    X = random_vectors(rng, n, count, complex_)
    return X / np.linalg.norm(X, axis=1, keepdims=True)


def random_pd(rng, n, complex_=True, log_spread=2.0):
    """Random positive-definite matrix with log-uniform spectrum in
    ``[exp(-log_spread), exp(log_spread)]``."""
    X = random_vectors(rng, n, n, complex_)
    Q, _ = np.linalg.qr(X)
    lam = np.exp(rng.uniform(-log_spread, log_spread, n))
    G = (Q * lam) @ Q.conj().T
    return 0.5 * (G + G.conj().T)


def random_pair(rng, n, complex_=True):
    from .spectrum import GramPair
    return GramPair(random_pd(rng, n, complex_), random_pd(rng, n, complex_))


# --- batched angle quantities ----------------------------------------------

def _qform(G, X):
    return np.maximum(np.einsum("ij,ij->i", X.conj(), X @ G.T).real, 0.0)


def _binner(G, U, V):
    return np.einsum("ij,ij->i", V.conj(), U @ G.T)


def _half_tan(G, U, V):
    """Row-wise ``tan(theta/2)`` for vector angles, via ``|u^-v^| / |u^+v^|``."""
    Uh = U / np.sqrt(_qform(G, U))[:, None]
    Vh = V / np.sqrt(_qform(G, V))[:, None]
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.sqrt(_qform(G, Uh - Vh)) / np.sqrt(_qform(G, Uh + Vh))


def batch_angles(G, U, V):
    """Cosines and half-angle tangents of vector and line angles, row-wise."""
    nu = np.sqrt(_qform(G, U))
    nv = np.sqrt(_qform(G, V))
    Uh, Vh = U / nu[:, None], V / nv[:, None]
    ip = _binner(G, Uh, Vh)
    mod = np.abs(ip)
    alpha = np.where(mod > 1e-12, mod / np.where(mod > 0, ip, 1.0), 1.0)
    Ua = Uh * alpha[:, None]
    with np.errstate(divide="ignore", invalid="ignore"):
        t_vec = np.sqrt(_qform(G, Uh - Vh)) / np.sqrt(_qform(G, Uh + Vh))
        t_line = np.sqrt(_qform(G, Ua - Vh)) / np.sqrt(_qform(G, Ua + Vh))
    return {
        "cos": np.clip(ip.real, -1.0, 1.0),
        "cos_line": np.clip(mod, 0.0, 1.0),
        "tan_half": t_vec,
        "tan_half_line": t_line,
    }


def _scaled_slack(observed, lower=None, upper=None):
    """Distance inside ``[lower, upper]`` divided by ``max(1, |bound|)``."""
    s = np.full(np.shape(observed), np.inf)
    if lower is not None:
        lo = np.broadcast_to(lower, np.shape(observed))
        s = np.minimum(s, (observed - lo) / np.maximum(1.0, np.abs(lo)))
    if upper is not None:
        hi = np.broadcast_to(upper, np.shape(observed))
        s = np.minimum(s, (hi - observed) / np.maximum(1.0, np.abs(hi)))
    return s


# --- ratio extremes ---------------------------------------------------------

@dataclass(frozen=True)
class OracleReport:
    empirical_max_ratio: float
    empirical_min_ratio: float
    theoretical: tuple
    witnesses: dict
    violations: list
    seed: int

    def as_dict(self):
        return {
            "empirical_max_ratio": self.empirical_max_ratio,
            "empirical_min_ratio": self.empirical_min_ratio,
            "theoretical": list(self.theoretical),
            "witnesses": {k: [list(x) for x in v] for k, v in self.witnesses.items()},
            "violations": list(self.violations),
            "seed": self.seed,
        }


def _unpack(x, n, cplx):
    if cplx:
        u = x[:n] + 1j * x[n:2 * n]
        v = x[2 * n:3 * n] + 1j * x[3 * n:]
    else:
        u, v = x[:n], x[n:]
    return u, v


def _pack(u, v, cplx):
    if cplx:
        return np.concatenate([u.real, u.imag, v.real, v.imag])
    return np.concatenate([u.real, v.real])


def _ratio(pair, u, v):
    t1 = _half_tan(pair.G1, u[None], v[None])[0]
    t2 = _half_tan(pair.G2, u[None], v[None])[0]
    return t2 / t1


RESTARTS = 4


def _log_half_tan_grad(G, u, v):
    """``log tan(theta/2)`` for the vector angle and its real gradient in
    ``(u, v)``; uses ``d log tan(theta/2) / d cos(theta) = -1 / sin^2(theta)``."""
    Gu, Gv = G @ u, G @ v
    nu = math.sqrt(max(np.vdot(u, Gu).real, 0.0))
    nv = math.sqrt(max(np.vdot(v, Gv).real, 0.0))
    c = np.vdot(v, Gu).real / (nu * nv)
    c = min(max(c, -1.0), 1.0)
    s2 = 1.0 - c * c
    if s2 <= 0.0:
        return np.nan, None, None
    val = 0.5 * math.log((1.0 - c) / (1.0 + c))
    gu = Gv / (nu * nv) - c * Gu / nu**2
    gv = Gu / (nu * nv) - c * Gv / nv**2
    return val, -gu / s2, -gv / s2


def _ascend(pair, u, v, cplx, sign):
    """BFGS on ``-sign * log(ratio)`` starting from ``(u, v)``."""
    n = pair.n

    def f(x):
        uu, vv = _unpack(x, n, cplx)
        l1, gu1, gv1 = _log_half_tan_grad(pair.G1, uu, vv)
        l2, gu2, gv2 = _log_half_tan_grad(pair.G2, uu, vv)
        if not (np.isfinite(l1) and np.isfinite(l2)):
            return 1e6, np.zeros_like(x)
        g = _pack(gu2 - gu1, gv2 - gv1, cplx)
        return -sign * (l2 - l1), -sign * g

    res = minimize(f, _pack(u, v, cplx), jac=True, method="BFGS",
                   options={"gtol": 1e-12, "maxiter": 2000})
    uu, vv = _unpack(res.x, n, cplx)
    return uu, vv


def _plane_grid(spec, pair, u, v, steps):
    """Exhaustive grid over direction pairs in the real plane through ``u``, ``v``.

    Grid angles are ``2 pi k / steps`` on both axes, so the grid is closed
    under negation and contains the symmetric mixtures where the in-plane
    extremes sit.
    """
    db = double_basis(spec, pair, u, v)
    t = 2.0 * np.pi * np.arange(steps) / steps
    a, c = np.meshgrid(t, t, indexing="ij")
    a, c = a.ravel(), c.ravel()
    U = np.cos(a)[:, None] * db.b + np.sin(a)[:, None] * db.B
    V = np.cos(c)[:, None] * db.b + np.sin(c)[:, None] * db.B
    keep = np.abs(np.sin(a - c)) > 1e-6
    U, V = U[keep], V[keep]
    r = _half_tan(pair.G2, U, V) / _half_tan(pair.G1, U, V)
    return U, V, r


def ratio_extremes(spec, pair, cfg, task=0):
    """Empirical sup and inf of ``tan(psi/2) / tan(phi/2)``.

    Three stages: ``cfg.trials`` random pairs, a BFGS ascent (descent for the
    infimum) from each of the ``RESTARTS`` best random witnesses, then a ``grid_steps``-squared grid
    over the real plane of the refined witness.
    """
    rng = make_rng(cfg.seed, 1000 + task)
    cplx = not pair.is_real
    U = random_vectors(rng, pair.n, cfg.trials, cplx)
    V = random_vectors(rng, pair.n, cfg.trials, cplx)
    r = _half_tan(pair.G2, U, V) / _half_tan(pair.G1, U, V)
    ok = np.isfinite(r)
    U, V, r = U[ok], V[ok], r[ok]
    kappa = spec.kappa
    lo_bound, hi_bound = 1.0 / kappa, kappa

    found = {}
    if spec.degenerate:
        i = int(np.argmax(np.abs(r - 1.0)))
        found["max"] = (float(np.max(r)), U[i], V[i])
        found["min"] = (float(np.min(r)), U[i], V[i])
    else:
        for key, sign in (("max", 1.0), ("min", -1.0)):
            order = np.argsort(-sign * r, kind="stable")
            best = (float(r[order[0]]), U[order[0]], V[order[0]])
            # several starts: the landscape has saddles at interior eigenpairs
            for i in order[:RESTARTS]:
                u1, v1 = _ascend(pair, U[i], V[i], cplx, sign)
                r1 = _ratio(pair, u1, v1)
                if np.isfinite(r1) and sign * r1 > sign * best[0]:
                    best = (float(r1), u1, v1)
            try:
                GU, GV, gr = _plane_grid(spec, pair, best[1], best[2], cfg.grid_steps)
                j = int(np.argmax(sign * gr))
                if sign * gr[j] > sign * best[0]:
                    best = (float(gr[j]), GU[j], GV[j])
            except Exception:
                pass
            found[key] = best

    violations = []
    worst_hi = found["max"][0]
    worst_lo = found["min"][0]
    if worst_hi > hi_bound * (1.0 + cfg.tol) + cfg.tol:
        violations.append({"bound": "TAN upper", "ratio": worst_hi, "limit": hi_bound})
    if worst_lo < lo_bound * (1.0 - cfg.tol) - cfg.tol:
        violations.append({"bound": "TAN lower", "ratio": worst_lo, "limit": lo_bound})
    return OracleReport(
        empirical_max_ratio=worst_hi,
        empirical_min_ratio=worst_lo,
        theoretical=(lo_bound, hi_bound),
        witnesses={"max": (found["max"][1], found["max"][2]),
                   "min": (found["min"][1], found["min"][2])},
        violations=violations,
        seed=cfg.seed,
    )


def hexagon_min(mu, grid_steps=601):
    """Grid minimum of ``x*y`` over ``|x|, |y| <= 1``, ``|x - y| <= 2 mu``."""
    if not 0.0 <= mu < 1.0:
        raise RangeError(f"mu={mu!r} outside [0, 1)")
    if grid_steps < 8:
        raise ValueError("grid_steps must be >= 8")
    g = np.linspace(-1.0, 1.0, grid_steps)
    x, y = np.meshgrid(g, g, indexing="ij")
    feasible = np.abs(x - y) <= 2.0 * mu + 1e-12
    xy = np.where(feasible, x * y, np.inf)
    k = int(np.argmin(xy))
    return float(xy.flat[k]), (float(x.flat[k]), float(y.flat[k]))


# --- property suite ---------------------------------------------------------

@dataclass
class PropertyResult:
    name: str
    trials: int
    worst_slack: float
    passed: bool
    note: str = ""

    def as_dict(self):
        return {"name": self.name, "trials": self.trials, "worst_slack": self.worst_slack,
                "passed": self.passed, "note": self.note}


@dataclass
class SuiteReport:
    seed: int
    trials: int
    results: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    @property
    def violations(self):
        return [r.name for r in self.results if not r.passed]

    def as_dict(self):
        return {
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "violations": self.violations,
            "properties": [r.as_dict() for r in self.results],
        }


def _result(name, trials, slack, tol, note=""):
    slack = float(np.min(slack)) if np.size(slack) else float("inf")
    return PropertyResult(name, int(trials), slack, bool(slack >= -tol), note)


def _random_pairs(ctx, count=None):
    count = count or ctx.cfg.trials
    U = random_vectors(ctx.rng, ctx.pair.n, count, ctx.cplx)
    V = random_vectors(ctx.rng, ctx.pair.n, count, ctx.cplx)
    return U, V


def _span_samples(rng, basis, count, cplx):
    k = basis.shape[1]
    C = random_vectors(rng, k, count, cplx)
    return C @ basis.T


@dataclass
class _Ctx:
    spec: object
    pair: object
    cfg: OracleConfig
    rng: np.random.Generator

    @property
    def cplx(self):
        return not self.pair.is_real


def _p_rayleigh(ctx):
    U, _ = _random_pairs(ctx)
    r = np.sqrt(_qform(ctx.pair.G2, U) / _qform(ctx.pair.G1, U))
    s = _scaled_slack(r, ctx.spec.m, ctx.spec.M)
    return [_result("spectrum.rayleigh", len(r), s, ctx.cfg.tol)]


def _p_orthogonal(ctx):
    spec, pair, tol = ctx.spec, ctx.pair, ctx.cfg.tol
    n = ctx.cfg.trials
    U, V = _random_pairs(ctx)
    if spec.degenerate:
        lhs = _binner(pair.G2, U, V)
        rhs = spec.m**2 * _binner(pair.G1, U, V)
        scale = np.sqrt(_qform(pair.G2, U) * _qform(pair.G2, V))
        s = -np.abs(lhs - rhs) / scale
        return [_result("spectrum.orthogonal", n, s + tol, tol, "m == M: proportional check")]
    Wm = _span_samples(ctx.rng, spec.Vm_basis, n, ctx.cplx)
    WM = _span_samples(ctx.rng, spec.VM_basis, n, ctx.cplx)
    n1 = np.sqrt(_qform(pair.G1, Wm) * _qform(pair.G1, WM))
    n2 = np.sqrt(_qform(pair.G2, Wm) * _qform(pair.G2, WM))
    o1 = np.abs(_binner(pair.G1, Wm, WM)) / n1
    o2 = np.abs(_binner(pair.G2, Wm, WM)) / n2
    out = [_result("spectrum.orthogonal", n, 1e-9 - np.maximum(o1, o2), tol)]
    devs = []
    for W, s2 in ((Wm, spec.m**2), (WM, spec.M**2)):
        lhs = _binner(pair.G2, U, W)
        rhs = s2 * _binner(pair.G1, U, W)
        scale = np.sqrt(_qform(pair.G2, U) * _qform(pair.G2, W))
        devs.append(np.abs(lhs - rhs) / scale)
    out.append(_result("spectrum.eigen_inner", n, 1e-9 - np.maximum(*devs), tol))
    return out


def _members(ctx, count):
    """Random pairs in E: ``u = a z (w + W)``, ``v = b z (w - W)``."""
    spec = ctx.spec
    Wm = _span_samples(ctx.rng, spec.Vm_basis, count, ctx.cplx)
    WM = _span_samples(ctx.rng, spec.VM_basis, count, ctx.cplx)
    if spec.degenerate:
        WM = random_vectors(ctx.rng, ctx.pair.n, count, ctx.cplx)
    a = np.exp(ctx.rng.uniform(-2, 2, count))[:, None]
    b = np.exp(ctx.rng.uniform(-2, 2, count))[:, None]
    z = np.exp(1j * ctx.rng.uniform(0, 2 * np.pi, count))[:, None] if ctx.cplx else 1.0
    return a * z * (Wm + WM), b * z * (Wm - WM)


def _p_e_agreement(ctx):
    spec, pair = ctx.spec, ctx.pair
    half = max(ctx.cfg.trials // 2, 1)
    U, V = _random_pairs(ctx, half)
    MU, MV = _members(ctx, half)
    mismatches = 0
    members = 0
    for u, v in zip(np.vstack([U, MU]), np.vstack([V, MV])):
        e1 = e_membership(spec, pair, u, v, 1).is_member
        e2 = e_membership(spec, pair, u, v, 2).is_member
        mismatches += e1 != e2
        members += e1
    note = f"{members} members among {2 * half} pairs"
    return [_result("spectrum.E1_equals_E2", 2 * half, -float(mismatches), 0.0, note)]


def _p_sin_identity(ctx):
    spec, pair, tol = ctx.spec, ctx.pair, ctx.cfg.tol
    U, V = _random_pairs(ctx)
    A1 = batch_angles(pair.G1, U, V)
    A2 = batch_angles(pair.G2, U, V)
    sin = lambda t: 2.0 * t / (1.0 + t * t)
    n1 = np.sqrt(_qform(pair.G1, U) * _qform(pair.G1, V))
    n2 = np.sqrt(_qform(pair.G2, U) * _qform(pair.G2, V))
    dev, orth, order = [], [], []
    for i in range(len(U)):
        db = double_basis(spec, pair, U[i], V[i])
        lhs = n2[i] * sin(A2["tan_half"][i])
        rhs = db.n_small * db.N_big * n1[i] * sin(A1["tan_half"][i])
        dev.append(abs(lhs - rhs) / max(abs(rhs), 1e-300))
        orth.append(max(abs(pair.inner1(db.b, db.B).real),
                        abs(pair.inner2(db.b, db.B).real) / (db.n_small * db.N_big)))
        lo = (db.n_small - spec.m) / max(1.0, spec.m)
        hi = (spec.M - db.N_big) / max(1.0, spec.M)
        order.append(min(lo, hi, db.N_big - db.n_small))
    return [
        _result("spectrum.sin_identity", len(U), 1e-9 - np.array(dev), tol),
        _result("spectrum.double_basis", len(U), np.minimum(1e-10 - np.array(orth), np.array(order) + tol), tol),
    ]


def _p_angles(ctx):
    pair = ctx.pair
    count = min(ctx.cfg.trials, 300)
    U, V = _random_pairs(ctx, count)
    clamp, exact, phase_dev, scale_dev, real_dev = [], [], [], [], []
    for G in (pair.G1, pair.G2):
        R = np.block([[G.real, -G.imag], [G.imag, G.real]]) if np.iscomplexobj(G) else None
        for u, v in zip(U, V):
            c = angles.vector_cos(G, u, v)
            clamp.append(min(c + 1.0, 1.0 - c))
            exact.append(-abs(angles.vector_angle(G, u, u)) - abs(angles.vector_angle(G, u, -u) - np.pi))
            theta = angles.vector_angle(G, u, v)
            Theta, alpha = angles.line_angle(G, u, v)
            if alpha is not None:
                phase_dev.append(abs(angles.vector_angle(G, alpha * u, v) - Theta))
            a = float(np.exp(ctx.rng.uniform(-3, 3)))
            z = a * np.exp(1j * ctx.rng.uniform(0, 2 * np.pi)) if ctx.cplx else -a
            scale_dev.append(max(abs(angles.vector_angle(G, a * u, 2.0 * a * v) - theta),
                                 abs(angles.line_angle(G, z * u, v)[0] - Theta)))
            if R is not None:
                ru = np.concatenate([u.real, u.imag])
                rv = np.concatenate([v.real, v.imag])
                real_dev.append(abs(angles.vector_angle(R, ru, rv) - theta))
            else:
                real_dev.append(0.0)
    return [
        _result("angles.clamp", len(clamp), np.array(clamp) + np.array(exact), 0.0),
        _result("angles.phase", len(phase_dev), 1e-10 - np.array(phase_dev), 0.0),
        _result("angles.scale_invariance", len(scale_dev), 1e-12 - np.array(scale_dev), 0.0),
        _result("angles.realification", len(real_dev), 1e-10 - np.array(real_dev), 0.0),
    ]


def _p_soundness(ctx):
    spec, pair, tol = ctx.spec, ctx.pair, ctx.cfg.tol
    U, V = _random_pairs(ctx)
    A1 = batch_angles(pair.G1, U, V)
    A2 = batch_angles(pair.G2, U, V)
    kappa, chi, mu = spec.kappa, spec.chi, spec.mu
    c1, c2 = A1["cos"], A2["cos"]
    l1, l2 = A1["cos_line"], A2["cos_line"]
    t1, t2 = A1["tan_half"], A2["tan_half"]
    T1, T2 = A1["tan_half_line"], A2["tan_half_line"]
    n = len(U)
    out = [
        _result("bounds.TAN", n, _scaled_slack(t2, t1 / kappa, t1 * kappa), tol),
        _result("bounds.TAN2", n, _scaled_slack(T2, T1 / kappa, T1 * kappa), tol),
        _result("bounds.COS", n, _scaled_slack(c2, (c1 - chi) / (1 - chi * c1), (c1 + chi) / (1 + chi * c1)), tol),
        _result("bounds.ModIP", n, _scaled_slack(l2, (l1 - chi) / (1 - chi * l1), (l1 + chi) / (1 + chi * l1)), tol),
        _result("bounds.Regen", n, _scaled_slack(c2 - c1, -2 * mu, 2 * mu), tol),
        _result("bounds.AbsGen", n, _scaled_slack(l2 - l1, -chi, chi), tol),
        _result("bounds.CosCos", n, _scaled_slack(c1 * c2, -mu**2), tol),
    ]
    pos = c1 >= 0
    out.append(_result("bounds.Pos", int(pos.sum()), _scaled_slack((c2 - c1)[pos], -2 * mu, chi), tol))
    yan = np.array([bounds.yan_bound(spec.pencil_evals, float(c)) for c in l1])
    out.append(_result("bounds.Yan", n, _scaled_slack(l2, upper=yan), tol))
    yeh_ok = l1 <= 1.0 / kappa**2
    out.append(_result("bounds.Yeh", int(yeh_ok.sum()),
                       _scaled_slack(l2[yeh_ok], upper=chi + (1 + chi) * l1[yeh_ok]), tol))
    Phi = 2.0 * np.arctan(T1)
    psi_gw = 2.0 * np.arctan(np.tan(Phi / 2.0) / kappa)
    out.append(_result("bounds.GW_Householder", n, _scaled_slack(l2, upper=np.cos(psi_gw)), tol))
    if pair.is_real:
        out.append(_result("bounds.LSFloor", n, _scaled_slack(c1 * c2, bounds.ls_floor(pair.G1, pair.G2)), tol))

    # Wielandt case: make v orthogonal to u in the first inner product
    ip = _binner(pair.G1, V, U) / _qform(pair.G1, U)
    Vo = V - ip[:, None] * U
    B2 = batch_angles(pair.G2, U, Vo)
    out.append(_result("bounds.OrthIP", n, _scaled_slack(B2["cos_line"], upper=chi), tol))
    return out


def _p_bound_algebra(ctx):
    spec = ctx.spec
    rng = ctx.rng
    count = ctx.cfg.trials
    phi = rng.uniform(0.0, np.pi, count)
    dev = []
    for p in phi:
        lo_t, hi_t = bounds.tan_bounds(spec, float(p))
        lo_c, hi_c = bounds.cos_interval(spec, float(np.cos(p)))
        # cosine is decreasing: the tangent upper end maps to the cosine lower end
        dev.append(max(abs(np.cos(2 * np.arctan(hi_t)) - lo_c), abs(np.cos(2 * np.arctan(lo_t)) - hi_c)))
    out = [_result("bounds.tan_cos_consistency", count, 1e-10 - np.array(dev), 0.0)]

    d_lo, d_hi = bounds.dragomir_reference_bounds(spec)
    r_lo, _ = bounds.difference_bounds(spec, "Regen")
    a_lo, a_hi = bounds.difference_bounds(spec, "AbsGen")
    chain = [r_lo - d_lo, a_lo - r_lo, d_hi - a_hi]
    strict = not spec.degenerate
    ok = all(x >= 0 for x in chain) and (not strict or all(x > 0 for x in chain))
    out.append(PropertyResult("bounds.dominance", 1, float(min(chain)), bool(ok)))

    cgrid = np.linspace(0.0, 1.0 / spec.kappa**2, 50)
    yeh_gap = []
    for c in cgrid:
        applicable, yeh = bounds.yeh_bound(spec, float(c))
        yeh_gap.append(yeh - bounds.cos_interval(spec, float(c))[1])
    out.append(_result("bounds.yeh_dominance", len(cgrid), np.array(yeh_gap), 1e-15))

    worst = np.inf
    for _ in range(100):
        lam = np.exp(rng.uniform(-3, 3, rng.integers(2, 11)))
        for c in np.linspace(0.0, 1.0, 11):
            b = bounds.yan_bound(lam, float(c))
            worst = min(worst, 1e-12 - abs(b - bounds.yan_closed_form(lam, float(c))))
    out.append(PropertyResult("bounds.yan_identity", 1100, float(worst), bool(worst >= 0)))
    return out


PHI_GRID = tuple(np.round(np.arange(0.1, 3.05, 0.1), 10))


def _p_extremal(ctx):
    spec, pair = ctx.spec, ctx.pair
    if spec.degenerate:
        return [PropertyResult("extremal.round_trip", 0, 0.0, True, "skipped: m == M")]
    kappa = spec.kappa
    rt, sharp, robust = [], [], []
    for phi in PHI_GRID:
        for side in ("right", "left"):
            ex = extremal.construct_main(spec, pair, phi, side)
            cl = extremal.classify(spec, pair, ex.u, ex.v)
            want = kappa if side == "right" else 1.0 / kappa
            matched = cl.main_right if side == "right" else cl.main_left
            opposite = cl.main_left if side == "right" else cl.main_right
            dev = abs(ex.achieved_ratio - want) / want
            rt.append((1e-9 - dev) if matched and not opposite else -1.0)
            # nudge v inside the real plane, perpendicular to v; the pair leaves E
            d = ex.u - pair.inner1(ex.u, ex.v).real / pair.norm1(ex.v) ** 2 * ex.v
            v2 = ex.v + 1e-3 * pair.norm1(ex.v) / pair.norm1(d) * d
            r2 = _ratio(pair, ex.u, v2)
            # left side: 1/ratio(u, v) is the right-side ratio of (u, -v)
            sharp.append(kappa - 1e-7 - (r2 if side == "right" else 1.0 / r2))
            z = np.exp(1j * ctx.rng.uniform(0, 2 * np.pi)) if ctx.cplx else -1.0
            cz = extremal.classify(spec, pair, z * ex.u, ex.v)
            robust.append(0.0 if (cz.lines_right, cz.lines_left) == (cl.lines_right, cl.lines_left) else -1.0)
    return [
        _result("extremal.round_trip", len(rt), np.array(rt), 0.0),
        _result("extremal.sharpness", len(sharp), np.array(sharp), 0.0),
        _result("extremal.phase_robustness", len(robust), np.array(robust), 0.0),
    ]


def _p_kolotilina(ctx):
    spec, pair = ctx.spec, ctx.pair
    if spec.degenerate:
        return [PropertyResult("extremal.kolotilina", 0, 0.0, True, "skipped: m == M")]
    # whiten the first inner product: x = L^-* x~ turns <.,.>_1 into the dot product
    L = linalg.cholesky(pair.G1)
    Bw = linalg.solve_lower(L, linalg.solve_lower(L, pair.G2).conj().T)
    Bw = 0.5 * (Bw + Bw.conj().T)
    eps = np.exp(1j * ctx.rng.uniform(0, 2 * np.pi)) if ctx.cplx else 1.0
    slack = []
    for c in (0.0, 0.3, 0.6, 0.9):
        xt, yt = extremal.construct_kolotilina(Bw, c, eps)
        lhs, rhs = extremal.kolotilina_sides(Bw, xt, yt)
        x = linalg.solve_upper(L.conj().T, xt)
        y = linalg.solve_upper(L.conj().T, yt)
        cl = extremal.classify(spec, pair, x, y)
        s = 1e-9 - abs(lhs - rhs) / rhs
        slack.append(s if cl.lines_left else -1.0)
    return [_result("extremal.kolotilina", len(slack), np.array(slack), 0.0)]


def _p_ratio_extremes(ctx):
    spec, pair, cfg = ctx.spec, ctx.pair, ctx.cfg
    rep = ratio_extremes(spec, pair, cfg, task=0)
    hi, lo = rep.theoretical[1], rep.theoretical[0]
    inside = min((hi - rep.empirical_max_ratio) / hi, (rep.empirical_min_ratio - lo) / max(lo, 1e-300))
    attained = 1e-3 - max(abs(rep.empirical_max_ratio - hi), abs(rep.empirical_min_ratio - lo))
    note = f"max {rep.empirical_max_ratio!r} min {rep.empirical_min_ratio!r}"
    return [
        _result("oracle.ratio_within_bounds", cfg.trials, inside, cfg.tol, note),
        _result("oracle.ratio_attained", cfg.trials, attained, 0.0, note),
    ]


def _p_hexagon(ctx):
    mu = ctx.spec.mu
    steps = 601
    val, _ = hexagon_min(mu, steps)
    # grid points are feasible, so the grid minimum can only sit above -mu^2
    h = 2.0 / (steps - 1)
    slack = min(val + mu**2 + 1e-12, 2.0 * h - (val + mu**2))
    return [_result("oracle.coscos_hexagon", 1, slack, 0.0)]


PROPERTIES = (
    _p_rayleigh,
    _p_orthogonal,
    _p_e_agreement,
    _p_sin_identity,
    _p_angles,
    _p_soundness,
    _p_bound_algebra,
    _p_extremal,
    _p_kolotilina,
    _p_ratio_extremes,
    _p_hexagon,
)


def run_suite(pair, cfg=None, spec=None):
    """Run every property check on ``pair`` and collect a report.

    ``spec`` may be supplied to test a (possibly corrupted) spectral summary;
    by default it is computed from the pair. A check that raises is recorded
    as failed instead of aborting the run.
    """
    cfg = cfg or OracleConfig()
    spec = spec if spec is not None else analyze(pair)

    def task(i):
        prop = PROPERTIES[i]
        ctx = _Ctx(spec, pair, cfg, make_rng(cfg.seed, i))
        try:
            return prop(ctx)
        except Exception as exc:  # report and continue
            name = prop.__name__.removeprefix("_p_")
            return [PropertyResult(name, 0, float("-inf"), False, f"{type(exc).__name__}: {exc}")]

    threads = max(1, int(cfg.threads))
    if threads == 1:
        chunks = [task(i) for i in range(len(PROPERTIES))]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(task, range(len(PROPERTIES))))
    report = SuiteReport(seed=cfg.seed, trials=cfg.trials)
    for chunk in chunks:
        report.results.extend(chunk)
    return report
