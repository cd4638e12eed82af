"""Closed-form angle-distortion bounds and their evaluation on vector pairs.

Every evaluator takes a precomputed :class:`~wielandt.spectrum.SpectralData`
so that ``m`` and ``M`` have a single source.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import linalg
from .angles import full_report, half_tan
from .errors import NotPositiveDefinite, RangeError
from .spectrum import GramPair, analyze

TOL = 1e-9


class BoundName(str, Enum):
    TAN = "TAN"
    TAN2 = "TAN2"
    COS = "COS"
    ReIP = "ReIP"
    ModIP = "ModIP"
    OrthIP = "OrthIP"
    Regen = "Regen"
    Pos = "Pos"
    AbsGen = "AbsGen"
    CosCos = "CosCos"
    Yeh = "Yeh"
    Yan = "Yan"
    LSFloor = "LSFloor"
    GW_Householder = "GW_Householder"


def _margin(bound, tol):
    return tol * max(1.0, abs(bound)) if np.isfinite(bound) else 0.0


@dataclass(frozen=True)
class BoundReport:
    """One inequality evaluated at one observation.

    ``holds`` allows ``tol`` absolute slack, scaled up by ``|bound|`` for
    bounds larger than one (tangent forms grow without limit near pi).
    """

    name: BoundName
    lower: float | None
    upper: float | None
    observed: float
    tol: float = TOL

    @property
    def slack_lower(self):
        return None if self.lower is None else self.observed - self.lower

    @property
    def slack_upper(self):
        return None if self.upper is None else self.upper - self.observed

    @property
    def holds(self):
        ok = True
        if self.lower is not None:
            ok &= self.slack_lower >= -_margin(self.lower, self.tol)
        if self.upper is not None:
            ok &= self.slack_upper >= -_margin(self.upper, self.tol)
        return bool(ok)

    @property
    def equality(self):
        """``'lower'``, ``'upper'``, ``'both'`` or ``None`` for tight bounds."""
        lo = self.lower is not None and abs(self.slack_lower) <= _margin(self.lower, self.tol)
        hi = self.upper is not None and abs(self.slack_upper) <= _margin(self.upper, self.tol)
        if lo and hi:
            return "both"
        return "lower" if lo else "upper" if hi else None

    def as_dict(self):
        return {
            "name": self.name.value,
            "lower": self.lower,
            "upper": self.upper,
            "observed": self.observed,
            "slack_lower": self.slack_lower,
            "slack_upper": self.slack_upper,
            "holds": self.holds,
            "equality": self.equality,
        }


def _check_range(x, lo, hi, what):
    if not (lo <= x <= hi):
        raise RangeError(f"{what}={x!r} outside [{lo}, {hi}]")


def tan_bounds(spec, angle_in):
    """Interval for ``tan(out/2)`` given the input angle (vector or line form).

    An input angle of pi yields ``(inf, inf)``.
    """
    _check_range(angle_in, 0.0, np.pi, "angle")
    if angle_in == np.pi:
        return np.inf, np.inf
    t = np.tan(angle_in / 2.0)
    return spec.m / spec.M * t, spec.M / spec.m * t


def cos_interval(spec, cos_in):
    _check_range(cos_in, -1.0, 1.0, "cos")
    chi = spec.chi
    lo = (cos_in - chi) / (1.0 - chi * cos_in)
    hi = (cos_in + chi) / (1.0 + chi * cos_in)
    return float(np.clip(lo, -1.0, 1.0)), float(np.clip(hi, -1.0, 1.0))


def wielandt_bound(spec):
    return spec.chi


def difference_bounds(spec, variant):
    """Bounds on a difference of cosines.

    ``"Regen"`` bounds ``cos psi - cos phi``, ``"Pos"`` is the same difference
    when ``Re <u, v>_1 >= 0`` and ``"AbsGen"`` bounds ``cos Psi - cos Phi``.
    """
    variant = BoundName(variant)
    two_mu = 2.0 * spec.mu
    if variant is BoundName.Regen:
        return -two_mu, two_mu
    if variant is BoundName.Pos:
        return -two_mu, spec.chi
    if variant is BoundName.AbsGen:
        return -spec.chi, spec.chi
    raise ValueError(f"not a difference bound: {variant}")


def dragomir_reference_bounds(spec):
    r2 = (spec.m / spec.M) ** 2
    return 1.0 - 1.0 / r2, 1.0 - r2


def cos_product_floor(spec):
    return -spec.mu**2


def yeh_bound(spec, cos_Phi):
    """Yeh's bound ``cos t + 2 cos^2(t/2) cos Phi`` with ``cot(t/2) = kappa``.

    ``cos t`` equals ``chi``, so the bound is ``chi + (1 + chi) cos Phi``. It
    only applies when ``cos Phi <= 1/kappa^2``.
    """
    _check_range(cos_Phi, 0.0, 1.0, "cos_Phi")
    chi = spec.chi
    applicable = cos_Phi <= (1.0 / spec.kappa**2) * (1.0 + 1e-12)
    return bool(applicable), chi + (1.0 + chi) * cos_Phi


def yan_closed_form(evals, cos_Phi):
    lo, hi = float(np.min(evals)), float(np.max(evals))
    r = hi / lo
    chi = (r - 1.0) / (r + 1.0)
    return (chi + cos_Phi) / (1.0 + chi * cos_Phi)


def yan_bound(pencil_evals, cos_Phi):
    """Maximum over all eigenvalue pairs in Yan's generalized Wielandt bound.

    The brute-force maximum is checked against its closed form
    ``(chi + cos Phi) / (1 + chi cos Phi)``; a mismatch beyond 1e-12 raises
    ``ArithmeticError``.
    """
    lam = np.asarray(pencil_evals, dtype=float)
    if lam.size == 0 or np.any(lam <= 0.0):
        raise NotPositiveDefinite("eigenvalues must be positive")
    _check_range(cos_Phi, 0.0, 1.0, "cos_Phi")
    c2 = (1.0 + cos_Phi) / 2.0
    s2 = (1.0 - cos_Phi) / 2.0
    li, lj = lam[:, None] * c2, lam[None, :] * s2
    brute = float(np.max((li - lj) / (li + lj)))
    closed = yan_closed_form(lam, cos_Phi)
    if abs(brute - closed) > 1e-12:
        raise ArithmeticError(f"Yan maximum {brute!r} != closed form {closed!r}")
    return brute


def ls_floor(A, B):
    """Floor ``-((sqrt(k) - 1)/(sqrt(k) + 1))^2`` with ``k`` the condition
    number of ``A^-1/2 B A^-1/2``."""
    spec = analyze(GramPair(A, B))
    k = spec.pencil_evals[-1] / spec.pencil_evals[0]
    if spec.degenerate:
        k = 1.0
    rk = np.sqrt(k)
    return -(((rk - 1.0) / (rk + 1.0)) ** 2)


def gw_householder_angle(kappa, Phi):
    """Output angle of the Bauer-Householder map ``cot(Psi/2) = kappa cot(Phi/2)``."""
    if kappa < 1.0:
        raise RangeError(f"kappa={kappa!r} < 1")
    _check_range(Phi, 0.0, np.pi / 2, "Phi")
    return float(2.0 * np.arctan(np.tan(Phi / 2.0) / kappa))


def evaluate_angle(spec, phi):
    """Bounds implied by an abstract input angle (no observation)."""
    _check_range(phi, 0.0, np.pi, "phi")
    t_lo, t_hi = tan_bounds(spec, phi)
    c_lo, c_hi = cos_interval(spec, float(np.cos(phi)))
    out = {
        "TAN": (t_lo, t_hi),
        "COS": (c_lo, c_hi),
        "Regen": difference_bounds(spec, "Regen"),
        "AbsGen": difference_bounds(spec, "AbsGen"),
        "CosCos": (cos_product_floor(spec), None),
        "OrthIP": (None, wielandt_bound(spec)),
    }
    if phi <= np.pi / 2:
        cphi = float(np.cos(phi))
        out["TAN2"] = (t_lo, t_hi)
        out["Yan"] = (None, yan_bound(spec.pencil_evals, cphi))
        applicable, yeh = yeh_bound(spec, cphi)
        if applicable:
            out["Yeh"] = (None, yeh)
        out["GW_Householder"] = (gw_householder_angle(spec.kappa, phi), None)
    return out


def evaluate_pair(spec, pair, u, v, tol=TOL):
    """Evaluate every applicable inequality at the pair ``(u, v)``."""
    rep = full_report(pair, u, v)
    G1, G2 = pair.G1, pair.G2
    out = []

    def add(name, observed, lower=None, upper=None):
        out.append(BoundReport(BoundName(name), lower, upper, float(observed), tol))

    lo, hi = tan_bounds(spec, rep.phi)
    add("TAN", half_tan(G2, u, v), lo, hi)
    lo, hi = tan_bounds(spec, rep.Phi)
    add("TAN2", np.tan(rep.Psi / 2.0), lo, hi)
    add("COS", rep.cos_psi, *cos_interval(spec, rep.cos_phi))

    uh, vh = u / pair.norm1(u), v / pair.norm1(v)
    ip1 = linalg.inner(G1, uh, vh)
    ip2 = linalg.inner(G2, uh, vh) / (pair.norm2(uh) * pair.norm2(vh))
    add("ReIP", ip2.real, *cos_interval(spec, float(np.clip(ip1.real, -1, 1))))
    add("ModIP", abs(ip2), *cos_interval(spec, float(min(abs(ip1), 1.0))))
    if rep.cos_Phi <= 1e-12:
        add("OrthIP", rep.cos_Psi, None, wielandt_bound(spec))

    diff = rep.cos_psi - rep.cos_phi
    add("Regen", diff, *difference_bounds(spec, "Regen"))
    if rep.cos_phi >= 0.0:
        add("Pos", diff, *difference_bounds(spec, "Pos"))
    add("AbsGen", rep.cos_Psi - rep.cos_Phi, *difference_bounds(spec, "AbsGen"))
    add("CosCos", rep.cos_phi * rep.cos_psi, cos_product_floor(spec))

    applicable, yeh = yeh_bound(spec, rep.cos_Phi)
    if applicable:
        add("Yeh", rep.cos_Psi, None, yeh)
    add("Yan", rep.cos_Psi, None, yan_bound(spec.pencil_evals, rep.cos_Phi))
    if pair.is_real:
        # same floor as ls_floor(G1, G2): that pencil's condition number is kappa**2
        k = spec.kappa
        add("LSFloor", rep.cos_phi * rep.cos_psi, -(((k - 1.0) / (k + 1.0)) ** 2))
    psi_gw = gw_householder_angle(spec.kappa, rep.Phi)
    add("GW_Householder", rep.cos_Psi, None, float(np.cos(psi_gw)))
    return out
