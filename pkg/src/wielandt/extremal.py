"""Equality cases: detection for a given pair and explicit constructions."""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import linalg
from .angles import half_tan, phase
from .errors import DegeneratePencil, DependentVectors, RangeError
from .spectrum import _check_nonzero, e_membership

ALPHA_TOL = 1e-8


class PhaseCondition(str, Enum):
    AlphasEqual = "AlphasEqual"
    InnerProduct2Zero = "InnerProduct2Zero"
    InnerProduct1Zero = "InnerProduct1Zero"
    NotSatisfied = "NotSatisfied"
    Vacuous = "Vacuous"


class Target(str, Enum):
    MainRight = "MainRight"
    MainLeft = "MainLeft"
    LinesRight = "LinesRight"
    LinesLeft = "LinesLeft"


@dataclass(frozen=True)
class EqualityClassification:
    main_right: bool
    main_left: bool
    lines_right: bool
    lines_left: bool
    phase_condition: PhaseCondition
    residuals: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "main_right": self.main_right,
            "main_left": self.main_left,
            "lines_right": self.lines_right,
            "lines_left": self.lines_left,
            "phase_condition": self.phase_condition.value,
            "residuals": dict(self.residuals),
        }


def _require_independent(pair, u, v):
    nu2, nv2 = pair.norm1(u) ** 2, pair.norm1(v) ** 2
    if nu2 * nv2 - abs(pair.inner1(u, v)) ** 2 <= 1e-12 * nu2 * nv2:
        raise DependentVectors("u and v are linearly dependent")


def classify(spec, pair, u, v):
    """Report which equality cases ``(u, v)`` attains.

    The vector-angle cases are plain E-membership tests of ``(u, v)`` and
    ``(u, -v)``. The line-angle cases rotate ``u`` by the alignment phase and
    add the phase requirement. A vanishing inner product leaves its phase
    free; it is then chosen equal to the other phase (or 1 when both vanish),
    which is the only choice that can satisfy the phase requirement.
    """
    u, v = _check_nonzero(pair, u, v)
    _require_independent(pair, u, v)
    real = pair.is_real and linalg.is_real(u, v)
    uh, vh = u / pair.norm1(u), v / pair.norm1(v)
    a1 = phase(pair.inner1(uh, vh), 1.0, real)
    a2 = phase(pair.inner2(uh, vh), pair.norm2(uh) * pair.norm2(vh), real)

    if a1 is None and a2 is None:
        cond = PhaseCondition.Vacuous
    elif a1 is None:
        cond = PhaseCondition.InnerProduct1Zero
    elif a2 is None:
        cond = PhaseCondition.InnerProduct2Zero
    elif abs(a1 - a2) <= ALPHA_TOL:
        cond = PhaseCondition.AlphasEqual
    else:
        cond = PhaseCondition.NotSatisfied

    r_alpha = a1 if a1 is not None else (a2 if a2 is not None else 1.0)
    l_alpha = a2 if a2 is not None else (a1 if a1 is not None else 1.0)
    phase_ok = cond is not PhaseCondition.NotSatisfied

    mr = e_membership(spec, pair, u, v)
    ml = e_membership(spec, pair, u, -v)
    lr = e_membership(spec, pair, r_alpha * u, v)
    ll = e_membership(spec, pair, l_alpha * u, -v)
    residuals = {
        "main_right_m": mr.residual_m, "main_right_M": mr.residual_M,
        "main_left_m": ml.residual_m, "main_left_M": ml.residual_M,
        "lines_right_m": lr.residual_m, "lines_right_M": lr.residual_M,
        "lines_left_m": ll.residual_m, "lines_left_M": ll.residual_M,
        "alpha_gap": abs(a1 - a2) if a1 is not None and a2 is not None else 0.0,
    }
    return EqualityClassification(
        main_right=mr.is_member,
        main_left=ml.is_member,
        lines_right=lr.is_member and phase_ok,
        lines_left=ll.is_member and phase_ok,
        phase_condition=cond,
        residuals=residuals,
    )


@dataclass(frozen=True)
class ExtremalPair:
    u: np.ndarray
    v: np.ndarray
    target: Target
    requested_angle: float
    achieved_ratio: float


def construct_main(spec, pair, angle_phi, side="right"):
    """Pair at vector angle ``angle_phi`` attaining one side of the tangent bound.

    With unit ``w^`` in ``V_m`` and ``W^`` in ``V_M`` (first basis vectors),
    the right side uses ``u = cos(phi/2) w^ + sin(phi/2) W^`` and
    ``v = cos(phi/2) w^ - sin(phi/2) W^``. The left side swaps the two
    weights and negates ``v`` so that ``(u, -v)`` is in ``E`` while the angle
    stays ``phi``.
    """
    side = side.lower()
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    if not 0.0 < angle_phi < np.pi:
        raise RangeError(f"angle {angle_phi!r} outside (0, pi)")
    if spec.degenerate:
        raise DegeneratePencil("m == M: every pair is extremal")
    wh, Wh = spec.Vm_basis[:, 0], spec.VM_basis[:, 0]
    c, s = np.cos(angle_phi / 2.0), np.sin(angle_phi / 2.0)
    if side == "right":
        w, W = c * wh, s * Wh
        u, v = w + W, w - W
        target = Target.MainRight
    else:
        w, W = s * wh, c * Wh
        u, v = w + W, W - w
        target = Target.MainLeft
    ratio = half_tan(pair.G2, u, v) / np.tan(angle_phi / 2.0)
    return ExtremalPair(u=u, v=v, target=target, requested_angle=float(angle_phi),
                        achieved_ratio=float(ratio))


def _extreme_vectors(evals, evecs, tol=1e-8):
    """First eigenvector of the top and of the bottom eigenvalue cluster."""
    top = np.flatnonzero(evals >= evals[-1] * (1 - tol))[0]
    return evecs[:, top], evecs[:, 0]


def construct_kolotilina(B, cos_phi, epsilon=1.0):
    """Kolotilina's equality pair for the generalized Wielandt inequality.

    Returns ``x = (sqrt(1+c) x1 + sqrt(1-c) xn)/sqrt(2)`` and
    ``y = epsilon (sqrt(1+c) x1 - sqrt(1-c) xn)/sqrt(2)`` where ``x1``, ``xn``
    are unit eigenvectors of the largest and smallest eigenvalue of ``B``.
    """
    B = linalg.hermitian(B)
    linalg.cholesky(B)
    if not 0.0 <= cos_phi <= 1.0:
        raise RangeError(f"cos_phi={cos_phi!r} outside [0, 1]")
    if cos_phi == 1.0:
        raise DependentVectors("cos_phi = 1 gives dependent vectors")
    if abs(abs(epsilon) - 1.0) > 1e-12:
        raise RangeError("epsilon must have unit modulus")
    evals, evecs = linalg.herm_eig(B)
    if evals[-1] - evals[0] <= 1e-10 * evals[-1]:
        raise DegeneratePencil("B has a single eigenvalue")
    x1, xn = _extreme_vectors(evals, evecs)
    a, b = np.sqrt(1.0 + cos_phi), np.sqrt(1.0 - cos_phi)
    x = (a * x1 + b * xn) / np.sqrt(2.0)
    y = epsilon * (a * x1 - b * xn) / np.sqrt(2.0)
    if isinstance(epsilon, complex) or np.iscomplexobj(epsilon):
        y = y.astype(np.complex128)
    return x, y


def kolotilina_sides(B, x, y):
    """Both sides of ``|y* B x| <= (chi + cos)/(1 + chi cos) sqrt(x*Bx) sqrt(y*By)``.

    ``chi`` comes from the extreme eigenvalues of ``B`` and ``cos`` is the
    line cosine ``|y* x| / (|x| |y|)``.
    """
    B = linalg.hermitian(B)
    evals, _ = linalg.herm_eig(B)
    chi = (evals[-1] - evals[0]) / (evals[-1] + evals[0])
    c = abs(np.vdot(y, x)) / (np.linalg.norm(x) * np.linalg.norm(y))
    lhs = abs(np.vdot(y, B @ x))
    rhs = (chi + c) / (1.0 + chi * c) * np.sqrt(np.vdot(x, B @ x).real) * np.sqrt(np.vdot(y, B @ y).real)
    return float(lhs), float(rhs)
