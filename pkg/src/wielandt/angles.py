"""Vector angles, line angles and alignment phases under a Gram matrix.

The vector angle uses ``Re <u, v>`` and lies in ``[0, pi]``; the line angle
(between ``C u`` and ``C v``) uses ``|<u, v>|`` and lies in ``[0, pi/2]``.
Angles are evaluated as ``2 atan2(|u^ - v^|, |u^ + v^|)`` on normalised
vectors, which is exact at 0 and pi where ``arccos`` loses half the digits.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import ZeroVector

PHASE_TOL = 1e-12


def _unit(G, x):
    x = linalg.as_vector(x, G.shape[0])
    nx = linalg.norm(G, x)
    if nx == 0.0:
        raise ZeroVector("zero vector")
    return x / nx


def half_tan(G, u, v):
    """``tan(theta/2)`` for the vector angle ``theta``; ``inf`` when ``v = -c u``."""
    G = np.asarray(G)
    uh, vh = _unit(G, u), _unit(G, v)
    den = linalg.norm(G, uh + vh)
    num = linalg.norm(G, uh - vh)
    if den == 0.0:
        return np.inf
    return num / den


def vector_angle(G, u, v):
    G = np.asarray(G)
    uh, vh = _unit(G, u), _unit(G, v)
    return float(2.0 * np.arctan2(linalg.norm(G, uh - vh), linalg.norm(G, uh + vh)))


def vector_cos(G, u, v):
    G = np.asarray(G)
    uh, vh = _unit(G, u), _unit(G, v)
    return float(np.clip(linalg.inner(G, uh, vh).real, -1.0, 1.0))


def phase(z, scale, real=False):
    """Unit ``alpha`` with ``|z| = alpha z``, or ``None`` if ``z`` vanishes."""
    if abs(z) <= PHASE_TOL * scale:
        return None
    alpha = abs(z) / z
    if real:
        return float(np.sign(alpha.real))
    return complex(alpha)


def line_angle(G, u, v):
    """Angle between the lines through ``u`` and ``v`` plus the alignment phase.

    Returns
    -------
    angle : float
        In ``[0, pi/2]``.
    alpha : complex, float or None
        Unit scalar with ``|<u, v>| = alpha <u, v>``; ``None`` when the inner
        product vanishes (every unit scalar qualifies). Restricted to
        ``+-1`` when ``G``, ``u`` and ``v`` are real.
    """
    G = np.asarray(G)
    uh, vh = _unit(G, u), _unit(G, v)
    z = linalg.inner(G, uh, vh)
    alpha = phase(z, 1.0, real=linalg.is_real(G, u, v))
    if alpha is None:
        return float(np.arccos(min(abs(z), 1.0))), None
    return vector_angle(G, alpha * uh, vh), alpha


@dataclass(frozen=True)
class AngleReport:
    phi: float
    psi: float
    Phi: float
    Psi: float
    alpha1: complex | float | None
    alpha2: complex | float | None
    cos_phi: float
    cos_psi: float
    cos_Phi: float
    cos_Psi: float


def full_report(pair, u, v):
    G1, G2 = pair.G1, pair.G2
    Phi, a1 = line_angle(G1, u, v)
    Psi, a2 = line_angle(G2, u, v)
    cos_abs = lambda G: min(abs(linalg.inner(G, _unit(G, u), _unit(G, v))), 1.0)
    return AngleReport(
        phi=vector_angle(G1, u, v),
        psi=vector_angle(G2, u, v),
        Phi=Phi,
        Psi=Psi,
        alpha1=a1,
        alpha2=a2,
        cos_phi=vector_cos(G1, u, v),
        cos_psi=vector_cos(G2, u, v),
        cos_Phi=float(cos_abs(G1)),
        cos_Psi=float(cos_abs(G2)),
    )


def set_angle(G, S, T):
    """Smallest vector angle between the nonzero members of two finite sets."""
    G = np.asarray(G)
    S = [linalg.as_vector(s, G.shape[0]) for s in S]
    T = [linalg.as_vector(t, G.shape[0]) for t in T]
    S = [s for s in S if linalg.norm(G, s) > 0.0]
    T = [t for t in T if linalg.norm(G, t) > 0.0]
    if not S or not T:
        raise ZeroVector("each set needs a nonzero vector")
    return min(vector_angle(G, s, t) for s in S for t in T)
