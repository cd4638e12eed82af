"""
Angle distortion on a two-dimensional example
==============================================

Two inner products on R^2: the Euclidean one, and the one with Gram
matrix diag(1, 4). We compute the pencil constants and look at how one
orthogonal pair of vectors is seen by the second product.
"""

import numpy as np

from wielandt import GramPair, analyze, e_membership, full_report, half_tan

pair = GramPair(np.eye(2), np.diag([1.0, 4.0]))
spec = analyze(pair)
print(spec.summary())

# orthogonal for the first product, with angle pi/2
u = np.array([1.0, 1.0]) / np.sqrt(2)
v = np.array([1.0, -1.0]) / np.sqrt(2)
rep = full_report(pair, u, v)
print("phi =", rep.phi, " psi =", rep.psi, " cos psi =", rep.cos_psi)

# the half-angle tangent grows by exactly kappa here
print("tan(psi/2) / tan(phi/2) =", half_tan(pair.G2, u, v) / half_tan(pair.G1, u, v))
print("pair sits on the extremal set:", e_membership(spec, pair, u, v).is_member)

# a generic pair distorts less
w = np.array([1.0, 0.2])
print("generic ratio:", half_tan(pair.G2, u, w) / half_tan(pair.G1, u, w))
