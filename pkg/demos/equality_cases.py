"""
Building equality cases
=======================

For a random complex Gram pair we construct vector pairs that attain
the upper and lower half-angle bounds, then nudge one vector and watch
the ratio fall away from the bound.
"""

import numpy as np

from wielandt import analyze, classify, construct_kolotilina, construct_main, kolotilina_sides
from wielandt.angles import half_tan
from wielandt.oracle import make_rng, random_pair

pair = random_pair(make_rng(11), 4, True)
spec = analyze(pair)
print("kappa =", spec.kappa)

for phi in (0.3, 1.0, 2.5):
    for side in ("right", "left"):
        ep = construct_main(spec, pair, phi, side)
        cl = classify(spec, pair, ep.u, ep.v)
        print(f"phi={phi:.1f} {side:5s} ratio={ep.achieved_ratio:.12f}  "
              f"right={cl.main_right} left={cl.main_left}")

# small in-plane nudge of v
ep = construct_main(spec, pair, 1.0, "right")
d = ep.u - pair.inner1(ep.u, ep.v).real / pair.norm1(ep.v) ** 2 * ep.v
for eps in (1e-1, 1e-2, 1e-3):
    v2 = ep.v + eps * pair.norm1(ep.v) / pair.norm1(d) * d
    r = half_tan(pair.G2, ep.u, v2) / half_tan(pair.G1, ep.u, v2)
    print(f"eps={eps:g}  kappa - ratio = {spec.kappa - r:.3e}")

# mixtures of extreme eigenvectors turn the generalized bound into an equality
B = np.diag([4.0, 1.0])
for c in (0.0, 0.3, 0.6, 0.9):
    x, y = construct_kolotilina(B, c)
    print("cos =", c, " sides =", kolotilina_sides(B, x, y))
