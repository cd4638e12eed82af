"""
Comparing bounds on the cosine of the image angle
==================================================

Sweep the input angle and print several upper bounds on |cos| of the
transformed angle side by side. Smaller is sharper.
"""

import numpy as np

from wielandt import analyze, evaluate_angle, GramPair, yeh_bound
from wielandt.bounds import cos_interval

pair = GramPair(np.eye(2), np.diag([1.0, 4.0]))
spec = analyze(pair)

print(" phi     TAN lower  TAN upper")
for phi in np.linspace(0.2, np.pi - 0.2, 7):
    lo, hi = evaluate_angle(spec, phi)["TAN"]
    print(f"{phi:5.2f}  {lo:9.5f}  {hi:9.5f}")

# where the older cosine bound applies, ours is below it
print("\n  c     ours     Yeh")
for c in np.linspace(0.0, 1 / spec.kappa**2, 6):
    _, yeh = yeh_bound(spec, c)
    print(f"{c:5.3f}  {cos_interval(spec, c)[1]:.5f}  {yeh:.5f}")
