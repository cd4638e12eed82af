"""
Brute-force verification
========================

Run the randomized property suite and the ratio search on the bundled
matrix files. A deliberately wrong constant is caught.
"""

import dataclasses
import os

from wielandt import OracleConfig, analyze, ratio_extremes, run_suite
from wielandt.io import load_matrix_file

here = os.path.join(os.path.dirname(__file__), "data")
cfg = OracleConfig(seed=42, trials=500, grid_steps=128)

for name in sorted(os.listdir(here)):
    pair = load_matrix_file(os.path.join(here, name)).pair()
    spec = analyze(pair)
    suite = run_suite(pair, cfg, spec)
    rep = ratio_extremes(spec, pair, cfg)
    print(f"{name:18s} kappa={spec.kappa:.6f} search max={rep.empirical_max_ratio:.6f} "
          f"suite={'ok' if suite.passed else suite.violations}")

# inflate m by ten percent: the TAN bound is now too tight and gets flagged
pair = load_matrix_file(os.path.join(here, "fix_a.json")).pair()
bad = dataclasses.replace(analyze(pair), m=1.1)
print("corrupted:", run_suite(pair, cfg, bad).violations)
