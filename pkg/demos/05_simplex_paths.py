"""
Simplex walks under three pivot rules
=====================================

Walk along edges, always improving the objective, and compare the number
of steps with the graph distance to the optimum.
"""

import random

from hirschkit.generators import random_polytope
from hirschkit.simplexlab import RULES, LPInstance, path_stats, simplex_walk

rng = random.Random(0)
runs = []
for seed in range(30):
    P = random_polytope(3, 12, seed)
    inst = LPInstance(P, tuple(rng.randint(-5, 5) or 1 for _ in range(3)))
    for rule in RULES:
        runs.append((inst, simplex_walk(inst, 0, rule, seed)))

inst, trace = max(runs, key=lambda r: r[1].length)
print(f"longest walk ({trace.rule}):")
print("\n".join(trace.lines()))

stats = path_stats(runs)
print(f"{stats['count']} walks, max steps/m = {stats['max_ratio']:.2f}, "
      f"mean = {stats['mean_ratio']:.2f}, longer than 3m: {len(stats['flagged'])}")
