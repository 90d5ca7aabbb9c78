# %% [markdown]
# # How much does rounding cost?
#
# For each epsilon we compare the grid value of the rounded solver with the
# exact optimum.  The certified bound is ``opt <= value * (1 + eps)^B``; in
# practice the loss is far smaller.

# %%
from fractions import Fraction

import numpy as np

from lmvt import random_instance, solve_exact, solve_fptas

rng = np.random.default_rng(0)
instances = [random_instance(2, 8, 50, rng) for _ in range(40)]
exact = [solve_exact(inst) for inst in instances]

print(" eps   worst ratio  mean ratio  certified  mean states (exact -> fptas)")
for eps in (Fraction(1), Fraction(1, 2), Fraction(1, 4), Fraction(1, 10)):
    ratios, states = [], []
    for inst, ex in zip(instances, exact):
        approx = solve_fptas(inst, eps)
        ratios.append(approx.value / ex.value if ex.value else 1.0)
        states.append((ex.states_visited, approx.states_visited))
    certified = float((1 + eps) ** -8)
    se, sf = np.mean(states, axis=0)
    print(f"{str(eps):>5}  {min(ratios):11.3f}  {np.mean(ratios):10.3f}  {certified:9.3f}"
          f"  {se:8.0f} -> {sf:.0f}")

# %% [markdown]
# To ask for a target loss instead of an epsilon, ``epsilon_for_ratio``
# picks the coarsest ``1/q`` whose certified bound meets it.

# %%
from lmvt import epsilon_for_ratio

for delta in ("1/10", "1/4", "1/2"):
    print(delta, "->", epsilon_for_ratio(delta, 8))
