# %% [markdown]
# # Frontier versus full table
#
# A full table over every target vector has ``prod(b_max + 1)`` cells per
# layer.  Achievability is downward closed, so storing only the maximal
# vectors loses nothing.  Here is how small that frontier stays.

# %%
import math

import numpy as np

from lmvt import b_max, build_grid, random_instance
from lmvt.exact_dp import run_layers

rng = np.random.default_rng(5)
for n, B in ((2, 8), (3, 8), (4, 6)):
    inst = random_instance(n, B, 20, rng)
    full = math.prod(t + 1 for t in b_max(inst))
    exact = run_layers(inst)
    grid = build_grid(inst, "1/2")
    rounded = run_layers(inst, update=grid.snap)
    print(f"n={n} B={B}: full table {full:>9} cells/layer, "
          f"largest exact frontier {max(len(l.frontier) for l in exact):>4}, "
          f"largest rounded frontier {max(len(l.frontier) for l in rounded):>3} "
          f"(grid bound {grid.state_bound})")
