# %% [markdown]
# # Quickstart: sharing slots between videos
#
# Three videos compete for six transmission slots.  Each slot can carry a
# different number of bits to each video.  We want the allocation whose
# worst-served video gets as many bits as possible.

# %%
import numpy as np

from lmvt import (Instance, bits_received, brute_force_opt, solve_exact,
                  solve_fptas, solve_greedy)

rates = np.array([
    [4, 1, 3, 0, 2, 5],
    [2, 2, 2, 2, 2, 2],
    [0, 6, 1, 4, 3, 1],
])
inst = Instance(rates)
print(rates)

# %% [markdown]
# The exact solver walks the slots one at a time and keeps only the maximal
# achievable bit vectors.

# %%
exact = solve_exact(inst)
print("optimum:", exact.value)
print("allocation:", exact.allocation.assign)
print("bits per video:", bits_received(inst, exact.allocation))
print("frontier size per layer:", exact.layer_sizes)

# %% [markdown]
# Brute force over all 4^6 assignments agrees.

# %%
print("brute force:", brute_force_opt(inst).value)

# %% [markdown]
# The rounded solver keeps coordinates on a geometric grid.  Its grid value
# is a certified lower bound; the allocation it returns often does better.

# %%
for eps in ("1/10", "1/2", "1"):
    r = solve_fptas(inst, eps)
    print(f"eps={eps:>4}  grid value={r.value:>2}  true value={r.true_value:>2}  "
          f"states={r.states_visited}")

# %%
greedy = solve_greedy(inst)
print("greedy:", greedy.value, greedy.allocation.assign)
