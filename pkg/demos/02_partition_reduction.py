# %% [markdown]
# # Partition hides inside two-video instances
#
# Give both videos the same rate ``x_j`` in slot ``j``.  Both can reach
# ``sum(x) / 2`` bits exactly when the numbers split into two equal halves,
# so deciding the two-video case is as hard as Partition.

# %%
import numpy as np

from lmvt import (lmvt_to_partition_witness, partition_decide,
                  partition_to_lmvt, solve_exact)

for S in ([3, 1, 1, 2, 2, 1], [1, 1, 3], [5, 5, 4, 3, 3], [7, 2, 2]):
    inst, k = partition_to_lmvt(S)
    report = solve_exact(inst)
    line = f"S={S}: threshold {k}, optimum {report.value}, partition exists: {partition_decide(S)}"
    if report.value >= k:
        left, right = lmvt_to_partition_witness(S, report.allocation)
        line += f" -> {left} | {right}"
    print(line)

# %% [markdown]
# Cross-check on random multisets.

# %%
rng = np.random.default_rng(1)
agree = 0
for _ in range(200):
    S = list(rng.integers(1, 15, size=rng.integers(1, 10)))
    inst, k = partition_to_lmvt(S)
    agree += partition_decide(S) == (solve_exact(inst).value >= k)
print(f"{agree}/200 agree")
