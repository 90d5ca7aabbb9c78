"""Max-min slot allocation for lead-based multiple video transmission.

Exact and rounded layered dynamic programs, an exhaustive oracle, the
Partition reduction and a greedy baseline.
"""

from .core import (UNASSIGNED, Allocation, Instance, LeadFunction, SolveReport,
                   b_max, bits_received, decide_lead, objective,
                   random_instance)
from .errors import (CapacityError, InstanceShapeError, InvalidAllocationError,
                     InvalidWitnessError, LMVTError, StateBudgetError,
                     TooLargeForOracleError)
from .exact_dp import LayerSet, advance_layer, dominates, solve_exact
from .fptas import (ValueGrid, build_grid, epsilon_for_ratio, psi, snap_down,
                    solve_fptas)
from .oracle import OracleLimits, brute_force_opt, partition_decide
from .reductions import (PartitionInstance, constant_rate_opt,
                         lmvt_to_partition_witness, partition_to_lmvt,
                         solve_greedy)

__all__ = [
    "UNASSIGNED", "Allocation", "Instance", "LeadFunction", "SolveReport",
    "b_max", "bits_received", "decide_lead", "objective", "random_instance",
    "CapacityError", "InstanceShapeError", "InvalidAllocationError",
    "InvalidWitnessError", "LMVTError", "StateBudgetError",
    "TooLargeForOracleError",
    "LayerSet", "advance_layer", "dominates", "solve_exact",
    "ValueGrid", "build_grid", "epsilon_for_ratio", "psi", "snap_down",
    "solve_fptas",
    "OracleLimits", "brute_force_opt", "partition_decide",
    "PartitionInstance", "constant_rate_opt", "lmvt_to_partition_witness",
    "partition_to_lmvt", "solve_greedy",
]
