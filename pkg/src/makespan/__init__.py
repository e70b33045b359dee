"""Exact workbench for makespan scheduling on identical parallel machines.

The package models instances and schedules with exact integer arithmetic,
exposes the lazy solution-space tree over job-to-machine assignments
(enumeration, path walks, closed-form counts, DOT rendering), solves
instances exactly by full enumeration or pruned search, verifies scheduling
certificates in polynomial time, and carries the equal-sum partition
reduction plus the multi-user scheduling model.
"""

from .model import (
    Instance,
    InvalidInstance,
    InvalidMachineIndex,
    InvalidSchedule,
    LengthMismatch,
    NotTwoMachines,
    Schedule,
    SchedulingError,
    is_essential,
    job_sets,
    loads,
    make_instance,
    makespan,
    schedule_from_job_sets,
    theoretical_opt,
)
from .reductions import (
    CoverageMismatch,
    MumpspInstance,
    OrderedSchedule,
    PartitionInstance,
    ZeroWeight,
    decide_partition,
    mpsp_to_mumpsp,
    mumpsp_flatten,
    mumpsp_user_makespans,
    partition_to_2psp,
    schedule_to_partition,
    subset_sum_oracle,
)
from .solver import (
    BudgetExceeded,
    MsOutcome,
    SolveResult,
    branch_and_bound,
    brute_force_opt,
    certificate_strategy,
    exhaustive_strategy,
    magic_schedule,
    random_strategy,
)
from .tree import (
    DomainError,
    LeafHasNoChildren,
    TooLarge,
    TreeNode,
    children,
    count_essential_exact,
    count_essential_formula,
    count_nodes,
    count_partial,
    count_schedules,
    leaves,
    root,
    to_dot,
    walk_path,
)
from .verifier import (
    ACCEPT,
    REJECT_ABOVE_THRESHOLD,
    REJECT_INVALID_SCHEDULE,
    REJECT_WRONG_MAKESPAN,
    Certificate,
    Verdict,
    decide,
    prove,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "ACCEPT",
    "BudgetExceeded",
    "Certificate",
    "CoverageMismatch",
    "DomainError",
    "Instance",
    "InvalidInstance",
    "InvalidMachineIndex",
    "InvalidSchedule",
    "LeafHasNoChildren",
    "LengthMismatch",
    "MsOutcome",
    "MumpspInstance",
    "NotTwoMachines",
    "OrderedSchedule",
    "PartitionInstance",
    "REJECT_ABOVE_THRESHOLD",
    "REJECT_INVALID_SCHEDULE",
    "REJECT_WRONG_MAKESPAN",
    "Schedule",
    "SchedulingError",
    "SolveResult",
    "TooLarge",
    "TreeNode",
    "Verdict",
    "ZeroWeight",
    "branch_and_bound",
    "brute_force_opt",
    "certificate_strategy",
    "children",
    "count_essential_exact",
    "count_essential_formula",
    "count_nodes",
    "count_partial",
    "count_schedules",
    "decide",
    "decide_partition",
    "exhaustive_strategy",
    "is_essential",
    "job_sets",
    "leaves",
    "loads",
    "magic_schedule",
    "make_instance",
    "makespan",
    "mpsp_to_mumpsp",
    "mumpsp_flatten",
    "mumpsp_user_makespans",
    "partition_to_2psp",
    "prove",
    "random_strategy",
    "root",
    "schedule_from_job_sets",
    "schedule_to_partition",
    "subset_sum_oracle",
    "theoretical_opt",
    "to_dot",
    "verify_certificate",
    "walk_path",
]
