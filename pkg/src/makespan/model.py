"""Problem instances, schedules, and exact load arithmetic.

An instance is a count of identical machines plus a list of positive integer
processing times; job i (1-based) is the i-th entry of that list.  A schedule
is a total assignment of jobs to machines, stored as one machine index per
job, so disjointness and coverage of the induced per-machine job sets hold by
construction.  All load arithmetic is exact integer arithmetic, which keeps
every downstream equality check bit-exact.

Machine indices are 1-based everywhere in the public surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

# A complete schedule: entry i-1 names the machine (1..m) running job i.
Schedule = tuple[int, ...]


class SchedulingError(Exception):
    """Base class for every error raised by this package."""


class InvalidInstance(SchedulingError):
    """Instance parameters violate the model (m < 2, no jobs, or p < 1)."""


class InvalidSchedule(SchedulingError):
    """Per-machine job sets are not a disjoint cover of the job list."""


class LengthMismatch(SchedulingError):
    """An assignment's length differs from the instance's job count."""


class InvalidMachineIndex(SchedulingError):
    """An assignment entry falls outside 1..machine_count."""


class NotTwoMachines(SchedulingError):
    """Operation is defined for exactly two machines."""


def _positive_int(value: object, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInstance(f"{what} must be an integer, got {value!r}")
    if value < 1:
        raise InvalidInstance(f"{what} must be >= 1, got {value}")
    return value


@dataclass(frozen=True, slots=True)
class Instance:
    """m identical machines plus one positive processing time per job.

    Any job count n >= 1 is accepted; n is not required to exceed the machine
    count (a single job on many machines is a valid, if lopsided, instance).
    """

    machine_count: int
    processing_times: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "processing_times", tuple(self.processing_times))
        if isinstance(self.machine_count, bool) or not isinstance(self.machine_count, int):
            raise InvalidInstance(f"machine count must be an integer, got {self.machine_count!r}")
        if self.machine_count < 2:
            raise InvalidInstance(f"need at least 2 machines, got {self.machine_count}")
        if not self.processing_times:
            raise InvalidInstance("need at least one job")
        for i, p in enumerate(self.processing_times, 1):
            _positive_int(p, f"processing time of job {i}")

    @property
    def job_count(self) -> int:
        return len(self.processing_times)

    @property
    def total_work(self) -> int:
        return sum(self.processing_times)


def make_instance(machine_count: int, processing_times: Iterable[int]) -> Instance:
    """Validate and build an :class:`Instance`.

    Raises InvalidInstance when machine_count < 2, the job list is empty, or
    any processing time is < 1.
    """
    return Instance(machine_count, tuple(processing_times))


def check_assignment(instance: Instance, assignment: Sequence[int]) -> None:
    """Raise LengthMismatch / InvalidMachineIndex unless `assignment` is a
    complete schedule for `instance`."""
    if len(assignment) != instance.job_count:
        raise LengthMismatch(
            f"assignment has {len(assignment)} entries, instance has "
            f"{instance.job_count} jobs"
        )
    m = instance.machine_count
    for pos, machine in enumerate(assignment, 1):
        if not 1 <= machine <= m:
            raise InvalidMachineIndex(
                f"job {pos} assigned to machine {machine}, valid range is 1..{m}"
            )


def loads(instance: Instance, schedule: Sequence[int]) -> list[int]:
    """Per-machine load vector: entry j-1 sums the times of jobs on machine j.

    The entries always sum to the instance's total work.
    """
    check_assignment(instance, schedule)
    out = [0] * instance.machine_count
    for p, machine in zip(instance.processing_times, schedule):
        out[machine - 1] += p
    return out


def makespan(instance: Instance, schedule: Sequence[int]) -> int:
    """Largest machine load under the given schedule."""
    return max(loads(instance, schedule))


def is_essential(instance: Instance, schedule: Sequence[int]) -> bool:
    """True when every machine runs at least one job."""
    check_assignment(instance, schedule)
    return len(set(schedule)) == instance.machine_count


def theoretical_opt(instance: Instance) -> Fraction:
    """Perfectly balanced makespan total_work / machine_count as an exact
    fraction.

    This is only a lower bound on the achievable makespan and is deliberately
    not rounded; the attainable optimum comes from the solvers.
    """
    return Fraction(instance.total_work, instance.machine_count)


def job_sets(instance: Instance, schedule: Sequence[int]) -> list[set[int]]:
    """Partition view of a schedule: 1-based job ids per machine.

    Derived from the assignment on demand, never stored.
    """
    check_assignment(instance, schedule)
    sets: list[set[int]] = [set() for _ in range(instance.machine_count)]
    for job, machine in enumerate(schedule, 1):
        sets[machine - 1].add(job)
    return sets


def schedule_from_job_sets(job_sets_: Sequence[Iterable[int]]) -> Schedule:
    """Build a schedule from per-machine job sets (machine j = entry j-1).

    The sets must be pairwise disjoint and cover 1..n exactly; raises
    InvalidSchedule otherwise.
    """
    assignment: dict[int, int] = {}
    for machine, jobs in enumerate(job_sets_, 1):
        for job in jobs:
            if job in assignment:
                raise InvalidSchedule(f"job {job} appears on more than one machine")
            assignment[job] = machine
    n = len(assignment)
    if set(assignment) != set(range(1, n + 1)):
        missing = sorted(set(range(1, n + 1)) - set(assignment))
        raise InvalidSchedule(f"job sets do not cover 1..{n} (first gap at {missing[:1]})")
    return tuple(assignment[job] for job in range(1, n + 1))
