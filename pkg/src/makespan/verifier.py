"""One-shot prover/verifier exchange for scheduling certificates.

A certificate is a schedule plus the makespan its prover claims for it.  The
verifier replays the certificate as a root-to-leaf walk of the assignment
tree, carrying the load vector along the path, and accepts only when the walk
is valid, the claimed makespan equals the leaf weight, and the claim is
within the caller's threshold.  Verification costs O(n * m) time, independent
of the m^n solution space.

Thresholds are integers (every achievable makespan is one); callers holding
the fractional ideal bound should pass its ceiling.  ``decide`` answers the
threshold decision question exactly by solving, and ``prove`` plays the
prover role by emitting the optimal certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Instance, Schedule
from .solver import DEFAULT_LEAF_BUDGET, brute_force_opt

ACCEPT = "accept"
REJECT_INVALID_SCHEDULE = "reject_invalid_schedule"
REJECT_WRONG_MAKESPAN = "reject_wrong_makespan"
REJECT_ABOVE_THRESHOLD = "reject_above_threshold"

REASON_LENGTH_MISMATCH = "length_mismatch"
REASON_BAD_MACHINE_INDEX = "machine_index_out_of_range"


@dataclass(frozen=True, slots=True)
class Certificate:
    """A schedule plus the makespan claimed for it.  Nothing is validated at
    construction; checking the claim is the verifier's job."""

    schedule: Schedule
    claimed_makespan: int


@dataclass(frozen=True, slots=True)
class Verdict:
    """Exactly one verdict variant, selected by `code`; the remaining fields
    carry that variant's machine-readable detail."""

    code: str
    reason: str | None = None
    claimed: int | None = None
    actual: int | None = None
    threshold: int | None = None

    @property
    def accepted(self) -> bool:
        return self.code == ACCEPT

    @classmethod
    def accept(cls) -> "Verdict":
        return cls(ACCEPT)

    @classmethod
    def invalid_schedule(cls, reason: str) -> "Verdict":
        return cls(REJECT_INVALID_SCHEDULE, reason=reason)

    @classmethod
    def wrong_makespan(cls, claimed: int, actual: int) -> "Verdict":
        return cls(REJECT_WRONG_MAKESPAN, claimed=claimed, actual=actual)

    @classmethod
    def above_threshold(cls, actual: int, threshold: int) -> "Verdict":
        return cls(REJECT_ABOVE_THRESHOLD, actual=actual, threshold=threshold)

    def describe(self) -> str:
        if self.code == ACCEPT:
            return ACCEPT
        if self.code == REJECT_INVALID_SCHEDULE:
            return f"{self.code} reason={self.reason}"
        if self.code == REJECT_WRONG_MAKESPAN:
            return f"{self.code} claimed={self.claimed} actual={self.actual}"
        return f"{self.code} actual={self.actual} threshold={self.threshold}"


def verify_certificate(
    instance: Instance, cert: Certificate, threshold: int
) -> Verdict:
    """Check a certificate against an instance and a threshold.

    Accepts iff (a) the schedule is a valid root-to-leaf path (n entries, each
    in 1..m), (b) the claimed makespan equals the recomputed leaf weight, and
    (c) the claim is <= threshold.  Every failure is a verdict variant, never
    an exception.

    The walk below carries only the load vector down the path, so the check
    is O(n * m) time and O(m) extra space.
    """
    m = instance.machine_count
    times = instance.processing_times
    schedule = cert.schedule
    if len(schedule) != instance.job_count:
        return Verdict.invalid_schedule(REASON_LENGTH_MISMATCH)
    current = [0] * m
    for level, machine in enumerate(schedule):
        if not isinstance(machine, int) or isinstance(machine, bool) or not 1 <= machine <= m:
            return Verdict.invalid_schedule(REASON_BAD_MACHINE_INDEX)
        current[machine - 1] += times[level]
    actual = max(current)
    if cert.claimed_makespan != actual:
        return Verdict.wrong_makespan(cert.claimed_makespan, actual)
    if actual > threshold:
        return Verdict.above_threshold(actual, threshold)
    return Verdict.accept()


def prove(
    instance: Instance, leaf_budget: int = DEFAULT_LEAF_BUDGET
) -> Certificate:
    """Prover role: the optimal certificate, from the exhaustive solver.

    Always passes verify_certificate with threshold equal to its own claim.
    Propagates BudgetExceeded for instances beyond the solver budget.
    """
    result = brute_force_opt(instance, leaf_budget=leaf_budget)
    return Certificate(result.best_schedule, result.optimum)


def decide(
    instance: Instance, threshold: int, leaf_budget: int = DEFAULT_LEAF_BUDGET
) -> tuple[bool, Certificate | None]:
    """Decision question: does any schedule reach makespan <= threshold?

    Returns (True, witness certificate) or (False, None).  The witness is the
    optimal certificate, so it passes verify_certificate at the same
    threshold.  Monotone in the threshold.  Propagates BudgetExceeded.
    """
    result = brute_force_opt(instance, leaf_budget=leaf_budget)
    if result.optimum <= threshold:
        return True, Certificate(result.best_schedule, result.optimum)
    return False, None
