"""Lazy solution-space tree over job-to-machine assignments.

Level b of the tree holds one node per assignment of the first b jobs, so for
n jobs on m machines the tree is a perfect m-ary tree of height n with m^n
leaves, one per complete schedule.  Each node carries its assignment prefix
together with the machine-load vector that prefix induces; a leaf's weight
(the maximum entry of its load vector) is exactly the makespan of the
schedule it encodes.

The tree is never materialized.  Nodes are generated on demand from
(instance, prefix) and discarded, so enumeration and path walks run with
memory proportional to a single root-to-leaf path.  Disjoint subtrees are
addressed by their prefixes and may be explored by independent workers.

The closed-form counters for nodes, schedules, strict prefixes, and
machine-covering (essential) schedules live here next to the enumeration they
describe.  Note that ``count_essential_formula`` (m^n - m) removes only the m
single-machine schedules and therefore overcounts for m >= 3; the
inclusion-exclusion surjection count ``count_essential_exact`` is the true
value, and the two coincide exactly when m = 2.  Both are exposed on purpose.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .model import (
    Instance,
    Schedule,
    SchedulingError,
    check_assignment,
)

DEFAULT_NODE_CAP = 4096


class LeafHasNoChildren(SchedulingError):
    """children() was called on a node at the leaf level."""


class DomainError(SchedulingError):
    """Counting arguments outside m >= 2, n >= 1 (or h >= 0)."""


class TooLarge(SchedulingError):
    """Requested rendering would exceed the configured node cap."""


@dataclass(frozen=True, slots=True)
class TreeNode:
    """One tree configuration: the first `level` jobs assigned, plus the load
    vector those assignments induce."""

    level: int
    assignment_prefix: tuple[int, ...]
    load_vector: tuple[int, ...]

    @property
    def weight(self) -> int:
        """Largest current machine load; for a leaf this is the makespan."""
        return max(self.load_vector)

    def is_leaf(self, instance: Instance) -> bool:
        return self.level == instance.job_count


def root(instance: Instance) -> TreeNode:
    """Initial configuration: nothing assigned, all loads zero."""
    return TreeNode(0, (), (0,) * instance.machine_count)


def children(instance: Instance, node: TreeNode) -> list[TreeNode]:
    """The m one-job extensions of `node`, ordered machine 1 first.

    Child j assigns the next job to machine j and adds its processing time to
    that machine's load.  Raises LeafHasNoChildren at the leaf level.
    """
    if node.level >= instance.job_count:
        raise LeafHasNoChildren(f"node at level {node.level} is a leaf")
    p = instance.processing_times[node.level]
    out = []
    for j in range(instance.machine_count):
        grown = list(node.load_vector)
        grown[j] += p
        out.append(
            TreeNode(node.level + 1, node.assignment_prefix + (j + 1,), tuple(grown))
        )
    return out


def leaves(instance: Instance) -> Iterator[Schedule]:
    """Yield every complete schedule exactly once, in lexicographic order of
    assignment vectors (machine 1 branch first).

    Lazy: O(n) state per consumer, never materializes the m^n leaves.
    """
    return iter(
        itertools.product(
            range(1, instance.machine_count + 1), repeat=instance.job_count
        )
    )


def walk_path(instance: Instance, schedule: Sequence[int]) -> list[TreeNode]:
    """The unique root-to-leaf node sequence selecting branch schedule[i] at
    level i; n+1 nodes in total.

    The final node's load vector equals loads(instance, schedule).  Raises
    LengthMismatch / InvalidMachineIndex for assignments that are not valid
    schedules.
    """
    check_assignment(instance, schedule)
    current = [0] * instance.machine_count
    path = [root(instance)]
    prefix = tuple(schedule)
    for level, machine in enumerate(schedule, 1):
        current[machine - 1] += instance.processing_times[level - 1]
        path.append(TreeNode(level, prefix[:level], tuple(current)))
    return path


def _check_counting_domain(machine_count: int, n: int, what: str) -> None:
    if machine_count < 2:
        raise DomainError(f"machine count must be >= 2, got {machine_count}")
    if n < 1:
        raise DomainError(f"{what} must be >= 1, got {n}")


def count_nodes(machine_count: int, height: int) -> int:
    """Total nodes of the perfect m-ary tree of the given height:
    (m^(h+1) - 1) / (m - 1), evaluated exactly."""
    if machine_count < 2:
        raise DomainError(f"machine count must be >= 2, got {machine_count}")
    if height < 0:
        raise DomainError(f"height must be >= 0, got {height}")
    return (machine_count ** (height + 1) - 1) // (machine_count - 1)


def count_schedules(machine_count: int, job_count: int) -> int:
    """Number of complete schedules: m^n."""
    _check_counting_domain(machine_count, job_count, "job count")
    return machine_count**job_count


def count_partial(machine_count: int, job_count: int) -> int:
    """Number of strict, non-empty prefix assignments (levels 1..n-1):
    (m^n - m) / (m - 1)."""
    _check_counting_domain(machine_count, job_count, "job count")
    return (machine_count**job_count - machine_count) // (machine_count - 1)


def count_essential_formula(machine_count: int, job_count: int) -> int:
    """Closed form m^n - m: all schedules minus the m single-machine ones.

    Only the m = 2 case equals the true machine-covering count; for m >= 3
    this overcounts because schedules can leave a machine idle without being
    single-machine.  See count_essential_exact.
    """
    _check_counting_domain(machine_count, job_count, "job count")
    return machine_count**job_count - machine_count


def count_essential_exact(machine_count: int, job_count: int) -> int:
    """Number of schedules that use every machine, i.e. surjections from n
    jobs onto m machines, by inclusion-exclusion:
    sum_{j=0..m} (-1)^j C(m,j) (m-j)^n."""
    _check_counting_domain(machine_count, job_count, "job count")
    m, n = machine_count, job_count
    return sum((-1) ** j * comb(m, j) * (m - j) ** n for j in range(m + 1))


def _node_id(node: TreeNode) -> str:
    return "r" + "".join(f"-{j}" for j in node.assignment_prefix)


def _node_label(instance: Instance, node: TreeNode) -> str:
    n = instance.job_count
    parts = [f"J{i}/M{j}" for i, j in enumerate(node.assignment_prefix, 1)]
    if n <= 8:
        parts += [f"J{i}/-" for i in range(node.level + 1, n + 1)]
    elif node.level < n:
        parts.append(f"+{n - node.level} unassigned")
    config = " ".join(parts)
    load = "loads (" + ", ".join(str(v) for v in node.load_vector) + ")"
    return f"{config}\\n{load}"


def to_dot(
    instance: Instance, max_level: int, node_cap: int = DEFAULT_NODE_CAP
) -> str:
    """Graphviz DOT rendering of the tree down to `max_level`.

    Node labels show the assignment configuration and the load vector; edge
    labels show the job-to-machine action.  Refuses with TooLarge when the
    widest rendered level would exceed `node_cap` nodes.
    """
    n = instance.job_count
    if max_level < 0 or max_level > n:
        raise DomainError(f"max_level must be in 0..{n}, got {max_level}")
    if instance.machine_count**max_level > node_cap:
        raise TooLarge(
            f"{instance.machine_count}^{max_level} leaves exceed the node cap "
            f"of {node_cap}"
        )
    lines = [
        "digraph schedule_tree {",
        "  rankdir=TB;",
        "  node [shape=box];",
    ]

    def emit(node: TreeNode) -> None:
        nid = _node_id(node)
        lines.append(f'  "{nid}" [label="{_node_label(instance, node)}"];')
        if node.level < max_level:
            for child in children(instance, node):
                action = f"J{node.level + 1}->M{child.assignment_prefix[-1]}"
                lines.append(f'  "{nid}" -> "{_node_id(child)}" [label="{action}"];')
                emit(child)

    emit(root(instance))
    lines.append("}")
    return "\n".join(lines) + "\n"
