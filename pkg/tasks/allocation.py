"""
Biased min-work task allocation between two agents and its game-interleaved
de-randomization, where each round's bias bit is the xor of both agents' bits.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, TypeAlias

from common.constants import TASK_BIAS
from common.errors import RangeError, ValidationError
from modgame.game import outcome_sum

# times[agent - 1][task - 1]: agents are 1 and 2, tasks are 1..m
TimeMatrix: TypeAlias = tuple[tuple[Fraction, ...], tuple[Fraction, ...]]


def _as_matrix(rows: Sequence[Sequence[Fraction | int]], m: int, path: str) -> TimeMatrix:
    if len(rows) != 2:
        raise ValidationError("time matrices have exactly two rows", path)
    matrix: list[tuple[Fraction, ...]] = []
    agent: int
    row: Sequence[Fraction | int]
    for agent, row in enumerate(rows):
        if len(row) != m:
            raise ValidationError(f"expected {m} task times", f"{path}[{agent}]")
        times: tuple[Fraction, ...] = tuple(Fraction(t) for t in row)
        task: int
        value: Fraction
        for task, value in enumerate(times):
            if value <= 0:
                raise ValidationError(f"task time must be positive, got {value}", f"{path}[{agent}][{task}]")
        matrix.append(times)
    return matrix[0], matrix[1]


@dataclass(slots=True, frozen=True)
class TaskInstance:
    """
    Two agents, m tasks, declared and (optionally) true processing times.

    Attributes
    ----------
    m : int
        Number of tasks.
    declared_times : TimeMatrix
        Reported t^i_j, agent-major.
    true_times : TimeMatrix
        Actual times; defaults to the declared ones.
    """

    m: int
    declared_times: TimeMatrix
    true_times: TimeMatrix = field(default=((), ()))

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValidationError("task count must be non-negative", "$.m")
        object.__setattr__(self, "declared_times", _as_matrix(self.declared_times, self.m, "$.t"))
        if self.true_times == ((), ()) and self.m > 0:
            object.__setattr__(self, "true_times", self.declared_times)
        else:
            object.__setattr__(self, "true_times", _as_matrix(self.true_times, self.m, "$.true"))

    def declared(self, agent: int, task: int) -> Fraction:
        """Declared time of `agent` (1 or 2) on `task` (1-based)."""
        return self.declared_times[agent - 1][task - 1]

    def with_report(self, agent: int, task: int, value: Fraction) -> "TaskInstance":
        """
        Copy of this instance where one declared time is replaced; true times
        are kept.
        """
        rows: list[list[Fraction]] = [list(row) for row in self.declared_times]
        rows[agent - 1][task - 1] = value
        return TaskInstance(self.m, (tuple(rows[0]), tuple(rows[1])), self.true_times)


@dataclass(slots=True, frozen=True)
class TaskOutcome:
    """
    Result of one run of the allocation.

    Attributes
    ----------
    a1 : frozenset[int]
        Tasks (1-based) allocated to agent 1.
    a2 : frozenset[int]
        Tasks allocated to agent 2.
    p1 : Fraction
        Payment to agent 1, in hours.
    p2 : Fraction
        Payment to agent 2, in hours.
    """

    a1: frozenset[int]
    a2: frozenset[int]
    p1: Fraction
    p2: Fraction

    def tasks(self, agent: int) -> frozenset[int]:
        """Tasks allocated to `agent`."""
        return self.a1 if agent == 1 else self.a2

    def payment(self, agent: int) -> Fraction:
        """Payment to `agent`."""
        return self.p1 if agent == 1 else self.p2


def biased_min_work(instance: TaskInstance, bits: Sequence[int]) -> TaskOutcome:
    """
    Run biased min-work with the given bias bits.

    In round j the favoured agent is i = 1 + b_j. They get task j if their
    declared time is at most 4/3 of the other agent's, paid 4/3 of the other
    agent's time; otherwise the other agent gets it, paid 3/4 of the favoured
    agent's time.

    Parameters
    ----------
    instance : TaskInstance
        The declared times.
    bits : Sequence[int]
        One bias bit per task.

    Returns
    -------
    TaskOutcome
        The allocation and payments.

    Raises
    ------
    ValidationError
        If the number of bits differs from the number of tasks.
    RangeError
        If a bit is not 0 or 1.
    """
    if len(bits) != instance.m:
        raise ValidationError(f"expected {instance.m} bits, got {len(bits)}", "$.bits")

    allocated: dict[int, set[int]] = {1: set(), 2: set()}
    payments: dict[int, Fraction] = {1: Fraction(0), 2: Fraction(0)}
    task: int
    bit: int
    for task, bit in enumerate(bits, start=1):
        if bit not in (0, 1):
            raise RangeError(f"bit for task {task} must be 0 or 1, got {bit}", agent=task, value=bit)
        favoured: int = 1 + bit
        other: int = 3 - favoured
        if instance.declared(favoured, task) <= TASK_BIAS * instance.declared(other, task):
            allocated[favoured].add(task)
            payments[favoured] += TASK_BIAS * instance.declared(other, task)
        else:
            allocated[other].add(task)
            payments[other] += instance.declared(favoured, task) / TASK_BIAS

    return TaskOutcome(frozenset(allocated[1]), frozenset(allocated[2]), payments[1], payments[2])


def xor_bits(bit_pairs: Sequence[Sequence[int]]) -> list[int]:
    """
    Play one parity game per round.

    Parameters
    ----------
    bit_pairs : Sequence[Sequence[int]]
        (agent 1 bit, agent 2 bit) for every round.

    Returns
    -------
    list[int]
        The xor of each pair.
    """
    bits: list[int] = []
    round_index: int
    pair: Sequence[int]
    for round_index, pair in enumerate(bit_pairs):
        if len(pair) != 2:
            raise ValidationError("each round needs exactly two bits", f"$.bits[{round_index}]")
        bits.append(outcome_sum(list(pair), 2))
    return bits


def derand_biased_min_work(instance: TaskInstance, bit_pairs: Sequence[Sequence[int]]) -> TaskOutcome:
    """
    Biased min-work where each round's bit is the xor of the two agents' bits.

    Rounds are independent, so running the xor games up front and then the
    allocation gives the same result as interleaving them.

    Parameters
    ----------
    instance : TaskInstance
        The declared times.
    bit_pairs : Sequence[Sequence[int]]
        Both agents' bits for each round.

    Returns
    -------
    TaskOutcome
        Same as biased_min_work on the xor bits.
    """
    if len(bit_pairs) != instance.m:
        raise ValidationError(f"expected {instance.m} bit pairs, got {len(bit_pairs)}", "$.bits")
    return biased_min_work(instance, xor_bits(bit_pairs))


def agent_utility(outcome: TaskOutcome, agent: int, true_times: TimeMatrix) -> Fraction:
    """
    Payment less the true work performed.

    Parameters
    ----------
    outcome : TaskOutcome
        The allocation and payments.
    agent : int
        1 or 2.
    true_times : TimeMatrix
        True processing times.

    Returns
    -------
    Fraction
        p_agent minus the agent's true time on its tasks.
    """
    if agent not in (1, 2):
        raise RangeError(f"agent must be 1 or 2, got {agent}", agent=agent)
    work: Fraction = sum((true_times[agent - 1][task - 1] for task in outcome.tasks(agent)), Fraction(0))
    return outcome.payment(agent) - work
