"""
Incentive checks for biased min-work: strong truthfulness for fixed bits,
individual rationality, and that both agents want to win every round.
"""

from fractions import Fraction
from typing import Sequence

from common.constants import TASK_BIAS
from common.errors import RangeError
from common.verdict import Verdict
from tasks.allocation import TaskInstance, TaskOutcome, agent_utility, biased_min_work

MISREPORT_EPSILON: Fraction = Fraction(1, 1000)


def misreport_grid(instance: TaskInstance, agent: int, task: int) -> list[Fraction]:
    """
    Candidate reports for one agent on one task, including the pivotal values
    4/3 and 3/4 of the other agent's declared time, each nudged either way.

    Parameters
    ----------
    instance : TaskInstance
        The instance.
    agent : int
        1 or 2.
    task : int
        1-based task.

    Returns
    -------
    list[Fraction]
        Positive candidate reports, sorted.
    """
    own: Fraction = instance.true_times[agent - 1][task - 1]
    other: Fraction = instance.declared(3 - agent, task)
    pivots: list[Fraction] = [TASK_BIAS * other, other / TASK_BIAS, other]
    grid: set[Fraction] = {own, own / 2, own * 2}
    pivot: Fraction
    for pivot in pivots:
        grid.update({pivot, pivot - MISREPORT_EPSILON, pivot + MISREPORT_EPSILON})
    return sorted(value for value in grid if value > 0)


def find_profitable_misreport(instance: TaskInstance, bits: Sequence[int]) -> Verdict:
    """
    Check that, with the bits known in advance, no agent gains by changing any
    single declared time to a value from misreport_grid.

    Parameters
    ----------
    instance : TaskInstance
        A truthful instance (declared equals true).
    bits : Sequence[int]
        The fixed bias bits.

    Returns
    -------
    Verdict
        Failing verdicts name the agent, task, report and gain.
    """
    truthful: TaskOutcome = biased_min_work(instance, bits)
    checked: int = 0
    agent: int
    for agent in (1, 2):
        baseline: Fraction = agent_utility(truthful, agent, instance.true_times)
        task: int
        for task in range(1, instance.m + 1):
            report: Fraction
            for report in misreport_grid(instance, agent, task):
                checked += 1
                lied: TaskOutcome = biased_min_work(instance.with_report(agent, task, report), bits)
                gain: Fraction = agent_utility(lied, agent, instance.true_times) - baseline
                if gain > 0:
                    return Verdict.failure(
                        "strong-truthfulness",
                        {"agent": agent, "task": task, "report": report, "gain": gain},
                        checked,
                    )
    return Verdict.success("strong-truthfulness", checked)


def individually_rational(instance: TaskInstance, bits: Sequence[int]) -> Verdict:
    """
    Check every allocated task pays its agent at least their true time on it.

    Parameters
    ----------
    instance : TaskInstance
        A truthful instance.
    bits : Sequence[int]
        The bias bits.

    Returns
    -------
    Verdict
        Failing verdicts name the agent and the task.
    """
    task: int
    bit: int
    for task, bit in enumerate(bits, start=1):
        single: TaskInstance = TaskInstance(
            1,
            ((instance.declared(1, task),), (instance.declared(2, task),)),
            ((instance.true_times[0][task - 1],), (instance.true_times[1][task - 1],)),
        )
        outcome: TaskOutcome = biased_min_work(single, [bit])
        agent: int
        for agent in (1, 2):
            if agent_utility(outcome, agent, single.true_times) < 0:
                return Verdict.failure("individual-rationality", {"agent": agent, "task": task}, task)
    return Verdict.success("individual-rationality", len(bits))


def round_utility(instance: TaskInstance, task: int, bit: int, agent: int) -> Fraction:
    """Utility `agent` draws from round `task` alone when the round's bit is `bit`."""
    single: TaskInstance = TaskInstance(
        1,
        ((instance.declared(1, task),), (instance.declared(2, task),)),
        ((instance.true_times[0][task - 1],), (instance.true_times[1][task - 1],)),
    )
    return agent_utility(biased_min_work(single, [bit]), agent, single.true_times)


def winning_weakly_dominates(instance: TaskInstance, task: int) -> Verdict:
    """
    Check that under truthful reports each agent does at least as well when
    round `task` favours them as when it favours the other agent. Agent 1 is
    favoured by bit 0 and agent 2 by bit 1.

    Parameters
    ----------
    instance : TaskInstance
        A truthful instance.
    task : int
        1-based round.

    Returns
    -------
    Verdict
        Failing verdicts carry the agent and both utilities.
    """
    if not 1 <= task <= instance.m:
        raise RangeError(f"task {task} outside [1, {instance.m}]", value=task)
    agent: int
    for agent in (1, 2):
        winning: Fraction = round_utility(instance, task, agent - 1, agent)
        losing: Fraction = round_utility(instance, task, 2 - agent, agent)
        if winning < losing:
            return Verdict.failure(
                "winning-dominates",
                {"agent": agent, "task": task, "winning": winning, "losing": losing},
                agent,
            )
    return Verdict.success("winning-dominates", 2)
