"""Exact makespan analytics for two-agent task allocation"""

import itertools
import logging
from fractions import Fraction

from common.constants import EXHAUSTIVE_MAX_TASKS
from common.errors import CapacityError
from tasks.allocation import TaskInstance, TaskOutcome, TimeMatrix, biased_min_work


def _guard(m: int) -> None:
    if m > EXHAUSTIVE_MAX_TASKS:
        raise CapacityError(
            f"{m} tasks exceeds the exhaustive limit of {EXHAUSTIVE_MAX_TASKS}; "
            "estimate with Monte Carlo trials (sim.run_trials) instead"
        )


def makespan(outcome: TaskOutcome, true_times: TimeMatrix) -> Fraction:
    """
    Completion time of the busier agent.

    Parameters
    ----------
    outcome : TaskOutcome
        The allocation.
    true_times : TimeMatrix
        True processing times.

    Returns
    -------
    Fraction
        max of both agents' true loads.
    """
    load_1: Fraction = sum((true_times[0][task - 1] for task in outcome.a1), Fraction(0))
    load_2: Fraction = sum((true_times[1][task - 1] for task in outcome.a2), Fraction(0))
    return max(load_1, load_2)


def expected_makespan_uniform(instance: TaskInstance) -> Fraction:
    """
    Average makespan of biased min-work over all 2^m bit vectors.

    Parameters
    ----------
    instance : TaskInstance
        Declared times drive the mechanism, true times measure the makespan.

    Returns
    -------
    Fraction
        The exact expectation under uniform bits.

    Raises
    ------
    CapacityError
        If m exceeds EXHAUSTIVE_MAX_TASKS.
    """
    _guard(instance.m)
    total: Fraction = Fraction(0)
    bits: tuple[int, ...]
    for bits in itertools.product((0, 1), repeat=instance.m):
        total += makespan(biased_min_work(instance, bits), instance.true_times)
    logging.debug("expected makespan over %d bit vectors", 2**instance.m)
    return total / 2**instance.m


def optimal_makespan(true_times: TimeMatrix) -> Fraction:
    """
    Smallest makespan over every partition of the tasks.

    Parameters
    ----------
    true_times : TimeMatrix
        True processing times.

    Returns
    -------
    Fraction
        The optimum.

    Raises
    ------
    CapacityError
        If there are more than EXHAUSTIVE_MAX_TASKS tasks.
    """
    m: int = len(true_times[0])
    _guard(m)
    best: Fraction | None = None
    owners: tuple[int, ...]
    for owners in itertools.product((0, 1), repeat=m):
        loads: list[Fraction] = [Fraction(0), Fraction(0)]
        task: int
        owner: int
        for task, owner in enumerate(owners):
            loads[owner] += true_times[owner][task]
        span: Fraction = max(loads)
        if best is None or span < best:
            best = span
    return best if best is not None else Fraction(0)
