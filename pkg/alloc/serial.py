"""Defines the probabilistic serial eating procedure"""

from dataclasses import dataclass, field
from fractions import Fraction
import logging

from alloc.instance import AllocInstance, RationalMatrix, zero_matrix


@dataclass(slots=True, frozen=True)
class EatingStep:
    """
    One interval of the eating procedure during which nobody switches items.

    Attributes
    ----------
    start : Fraction
        Time the interval starts.
    end : Fraction
        Time the first item (or items) ran out.
    eaters : tuple[int, ...]
        Number of agents eating each item.
    consumed : tuple[int, ...]
        Items that ran out at `end`.
    """

    start: Fraction
    end: Fraction
    eaters: tuple[int, ...]
    consumed: tuple[int, ...]


@dataclass(slots=True)
class EatingTrace:
    """
    The full sequence of eating intervals.

    Methods
    -------
    consumed_fraction(item: int) -> Fraction
        Total amount of `item` eaten over all steps.
    """

    steps: list[EatingStep] = field(default_factory=list)

    def consumed_fraction(self, item: int) -> Fraction:
        """
        Total amount of an item eaten across the trace.

        Parameters
        ----------
        item : int
            The item.

        Returns
        -------
        Fraction
            1 for a complete trace.
        """
        return sum(
            ((step.end - step.start) * step.eaters[item] for step in self.steps), Fraction(0)
        )


def probabilistic_serial(instance: AllocInstance) -> tuple[RationalMatrix, EatingTrace]:
    """
    Every agent eats their favourite remaining item at unit speed until all
    items are gone; the amount eaten is the probability of receiving it.

    Parameters
    ----------
    instance : AllocInstance
        Agents' rankings.

    Returns
    -------
    tuple[RationalMatrix, EatingTrace]
        The exact probability matrix and the eating intervals.
    """
    n: int = instance.n
    m: int = instance.m
    matrix: RationalMatrix = zero_matrix(n, m)
    remaining: list[Fraction] = [Fraction(1)] * m
    trace: EatingTrace = EatingTrace()
    clock: Fraction = Fraction(0)

    while any(remaining):
        tops: list[int] = [
            next(item for item in ranking if remaining[item]) for ranking in instance.prefs
        ]
        eaters: list[int] = [0] * m
        item: int
        for item in tops:
            eaters[item] += 1
        duration: Fraction = min(remaining[j] / eaters[j] for j in range(m) if eaters[j])

        agent: int
        for agent, item in enumerate(tops):
            matrix[agent][item] += duration
        for item in range(m):
            remaining[item] -= eaters[item] * duration
        consumed: tuple[int, ...] = tuple(j for j in range(m) if eaters[j] and not remaining[j])
        trace.steps.append(EatingStep(clock, clock + duration, tuple(eaters), consumed))
        clock += duration

    logging.debug("Probabilistic serial finished at time %s in %d steps", clock, len(trace.steps))
    return matrix, trace
