"""
De-randomized left-right-middle facility location on the line. The sum of
the agents' integers mod 4 decides between the leftmost report (0), the
midpoint (1 or 2) and the rightmost report (3).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from common.constants import LRM_MODULUS
from common.errors import RangeError, ValidationError
from modgame.game import outcome_sum, sum_distribution
from modgame.strategy import MixedStrategy, point_mass, uniform_strategy


@dataclass(slots=True, frozen=True)
class FacilityReport:
    """
    One agent's submission.

    Attributes
    ----------
    game_integer : int
        The agent's play in the mod-4 game, in {0, 1, 2, 3}.
    position : Fraction
        Reported location on the line.
    """

    game_integer: int
    position: Fraction


def lrm_location(positions: Sequence[Fraction], outcome: int) -> Fraction:
    """
    Location chosen for a given game outcome.

    Parameters
    ----------
    positions : Sequence[Fraction]
        Reported locations.
    outcome : int
        The game outcome in [0, 4).

    Returns
    -------
    Fraction
        Leftmost for 0, midpoint for 1 and 2, rightmost for 3.
    """
    left: Fraction = min(positions)
    right: Fraction = max(positions)
    if outcome == 0:
        return left
    if outcome == 3:
        return right
    return (left + right) / 2


def derand_lrm(reports: Sequence[FacilityReport]) -> Fraction:
    """
    Locate the facility from the agents' reports.

    Parameters
    ----------
    reports : Sequence[FacilityReport]
        One report per agent.

    Returns
    -------
    Fraction
        The facility's location.

    Raises
    ------
    ValidationError
        If there are no reports.
    RangeError
        If an integer is outside {0, 1, 2, 3}; names the agent.
    """
    if not reports:
        raise ValidationError("at least one report is required", "$.agents")
    outcome: int = outcome_sum([report.game_integer for report in reports], LRM_MODULUS)
    return lrm_location([Fraction(report.position) for report in reports], outcome)


def max_cost(location: Fraction, positions: Sequence[Fraction]) -> Fraction:
    """
    The largest distance any agent travels to the facility.

    Parameters
    ----------
    location : Fraction
        Facility location.
    positions : Sequence[Fraction]
        Agent locations; must be nonempty.

    Returns
    -------
    Fraction
        max over agents of |location - position|.
    """
    if not positions:
        raise ValidationError("at least one position is required", "$.positions")
    return max(abs(location - position) for position in positions)


def lrm_expected_cost(
    reported: Sequence[Fraction],
    strategies: Sequence[MixedStrategy],
    true_position: Fraction,
) -> Fraction:
    """
    Expected distance from `true_position` to the facility when agents report
    `reported` and play the given mod-4 strategies.
    """
    distribution: list[Fraction] = sum_distribution(strategies, LRM_MODULUS)
    return sum(
        (p * abs(lrm_location(reported, outcome) - true_position)
         for outcome, p in enumerate(distribution) if p),
        Fraction(0),
    )


def lrm_expected_ratio(positions: Sequence[Fraction]) -> Fraction:
    """
    Expected maximum cost under the uniform game outcome divided by the
    optimal maximum cost, which is half the spread.

    Collocated instances have optimal cost 0 and return 1 by convention.

    Parameters
    ----------
    positions : Sequence[Fraction]
        Agent locations.

    Returns
    -------
    Fraction
        The exact approximation ratio; 3/2 whenever the extremes differ.
    """
    left: Fraction = min(positions)
    right: Fraction = max(positions)
    if left == right:
        return Fraction(1)

    uniform: list[MixedStrategy] = [uniform_strategy(LRM_MODULUS)]
    distribution: list[Fraction] = sum_distribution(uniform, LRM_MODULUS)
    expected: Fraction = sum(
        (p * max_cost(lrm_location(positions, outcome), positions)
         for outcome, p in enumerate(distribution)),
        Fraction(0),
    )
    return expected / ((right - left) / 2)


def lrm_report_grid(positions: Sequence[Fraction]) -> list[Fraction]:
    """
    Candidate misreports: every reported position, the midpoints between
    neighbours and one unit beyond each extreme.
    """
    ordered: list[Fraction] = sorted(set(positions))
    grid: set[Fraction] = set(ordered)
    grid.add(ordered[0] - 1)
    grid.add(ordered[-1] + 1)
    low: Fraction
    high: Fraction
    for low, high in zip(ordered, ordered[1:]):
        grid.add((low + high) / 2)
    return sorted(grid)


def best_lrm_deviation(
    positions: Sequence[Fraction], agent: int
) -> tuple[int, Fraction, Fraction] | None:
    """
    Search one agent's pure deviations (integer x reported position from
    lrm_report_grid) against everyone else playing uniformly and sincerely.

    Parameters
    ----------
    positions : Sequence[Fraction]
        True location of each agent.
    agent : int
        The deviating agent.

    Returns
    -------
    tuple[int, Fraction, Fraction] | None
        (integer, report, cost saved) of a strictly better deviation, or None.
    """
    if not 0 <= agent < len(positions):
        raise RangeError(f"agent {agent} out of range", agent=agent)
    strategies: list[MixedStrategy] = [uniform_strategy(LRM_MODULUS) for _ in positions]
    strategies[agent] = point_mass(0, LRM_MODULUS)
    sincere: Fraction = lrm_expected_cost(positions, strategies, positions[agent])

    integer: int
    for integer in range(LRM_MODULUS):
        report: Fraction
        for report in lrm_report_grid(positions):
            deviated: list[MixedStrategy] = list(strategies)
            deviated[agent] = point_mass(integer, LRM_MODULUS)
            reported: list[Fraction] = list(positions)
            reported[agent] = report
            cost: Fraction = lrm_expected_cost(reported, deviated, positions[agent])
            if cost < sincere:
                return integer, report, sincere - cost
    return None
