"""De-randomized random dictator: the game picks which voter's favourite wins"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Sequence

from common.errors import RangeError, ValidationError
from modgame.game import outcome_sum, sum_distribution
from modgame.strategy import MixedStrategy, point_mass, uniform_strategy


@dataclass(slots=True, frozen=True)
class DictatorBallot:
    """
    One voter's submission.

    Attributes
    ----------
    game_integer : int
        The voter's play in the modular game, in [0, n).
    preferred_candidate : Hashable
        The candidate the voter wants to win. Never inspected by the mechanism.
    """

    game_integer: int
    preferred_candidate: Hashable


def derand_dictator(ballots: Sequence[DictatorBallot]) -> Hashable:
    """
    Elect the favourite of voter j, where j is the sum of the game integers mod n.

    Parameters
    ----------
    ballots : Sequence[DictatorBallot]
        One ballot per voter, in voter order.

    Returns
    -------
    Hashable
        ballots[j].preferred_candidate.

    Raises
    ------
    ValidationError
        If there are no ballots.
    RangeError
        If a game integer is outside [0, n); names the voter.
    """
    if not ballots:
        raise ValidationError("at least one ballot is required", "$.agents")
    dictator: int = outcome_sum([ballot.game_integer for ballot in ballots], len(ballots))
    logging.debug("voter %d is the dictator", dictator)
    return ballots[dictator].preferred_candidate


def dictator_expected_utility(
    reports: Sequence[Hashable],
    strategies: Sequence[MixedStrategy],
    favourite: Hashable,
) -> Fraction:
    """
    Probability that `favourite` wins when voters report `reports` and play
    the given game strategies.

    Parameters
    ----------
    reports : Sequence[Hashable]
        Reported favourite of each voter.
    strategies : Sequence[MixedStrategy]
        Game strategy of each voter over [0, n).
    favourite : Hashable
        The candidate whose win is worth 1.

    Returns
    -------
    Fraction
        Exact winning probability.
    """
    distribution: list[Fraction] = sum_distribution(strategies, len(reports))
    return sum(
        (p for dictator, p in enumerate(distribution) if reports[dictator] == favourite),
        Fraction(0),
    )


def best_dictator_deviation(
    favourites: Sequence[Hashable], candidates: Sequence[Hashable], agent: int
) -> tuple[int, Hashable, Fraction] | None:
    """
    Search one voter's pure deviations (game integer x reported favourite)
    against everyone else playing uniformly and reporting sincerely.

    Parameters
    ----------
    favourites : Sequence[Hashable]
        True favourite of each voter.
    candidates : Sequence[Hashable]
        Every candidate a voter may report.
    agent : int
        The deviating voter.

    Returns
    -------
    tuple[int, Hashable, Fraction] | None
        (integer, report, gain) of a strictly better deviation, or None when
        sincere play is a best response.
    """
    n: int = len(favourites)
    if not 0 <= agent < n:
        raise RangeError(f"voter {agent} out of range", agent=agent)
    others: list[MixedStrategy] = [uniform_strategy(n) for _ in range(n)]
    others[agent] = point_mass(0, n)
    sincere: Fraction = dictator_expected_utility(favourites, others, favourites[agent])

    integer: int
    for integer in range(n):
        report: Hashable
        for report in candidates:
            strategies: list[MixedStrategy] = list(others)
            strategies[agent] = point_mass(integer, n)
            reports: list[Hashable] = list(favourites)
            reports[agent] = report
            value: Fraction = dictator_expected_utility(reports, strategies, favourites[agent])
            if value > sincere:
                return integer, report, value - sincere
    return None
