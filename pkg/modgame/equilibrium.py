"""Expected utility and Nash equilibrium verification for modular arithmetic games"""

import logging
from fractions import Fraction

from common.errors import RangeError, ValidationError
from common.verdict import Verdict
from modgame.game import ModGame, parity_game, sum_distribution
from modgame.strategy import MixedStrategy, Profile


def _check_profile(game: ModGame, profile: Profile) -> None:
    if len(profile) != game.n_agents:
        raise ValidationError(
            f"profile has {len(profile)} strategies for {game.n_agents} agents", "$.strategies"
        )


def others_distribution(game: ModGame, profile: Profile, agent: int) -> list[Fraction]:
    """
    Distribution of the sum of every agent's play except `agent`.

    Parameters
    ----------
    game : ModGame
        The game.
    profile : Profile
        The strategy profile.
    agent : int
        The agent left out.

    Returns
    -------
    list[Fraction]
        Dense distribution over [0, modulus).
    """
    others: list[MixedStrategy] = [s for i, s in enumerate(profile) if i != agent]
    return sum_distribution(others, game.modulus)


def pure_deviation_utility(
    game: ModGame, others: list[Fraction], agent: int, play: int
) -> Fraction:
    """
    Expected utility of `agent` playing `play` against a fixed distribution of
    the others' sum.
    """
    modulus: int = game.modulus
    return sum(
        (p * game.utility(agent, (j + play) % modulus) for j, p in enumerate(others) if p),
        Fraction(0),
    )


def expected_utility(game: ModGame, profile: Profile, agent: int) -> Fraction:
    """
    Exact expected utility of an agent under a profile.

    Parameters
    ----------
    game : ModGame
        The game.
    profile : Profile
        One strategy per agent.
    agent : int
        The agent whose utility is computed.

    Returns
    -------
    Fraction
        Sum over outcomes of outcome probability times the agent's utility.

    Raises
    ------
    RangeError
        If `agent` is not an agent of the game.
    """
    if not 0 <= agent < game.n_agents:
        raise RangeError(f"agent {agent} out of range [0, {game.n_agents})", agent=agent)
    _check_profile(game, profile)
    distribution: list[Fraction] = sum_distribution(profile.strategies, game.modulus)
    return sum(
        (p * game.utility(agent, outcome) for outcome, p in enumerate(distribution) if p),
        Fraction(0),
    )


def verify_nash(game: ModGame, profile: Profile) -> Verdict:
    """
    Check that no agent gains by switching to any pure strategy.

    This is exact for finite games: a mixed deviation can never beat the best
    pure deviation.

    Parameters
    ----------
    game : ModGame
        The game.
    profile : Profile
        The profile to check.

    Returns
    -------
    Verdict
        Failing verdicts carry the agent, the improving play and the utility gain.
    """
    _check_profile(game, profile)
    checked: int = 0
    agent: int
    for agent in range(game.n_agents):
        others: list[Fraction] = others_distribution(game, profile, agent)
        current: Fraction = sum(
            (
                weight * pure_deviation_utility(game, others, agent, play)
                for play, weight in profile[agent].weights.items()
            ),
            Fraction(0),
        )
        play: int
        for play in range(game.modulus):
            checked += 1
            deviation: Fraction = pure_deviation_utility(game, others, agent, play)
            if deviation > current:
                logging.debug("agent %d improves by playing %d", agent, play)
                return Verdict.failure(
                    "nash",
                    {"agent": agent, "play": play, "delta": deviation - current},
                    checked,
                )
    return Verdict.success("nash", checked)


def parity_equilibrium_grid(steps: int = 8) -> list[tuple[Fraction, Fraction]]:
    """
    Grid search for equilibria of the win/loss parity game.

    Each agent plays 1 with probability k/steps for k in [0, steps]. Only the
    pair (1/2, 1/2) should survive; this smoke-tests uniqueness and proves
    nothing about off-grid profiles.

    Parameters
    ----------
    steps : int, default 8
        Grid resolution.

    Returns
    -------
    list[tuple[Fraction, Fraction]]
        (P[even plays 1], P[odd plays 1]) for every grid point passing verify_nash.
    """
    game: ModGame = parity_game()
    grid: list[Fraction] = [Fraction(k, steps) for k in range(steps + 1)]
    survivors: list[tuple[Fraction, Fraction]] = []
    p_even: Fraction
    p_odd: Fraction
    for p_even in grid:
        for p_odd in grid:
            profile: Profile = Profile(
                (
                    MixedStrategy(2, {0: 1 - p_even, 1: p_even}),
                    MixedStrategy(2, {0: 1 - p_odd, 1: p_odd}),
                )
            )
            if verify_nash(game, profile).passed:
                survivors.append((p_even, p_odd))
    return survivors
