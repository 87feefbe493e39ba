"""Defines sequential elimination and the de-randomized random sequential elimination mechanism"""

import logging
from fractions import Fraction
from math import factorial
from typing import Sequence

from common.constants import SPE_ORACLE_MAX_N
from common.errors import CapacityError, ProtocolError, RangeError, ValidationError
from common.transcript import GamePlacement, MechanismTranscript
from modgame.game import sum_distribution
from modgame.strategy import MixedStrategy
from peer.profile import EliminationOrder, PeerProfile
from permute.lehmer import lehmer_decode, seed_to_order, validate_permutation


def _check_order(order: EliminationOrder, profile: PeerProfile) -> None:
    validate_permutation(order, profile.n, "$.order")


def run_sequential_elimination(order: EliminationOrder, choices: Sequence[int], n: int) -> int:
    """
    Play sequential elimination with fixed choices.

    The t-th agent of `order` removes choices[t]. An eliminated agent still
    takes their turn if their position comes up.

    Parameters
    ----------
    order : EliminationOrder
        Agent at each elimination position; the last position never acts.
    choices : Sequence[int]
        n - 1 candidate ids, one per step.
    n : int
        Number of agents.

    Returns
    -------
    int
        The sole survivor.

    Raises
    ------
    ProtocolError
        If a choice is not a remaining candidate at its step.
    """
    validate_permutation(order, n, "$.order")
    if len(choices) != n - 1:
        raise ValidationError(f"expected {n - 1} choices, got {len(choices)}", "$.choices")
    remaining: set[int] = set(range(n))
    step: int
    choice: int
    for step, choice in enumerate(choices):
        if choice not in remaining:
            raise ProtocolError(
                f"agent {order[step]} eliminated {choice}, which is not remaining", step
            )
        remaining.remove(choice)
    return remaining.pop()


def spe_continuation(
    order: EliminationOrder, profile: PeerProfile, remaining: set[int] | frozenset[int], start: int
) -> int:
    """
    Subgame-perfect winner of the game that starts at step `start` with
    `remaining` candidates: the eliminators from `start` on play in reverse,
    each removing their least preferred remaining candidate.

    Parameters
    ----------
    order : EliminationOrder
        The full elimination order.
    profile : PeerProfile
        True preferences.
    remaining : set[int] | frozenset[int]
        Candidates still in the running; must hold n - start agents.
    start : int
        First step still to be played.

    Returns
    -------
    int
        The winner.
    """
    alive: set[int] = set(remaining)
    if len(alive) != profile.n - start:
        raise ValidationError(
            f"step {start} needs {profile.n - start} remaining candidates, got {len(alive)}",
            "$.remaining",
        )
    eliminator: int
    for eliminator in reversed(order[start : profile.n - 1]):
        alive.remove(profile.least_preferred(eliminator, alive))
    return alive.pop()


def spe_winner_linear(order: EliminationOrder, profile: PeerProfile) -> int:
    """
    Subgame-perfect winner of sequential elimination in linear time.

    Only the first n - 1 agents of `order` eliminate, so with two agents only
    order[0] acts and the winner is the one of the pair they prefer.

    Parameters
    ----------
    order : EliminationOrder
        Agent at each elimination position.
    profile : PeerProfile
        Strict preferences.

    Returns
    -------
    int
        The winner when every eliminator plays optimally.
    """
    _check_order(order, profile)
    return spe_continuation(order, profile, frozenset(range(profile.n)), 0)


def spe_winner_oracle(order: EliminationOrder, profile: PeerProfile) -> int:
    """
    Subgame-perfect winner by backward induction over the whole game tree.

    Parameters
    ----------
    order : EliminationOrder
        Agent at each elimination position.
    profile : PeerProfile
        Strict preferences.

    Returns
    -------
    int
        The winner when every eliminator maximizes the rank of the final winner.

    Raises
    ------
    CapacityError
        If n is above the oracle limit.
    """
    if profile.n > SPE_ORACLE_MAX_N:
        raise CapacityError(f"backward induction is limited to n <= {SPE_ORACLE_MAX_N}")
    _check_order(order, profile)
    memo: dict[frozenset[int], int] = {}

    # the step is implied by how many candidates remain
    def solve(remaining: frozenset[int]) -> int:
        if len(remaining) == 1:
            return next(iter(remaining))
        if remaining in memo:
            return memo[remaining]
        eliminator: int = order[profile.n - len(remaining)]
        best: int | None = None
        candidate: int
        for candidate in sorted(remaining):
            winner: int = solve(remaining - {candidate})
            if best is None or profile.rank(eliminator, winner) < profile.rank(eliminator, best):
                best = winner
        assert best is not None
        memo[remaining] = best
        return best

    return solve(frozenset(range(profile.n)))


def derand_rse(
    bids: Sequence[int], profile: PeerProfile, choices: Sequence[int] | None = None
) -> int:
    """
    De-randomized random sequential elimination: the bids pick the order,
    then elimination is played on it.

    Parameters
    ----------
    bids : Sequence[int]
        One integer in [0, n!) per agent.
    profile : PeerProfile
        Preferences, used for the equilibrium continuation.
    choices : Sequence[int] | None
        Explicit eliminations; when None every eliminator plays the
        subgame-perfect continuation.

    Returns
    -------
    int
        The selected agent.

    Raises
    ------
    RangeError
        If a bid is outside [0, n!).
    """
    return derand_rse_transcript(bids, profile, choices).outcome


def derand_rse_transcript(
    bids: Sequence[int], profile: PeerProfile, choices: Sequence[int] | None = None
) -> MechanismTranscript:
    """
    Same as derand_rse but returns the full transcript.
    """
    if len(bids) != profile.n:
        raise ValidationError(f"expected {profile.n} bids, got {len(bids)}", "$.bids")
    seed: int
    order: EliminationOrder
    seed, order = seed_to_order(bids, profile.n)
    winner: int = (
        spe_winner_linear(order, profile)
        if choices is None
        else run_sequential_elimination(order, choices, profile.n)
    )
    logging.debug("RSE seed %d order %s winner %d", seed, order, winner)
    return MechanismTranscript(
        "peer",
        GamePlacement.GAME_FIRST,
        list(bids),
        seed=seed,
        modulus=factorial(profile.n),
        permutation=order,
        outcome=winner,
        details={"play": "supplied" if choices is not None else "sincere-reversed"},
    )


def rse_winner_distribution(
    profile: PeerProfile, strategies: Sequence[MixedStrategy]
) -> dict[int, Fraction]:
    """
    Exact winner distribution of derand_rse when the bids follow `strategies`.

    Parameters
    ----------
    profile : PeerProfile
        Preferences.
    strategies : Sequence[MixedStrategy]
        One strategy on [0, n!) per agent.

    Returns
    -------
    dict[int, Fraction]
        Probability of each agent winning; agents that never win are absent.
    """
    modulus: int = factorial(profile.n)
    seeds: list[Fraction] = sum_distribution(strategies, modulus)
    result: dict[int, Fraction] = {}
    seed: int
    probability: Fraction
    for seed, probability in enumerate(seeds):
        if probability:
            winner: int = spe_winner_linear(lehmer_decode(seed, profile.n), profile)
            result[winner] = result.get(winner, Fraction(0)) + probability
    return result


def uniform_order_distribution(profile: PeerProfile) -> dict[int, Fraction]:
    """
    Winner distribution of random sequential elimination with a uniformly
    random order.
    """
    total: int = factorial(profile.n)
    result: dict[int, Fraction] = {}
    code: int
    for code in range(total):
        winner: int = spe_winner_linear(lehmer_decode(code, profile.n), profile)
        result[winner] = result.get(winner, Fraction(0)) + Fraction(1, total)
    return result


def responsive_witness(
    bids: Sequence[int], profile: PeerProfile, agent: int
) -> tuple[int, int, int]:
    """
    Build a report for `agent` that changes the equilibrium winner of derand_rse.

    If `agent` already eliminates first, they retarget that elimination at the
    current winner. Otherwise they change their integer so the order starts
    with them, then eliminate the current winner. Everyone else plays the
    subgame-perfect continuation afterwards.

    Parameters
    ----------
    bids : Sequence[int]
        Current bids.
    profile : PeerProfile
        Preferences.
    agent : int
        The deviating agent.

    Returns
    -------
    tuple[int, int, int]
        The agent's new bid, the agent they eliminate first, and the new winner.
    """
    n: int = profile.n
    if not 0 <= agent < n:
        raise RangeError(f"agent {agent} out of range", agent=agent)
    if n < 2:
        raise ValidationError("a deviation needs at least two agents", "$.prefs")
    modulus: int = factorial(n)
    order: EliminationOrder
    _, order = seed_to_order(bids, n)
    current: int = spe_winner_linear(order, profile)

    new_bid: int = bids[agent]
    if order[0] != agent:
        # code agent * (n - 1)! decodes to [agent, rest ascending]
        others: int = sum(bids) - bids[agent]
        new_bid = (agent * factorial(n - 1) - others) % modulus
        order = lehmer_decode(agent * factorial(n - 1), n)

    remaining: frozenset[int] = frozenset(range(n)) - {current}
    winner: int = spe_continuation(order, profile, remaining, 1)
    return new_bid, current, winner
