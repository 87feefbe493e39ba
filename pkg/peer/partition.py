"""Defines the impartial partition mechanism with a game-last parity coin"""

import logging
from collections import Counter
from typing import Sequence

from common.errors import RangeError, ValidationError
from modgame.game import outcome_sum
from peer.profile import PeerProfile


def partition_sides(n: int) -> tuple[list[int], list[int]]:
    """
    Split agents into the first ceil(n/2) ids and the rest.

    Parameters
    ----------
    n : int
        Number of agents.

    Returns
    -------
    tuple[list[int], list[int]]
        The two sides.
    """
    half: int = (n + 1) // 2
    return list(range(half)), list(range(half, n))


def _vote(profile: PeerProfile, voter: int, side: list[int]) -> int:
    candidate: int
    for candidate in profile.prefs[voter]:
        if candidate in side:
            return candidate
    raise ValidationError(f"agent {voter} ranks nobody on the other side", f"$.prefs[{voter}]")


def side_candidate(profile: PeerProfile, side: list[int], voters: list[int]) -> int:
    """
    Plurality winner among `side` of the voters' favourite members of `side`.

    Parameters
    ----------
    profile : PeerProfile
        Preferences.
    side : list[int]
        The agents being voted on.
    voters : list[int]
        The agents voting; none of them belong to `side`.

    Returns
    -------
    int
        The candidate with the most votes, lowest id on ties.
    """
    tally: Counter[int] = Counter(_vote(profile, voter, side) for voter in voters)
    return min(side, key=lambda candidate: (-tally[candidate], candidate))


def partition_candidates(profile: PeerProfile) -> tuple[int, int]:
    """
    The two possible winners: one from each side, elected by the other side.

    Parameters
    ----------
    profile : PeerProfile
        Preferences, n >= 4.

    Returns
    -------
    tuple[int, int]
        The first side's candidate and the second side's candidate.
    """
    if profile.n < 4:
        raise ValidationError(f"the partition mechanism needs n >= 4, got {profile.n}", "$.prefs")
    first: list[int]
    second: list[int]
    first, second = partition_sides(profile.n)
    return side_candidate(profile, first, second), side_candidate(profile, second, first)


def partition_winner(profile: PeerProfile, parity_bits: Sequence[int]) -> int:
    """
    Pick between the two side candidates with a parity game played last by
    the n - 2 non-candidates.

    Parameters
    ----------
    profile : PeerProfile
        Preferences, n >= 4.
    parity_bits : Sequence[int]
        n - 2 bits; bit k is played by the k-th non-candidate in id order.

    Returns
    -------
    int
        The first side's candidate on xor 0, the second side's on xor 1.

    Raises
    ------
    ValidationError
        If n < 4 or the bit count is wrong.
    RangeError
        If a bit is not 0 or 1.
    """
    candidates: tuple[int, int] = partition_candidates(profile)
    if len(parity_bits) != profile.n - 2:
        raise ValidationError(
            f"expected {profile.n - 2} parity bits, got {len(parity_bits)}", "$.parity_bits"
        )
    slot: int
    bit: int
    for slot, bit in enumerate(parity_bits):
        if bit not in (0, 1):
            raise RangeError(f"parity bit {slot} is {bit}, not 0 or 1", value=bit)
    winner: int = candidates[outcome_sum(parity_bits, 2)]
    logging.debug("Partition candidates %s winner %d", candidates, winner)
    return winner


def non_candidates(profile: PeerProfile) -> list[int]:
    """The agents who play the parity game, in id order."""
    candidates: tuple[int, int] = partition_candidates(profile)
    return [agent for agent in range(profile.n) if agent not in candidates]
