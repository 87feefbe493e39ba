"""Defines serial dictatorship and random priority driven by a Lehmer game"""

from fractions import Fraction
import itertools
import logging
from math import factorial
from typing import Sequence

from alloc.instance import AllocInstance, Allocation, RationalMatrix, zero_matrix
from common.constants import RP_ORACLE_MAX_N
from common.errors import CapacityError
from common.transcript import GamePlacement, MechanismTranscript
from permute.lehmer import Permutation, seed_to_order, validate_permutation


def serial_dictatorship(order: Sequence[int], instance: AllocInstance) -> Allocation:
    """
    Agents pick their favourite remaining item in turn. With more items than
    agents the order repeats until every item is taken.

    Parameters
    ----------
    order : Sequence[int]
        Picking order over all agents.
    instance : AllocInstance
        Agents' rankings.

    Returns
    -------
    Allocation
        Agent of every item.
    """
    validate_permutation(order, instance.n, "$.order")
    available: set[int] = set(range(instance.m))
    allocation: Allocation = {}
    agent: int
    for agent in itertools.cycle(order):
        if not available:
            break
        item: int = next(item for item in instance.prefs[agent] if item in available)
        available.remove(item)
        allocation[item] = agent
    return allocation


def derand_rp(
    bids: Sequence[int], instance: AllocInstance
) -> tuple[Allocation, MechanismTranscript]:
    """
    Random priority with the order chosen by a game played first: the bids
    sum mod n! to a Lehmer code.

    Parameters
    ----------
    bids : Sequence[int]
        One integer in [0, n!) per agent.
    instance : AllocInstance
        Agents' rankings.

    Returns
    -------
    tuple[Allocation, MechanismTranscript]
        The allocation and the transcript of the run.
    """
    seed: int
    order: Permutation
    seed, order = seed_to_order(bids, instance.n)
    allocation: Allocation = serial_dictatorship(order, instance)
    logging.info("Random priority seed %d order %s", seed, order)
    transcript: MechanismTranscript = MechanismTranscript(
        "alloc",
        GamePlacement.GAME_FIRST,
        list(bids),
        seed=seed,
        modulus=factorial(instance.n),
        permutation=order,
        outcome={str(item): owner for item, owner in sorted(allocation.items())},
        details={"mode": "rp"},
    )
    return allocation, transcript


def rp_distribution_oracle(instance: AllocInstance) -> RationalMatrix:
    """
    Exact random priority matrix: serial dictatorship averaged over all n! orders.

    Parameters
    ----------
    instance : AllocInstance
        Agents' rankings, n <= 7.

    Returns
    -------
    RationalMatrix
        Probability of each agent receiving each item.

    Raises
    ------
    CapacityError
        If n is above the enumeration limit.
    """
    if instance.n > RP_ORACLE_MAX_N:
        raise CapacityError(f"enumerating all orders is limited to n <= {RP_ORACLE_MAX_N}")
    weight: Fraction = Fraction(1, factorial(instance.n))
    matrix: RationalMatrix = zero_matrix(instance.n, instance.m)
    order: tuple[int, ...]
    for order in itertools.permutations(range(instance.n)):
        item: int
        agent: int
        for item, agent in serial_dictatorship(order, instance).items():
            matrix[agent][item] += weight
    return matrix
