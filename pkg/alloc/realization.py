"""Defines the game-last discrete realization of a probability matrix"""

import logging
from fractions import Fraction
from math import factorial, lcm
from typing import Sequence

from alloc.instance import AllocInstance, Allocation, RationalMatrix, zero_matrix
from alloc.serial import probabilistic_serial
from common.errors import RangeError, ValidationError
from common.transcript import GamePlacement, MechanismTranscript
from common.verdict import Verdict
from modgame.game import outcome_sum


def ps_modulus(n: int, m: int) -> int:
    """
    The default game size (n!)^m, a common denominator of every
    probabilistic serial matrix.
    """
    return factorial(n) ** m


def denominator_bound_check(matrix: RationalMatrix, n: int, m: int) -> Verdict:
    """
    Every entry's reduced denominator divides (n!)^m.

    Parameters
    ----------
    matrix : RationalMatrix
        A probabilistic serial matrix.
    n : int
        Number of agents.
    m : int
        Number of items.

    Returns
    -------
    Verdict
        Failing with the first entry whose denominator does not divide.
    """
    bound: int = ps_modulus(n, m)
    i: int
    j: int
    for i, row in enumerate(matrix):
        for j, value in enumerate(row):
            if bound % Fraction(value).denominator:
                return Verdict.failure(
                    "denominator-bound", {"agent": i, "item": j, "value": value, "bound": bound}
                )
    return Verdict.success("denominator-bound", n * m)


def common_denominator(matrix: RationalMatrix) -> int:
    """
    Least common multiple of all entry denominators.

    Parameters
    ----------
    matrix : RationalMatrix
        Any rational matrix.

    Returns
    -------
    int
        The smallest game size that realizes the matrix exactly.
    """
    return lcm(*(Fraction(value).denominator for row in matrix for value in row))


def realize_assignment(
    matrix: RationalMatrix, sigma: int, modulus: int, strict: bool = False
) -> Allocation:
    """
    Turn the game outcome `sigma` into one draw shared by every item, and give
    each item to the first agent whose cumulative probability reaches it.

    Parameters
    ----------
    matrix : RationalMatrix
        The probability matrix.
    sigma : int
        Game outcome in [0, modulus).
    modulus : int
        A common denominator of the matrix.
    strict : bool
        Use the draw sigma / modulus instead of (sigma + 1) / modulus. That
        gives the first agent one extra quantum per item.

    Returns
    -------
    Allocation
        Agent of every item.

    Raises
    ------
    RangeError
        If sigma is outside [0, modulus).
    ValidationError
        If modulus is not a common denominator.
    """
    if not 0 <= sigma < modulus:
        raise RangeError(f"sigma {sigma} outside [0, {modulus})", value=sigma)
    if modulus % common_denominator(matrix):
        raise ValidationError(f"{modulus} is not a common denominator of the matrix", "$.modulus")
    draw: Fraction = Fraction(sigma if strict else sigma + 1, modulus)
    n: int = len(matrix)
    allocation: Allocation = {}
    item: int
    for item in range(len(matrix[0])):
        total: Fraction = Fraction(0)
        agent: int
        for agent in range(n):
            total += matrix[agent][item]
            if total >= draw:
                allocation[item] = agent
                break
    return allocation


def realization_marginals(
    matrix: RationalMatrix, modulus: int, strict: bool = False
) -> RationalMatrix:
    """
    Frequency with which each agent receives each item over all sigma in [0, modulus).

    Parameters
    ----------
    matrix : RationalMatrix
        The probability matrix.
    modulus : int
        A common denominator of the matrix.
    strict : bool
        Use the sigma / modulus draw.

    Returns
    -------
    RationalMatrix
        Equal to `matrix` for the default draw.
    """
    n: int = len(matrix)
    m: int = len(matrix[0])
    frequencies: RationalMatrix = zero_matrix(n, m)
    sigma: int
    for sigma in range(modulus):
        item: int
        agent: int
        for item, agent in realize_assignment(matrix, sigma, modulus, strict).items():
            frequencies[agent][item] += Fraction(1, modulus)
    return frequencies


def derand_ps(
    bids: Sequence[int],
    instance: AllocInstance,
    modulus: int | None = None,
    strict: bool = False,
) -> tuple[Allocation, MechanismTranscript]:
    """
    Probabilistic serial followed by a game played last: the bids sum to
    sigma, which realizes the matrix.

    Parameters
    ----------
    bids : Sequence[int]
        One integer in [0, modulus) per agent.
    instance : AllocInstance
        Agents' rankings.
    modulus : int | None
        Game size; (n!)^m when None. Any common denominator of the matrix works.
    strict : bool
        Use the sigma / modulus draw.

    Returns
    -------
    tuple[Allocation, MechanismTranscript]
        The allocation and the transcript of the run.
    """
    matrix: RationalMatrix
    matrix, _ = probabilistic_serial(instance)
    size: int = ps_modulus(instance.n, instance.m) if modulus is None else modulus
    if len(bids) != instance.n:
        raise ValidationError(f"expected {instance.n} bids, got {len(bids)}", "$.bids")
    sigma: int = outcome_sum(bids, size)
    allocation: Allocation = realize_assignment(matrix, sigma, size, strict)
    logging.info("Probabilistic serial realized with sigma %d of %d", sigma, size)
    transcript: MechanismTranscript = MechanismTranscript(
        "alloc",
        GamePlacement.GAME_LAST,
        list(bids),
        seed=sigma,
        modulus=size,
        outcome={str(item): owner for item, owner in sorted(allocation.items())},
        details={"mode": "ps", "matrix": matrix, "strict": strict},
    )
    return allocation, transcript
