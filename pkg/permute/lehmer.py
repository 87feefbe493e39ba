"""
Conversions between integers in [0, n!) and permutations of [0, n) through
the factorial number system (Lehmer codes).
"""

from math import factorial
from typing import Sequence, TypeAlias

from common.errors import RangeError, ValidationError

# A permutation of [0, n): every value appears exactly once.
Permutation: TypeAlias = list[int]


def validate_permutation(perm: Sequence[int], n: int | None = None, path: str = "$") -> None:
    """
    Check that a sequence is a bijection on [0, len).

    Parameters
    ----------
    perm : Sequence[int]
        The candidate permutation.
    n : int | None
        Expected length, if known.
    path : str
        Path reported on failure.

    Raises
    ------
    ValidationError
        If the sequence is not a permutation of [0, n).
    """
    size: int = len(perm) if n is None else n
    if len(perm) != size or sorted(perm) != list(range(size)):
        raise ValidationError(f"{list(perm)} is not a permutation of [0, {size})", path)


def factorial_digits(code: int, n: int) -> list[int]:
    """
    Write `code` in the factorial number system.

    Parameters
    ----------
    code : int
        Integer in [0, n!).
    n : int
        Number of digits.

    Returns
    -------
    digits : list[int]
        [d_{n-1}, ..., d_1, d_0] most significant first, with d_i in [0, i].
    """
    if n < 1:
        raise ValidationError(f"permutation size must be positive, got {n}", "$.n")
    if not 0 <= code < factorial(n):
        raise RangeError(f"code {code} outside [0, {n}!)", value=code)

    digits: list[int] = []
    remainder: int = code
    i: int
    for i in range(n - 1, -1, -1):
        place: int = factorial(i)
        digits.append(remainder // place)
        remainder %= place
    return digits


def lehmer_decode(code: int, n: int) -> Permutation:
    """
    Map an integer in [0, n!) to a permutation of [0, n).

    Each factorial digit, most significant first, indexes into the ascending
    list of elements not yet placed. Code 0 is the identity and n! - 1 the
    reversal.

    Parameters
    ----------
    code : int
        Integer in [0, n!).
    n : int
        Permutation size.

    Returns
    -------
    Permutation
        The decoded permutation.

    Raises
    ------
    RangeError
        If `code` is outside [0, n!).
    """
    remaining: list[int] = list(range(n))
    return [remaining.pop(digit) for digit in factorial_digits(code, n)]


def lehmer_encode(perm: Sequence[int]) -> int:
    """
    Inverse of lehmer_decode.

    Parameters
    ----------
    perm : Sequence[int]
        A permutation of [0, len(perm)).

    Returns
    -------
    int
        The code c with lehmer_decode(c, len(perm)) == perm.

    Raises
    ------
    ValidationError
        If `perm` is not a bijection.
    """
    validate_permutation(perm)
    n: int = len(perm)
    remaining: list[int] = list(range(n))
    code: int = 0
    position: int
    value: int
    for position, value in enumerate(perm):
        digit: int = remaining.index(value)
        remaining.pop(digit)
        code += digit * factorial(n - 1 - position)
    return code


def seed_to_order(bids: Sequence[int], n: int) -> tuple[int, Permutation]:
    """
    Play the game-first step shared by several mechanisms: sum the bids mod n!
    and decode the result.

    Parameters
    ----------
    bids : Sequence[int]
        One integer in [0, n!) per agent.
    n : int
        Permutation size.

    Returns
    -------
    tuple[int, Permutation]
        The seed and the decoded order.

    Raises
    ------
    RangeError
        If a bid is outside [0, n!); names the agent.
    """
    modulus: int = factorial(n)
    agent: int
    bid: int
    for agent, bid in enumerate(bids):
        if not 0 <= bid < modulus:
            raise RangeError(f"agent {agent} bid {bid}, outside [0, {modulus})", agent, bid)
    seed: int = sum(bids) % modulus
    return seed, lehmer_decode(seed, n)
