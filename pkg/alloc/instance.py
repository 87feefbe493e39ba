"""Defines assignment instances, rational probability matrices and discrete allocations"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, TypeAlias

from common.errors import ValidationError
from common.verdict import Verdict
from permute.lehmer import validate_permutation

# p[i][j]: probability that agent i receives item j
RationalMatrix: TypeAlias = list[list[Fraction]]

# item -> agent
Allocation: TypeAlias = dict[int, int]


@dataclass(slots=True, frozen=True)
class AllocInstance:
    """
    n agents with strict rankings over m indivisible items.

    Attributes
    ----------
    prefs : tuple[tuple[int, ...], ...]
        prefs[i] lists all m items from agent i's best to worst.
    """

    prefs: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.prefs:
            raise ValidationError("at least one agent is required", "$.prefs")
        m: int = len(self.prefs[0])
        agent: int
        ranking: tuple[int, ...]
        for agent, ranking in enumerate(self.prefs):
            validate_permutation(ranking, m, f"$.prefs[{agent}]")

    @classmethod
    def from_rankings(cls, rankings: Sequence[Sequence[int]]) -> "AllocInstance":
        """Build an instance from plain lists."""
        return cls(tuple(tuple(ranking) for ranking in rankings))

    @property
    def n(self) -> int:
        """
        Get the number of agents.

        Returns
        -------
        int
            Number of agents.
        """
        return len(self.prefs)

    @property
    def m(self) -> int:
        """
        Get the number of items.

        Returns
        -------
        int
            Number of items.
        """
        return len(self.prefs[0])

    def with_ranking(self, agent: int, ranking: Sequence[int]) -> "AllocInstance":
        """
        Replace one agent's ranking.

        Parameters
        ----------
        agent : int
            Whose ranking changes.
        ranking : Sequence[int]
            The new ranking.

        Returns
        -------
        AllocInstance
            A new instance.
        """
        prefs: list[tuple[int, ...]] = list(self.prefs)
        prefs[agent] = tuple(ranking)
        return AllocInstance(tuple(prefs))


def zero_matrix(n: int, m: int) -> RationalMatrix:
    """An n x m matrix of Fraction zeros."""
    return [[Fraction(0)] * m for _ in range(n)]


def allocation_matrix(allocation: Allocation, n: int, m: int) -> RationalMatrix:
    """
    Write a discrete allocation as a 0/1 probability matrix.

    Parameters
    ----------
    allocation : Allocation
        Agent of every item.
    n : int
        Number of agents.
    m : int
        Number of items.

    Returns
    -------
    RationalMatrix
        1 where the agent holds the item.
    """
    matrix: RationalMatrix = zero_matrix(n, m)
    item: int
    agent: int
    for item, agent in allocation.items():
        matrix[agent][item] = Fraction(1)
    return matrix


def matrix_invariants(matrix: RationalMatrix, m: int) -> Verdict:
    """
    Entries lie in [0, 1], every column sums to 1 and every row to m/n.

    Parameters
    ----------
    matrix : RationalMatrix
        The matrix to check.
    m : int
        Number of items.

    Returns
    -------
    Verdict
        Failing with the offending row, column or entry.
    """
    n: int = len(matrix)
    i: int
    j: int
    for i, row in enumerate(matrix):
        if len(row) != m:
            return Verdict.failure("matrix", {"row": i, "length": len(row)})
        for j, value in enumerate(row):
            if not 0 <= value <= 1:
                return Verdict.failure("matrix", {"row": i, "column": j, "value": value})
        if sum(row, Fraction(0)) != Fraction(m, n):
            return Verdict.failure("matrix", {"row": i, "sum": sum(row, Fraction(0))})
    for j in range(m):
        column: Fraction = sum((matrix[i][j] for i in range(n)), Fraction(0))
        if column != 1:
            return Verdict.failure("matrix", {"column": j, "sum": column})
    return Verdict.success("matrix", n * m)
