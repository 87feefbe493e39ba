"""Defines peer selection preference profiles"""

from dataclasses import dataclass
from typing import Sequence, TypeAlias

from common.errors import RangeError, ValidationError
from permute.lehmer import Permutation, validate_permutation

# Agent at each elimination position
EliminationOrder: TypeAlias = Permutation


@dataclass(slots=True, frozen=True)
class PeerProfile:
    """
    Every agent's strict ranking of all n agents, themselves included.

    Attributes
    ----------
    n : int
        Number of agents.
    prefs : tuple[tuple[int, ...], ...]
        prefs[i] lists agents from agent i's most to least preferred.

    Methods
    -------
    rank(agent: int, candidate: int) -> int
        Position of `candidate` in `agent`'s ranking (0 is best).
    least_preferred(agent: int, remaining: set[int]) -> int
        The remaining candidate `agent` likes least.
    """

    n: int
    prefs: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValidationError("at least one agent is required", "$.prefs")
        if len(self.prefs) != self.n:
            raise ValidationError(f"expected {self.n} rankings, got {len(self.prefs)}", "$.prefs")
        agent: int
        ranking: Sequence[int]
        for agent, ranking in enumerate(self.prefs):
            validate_permutation(ranking, self.n, f"$.prefs[{agent}]")
        object.__setattr__(self, "prefs", tuple(tuple(r) for r in self.prefs))

    @classmethod
    def from_rankings(cls, rankings: Sequence[Sequence[int]]) -> "PeerProfile":
        """Build a profile, inferring n from the number of rankings."""
        return cls(len(rankings), tuple(tuple(r) for r in rankings))

    def rank(self, agent: int, candidate: int) -> int:
        """
        Position of `candidate` in `agent`'s ranking.

        Parameters
        ----------
        agent : int
            The ranking agent.
        candidate : int
            The ranked agent.

        Returns
        -------
        int
            0 for the favourite, n - 1 for the least preferred.
        """
        if not 0 <= agent < self.n:
            raise RangeError(f"agent {agent} out of range", agent=agent)
        return self.prefs[agent].index(candidate)

    def least_preferred(self, agent: int, remaining: set[int] | frozenset[int]) -> int:
        """
        The remaining candidate `agent` ranks lowest.

        Parameters
        ----------
        agent : int
            The eliminating agent.
        remaining : set[int] | frozenset[int]
            Candidates still in the running.

        Returns
        -------
        int
            The candidate to eliminate sincerely.
        """
        candidate: int
        for candidate in reversed(self.prefs[agent]):
            if candidate in remaining:
                return candidate
        raise ValidationError("no remaining candidates", "$.remaining")
