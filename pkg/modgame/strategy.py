"""Defines mixed strategies over [0, m) and strategy profiles"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping

from common.errors import RangeError, ValidationError


@dataclass(slots=True, frozen=True)
class MixedStrategy:
    """
    An exact probability vector over the integers [0, modulus).

    Attributes
    ----------
    modulus : int
        Size of the integer range the strategy plays over.
    weights : Mapping[int, Fraction]
        Probability of each integer; integers with probability zero are dropped.

    Methods
    -------
    probability(value: int) -> Fraction
        The probability of playing `value`.
    vector() -> list[Fraction]
        The dense probability vector of length `modulus`.
    is_uniform() -> bool
        Whether every integer in [0, modulus) has probability 1/modulus.
    is_pure() -> bool
        Whether the strategy is a point mass.
    """

    modulus: int
    weights: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValidationError(f"modulus must be at least 1, got {self.modulus}", "$.modulus")

        cleaned: dict[int, Fraction] = {}
        value: int
        weight: Fraction
        for value, weight in self.weights.items():
            weight = Fraction(weight)
            if weight < 0:
                raise ValidationError(f"negative weight {weight} on {value}", f"$.weights[{value}]")
            if not 0 <= value < self.modulus:
                raise RangeError(
                    f"support value {value} outside [0, {self.modulus})", value=value
                )
            if weight:
                cleaned[value] = weight

        if sum(cleaned.values(), Fraction(0)) != 1:
            raise ValidationError("weights must sum to exactly 1", "$.weights")

        # frozen dataclass: normalise in place before anyone can see it
        object.__setattr__(self, "weights", dict(sorted(cleaned.items())))

    def probability(self, value: int) -> Fraction:
        """
        Get the probability of playing an integer.

        Parameters
        ----------
        value : int
            The integer.

        Returns
        -------
        Fraction
            Its probability (zero outside the support).
        """
        return self.weights.get(value, Fraction(0))

    def vector(self) -> list[Fraction]:
        """
        Get the dense probability vector.

        Returns
        -------
        list[Fraction]
            Entry v is the probability of playing v.
        """
        return [self.probability(value) for value in range(self.modulus)]

    def is_uniform(self) -> bool:
        """
        Check whether the strategy picks every integer in [0, modulus) equally.

        Returns
        -------
        bool
            True iff the strategy is uniform on the full range.
        """
        share: Fraction = Fraction(1, self.modulus)
        return len(self.weights) == self.modulus and all(w == share for w in self.weights.values())

    def is_pure(self) -> bool:
        """
        Check whether the strategy is a point mass.

        Returns
        -------
        bool
            True iff exactly one integer has positive probability.
        """
        return len(self.weights) == 1


def uniform_strategy(modulus: int) -> MixedStrategy:
    """
    Build the uniform strategy over [0, modulus).

    Parameters
    ----------
    modulus : int
        Size of the range.

    Returns
    -------
    MixedStrategy
        Every integer with probability 1/modulus.
    """
    return MixedStrategy(modulus, {value: Fraction(1, modulus) for value in range(modulus)})


def point_mass(value: int, modulus: int) -> MixedStrategy:
    """
    Build the pure strategy that always plays `value`.

    Parameters
    ----------
    value : int
        The integer always played.
    modulus : int
        Size of the range.

    Returns
    -------
    MixedStrategy
        Probability 1 on `value`.
    """
    return MixedStrategy(modulus, {value: Fraction(1)})


@dataclass(slots=True, frozen=True)
class Profile:
    """
    One mixed strategy per agent. Pure strategies are point masses.

    Attributes
    ----------
    strategies : tuple[MixedStrategy, ...]
        Strategy of agent i at index i.

    Methods
    -------
    replace(agent: int, strategy: MixedStrategy) -> Profile
        A copy of this profile with one agent's strategy swapped.
    uniform_count() -> int
        How many agents play uniformly.
    """

    strategies: tuple[MixedStrategy, ...]

    def __len__(self) -> int:
        return len(self.strategies)

    def __getitem__(self, agent: int) -> MixedStrategy:
        return self.strategies[agent]

    def __iter__(self) -> Iterator[MixedStrategy]:
        return iter(self.strategies)

    def replace(self, agent: int, strategy: MixedStrategy) -> "Profile":
        """
        Swap one agent's strategy.

        Parameters
        ----------
        agent : int
            The agent whose strategy changes.
        strategy : MixedStrategy
            The new strategy.

        Returns
        -------
        Profile
            A new profile; this one is unchanged.
        """
        if not 0 <= agent < len(self.strategies):
            raise RangeError(f"agent {agent} out of range", agent=agent)
        strategies: list[MixedStrategy] = list(self.strategies)
        strategies[agent] = strategy
        return Profile(tuple(strategies))

    def uniform_count(self) -> int:
        """
        Count the agents playing the uniform strategy over their full range.

        Returns
        -------
        int
            Number of uniform strategies.
        """
        return sum(1 for strategy in self.strategies if strategy.is_uniform())


def pure_profile(plays: list[int], modulus: int) -> Profile:
    """Profile of point masses, one per play."""
    return Profile(tuple(point_mass(play, modulus) for play in plays))


def is_quasi_uniform(profile: Profile, modulus: int) -> bool:
    """
    Check whether at least two agents pick uniformly over [0, modulus).

    Parameters
    ----------
    profile : Profile
        The profile to check.
    modulus : int
        The game's modulus.

    Returns
    -------
    bool
        True iff two or more strategies are uniform over the full range.
    """
    return sum(1 for s in profile if s.modulus == modulus and s.is_uniform()) >= 2
