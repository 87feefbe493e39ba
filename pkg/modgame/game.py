"""
The modular arithmetic game: n agents each pick an integer in [0, m) and the
outcome is the sum of the picks mod m. The parity game is the m = 2 case.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from common.errors import RangeError, ValidationError
from modgame.strategy import MixedStrategy, Profile


@dataclass(slots=True, frozen=True)
class ModGame:
    """
    A modular arithmetic game with general per-outcome utilities.

    Attributes
    ----------
    n_agents : int
        Number of players.
    modulus : int
        Every player picks from [0, modulus); the outcome lies in the same range.
    utilities : tuple[tuple[Fraction, ...], ...]
        utilities[i][o] is agent i's utility when the outcome is o.
    """

    n_agents: int
    modulus: int
    utilities: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.n_agents < 1:
            raise ValidationError("a game needs at least one agent", "$.n_agents")
        if self.modulus < 1:
            raise ValidationError("modulus must be at least 1", "$.modulus")
        if len(self.utilities) != self.n_agents:
            raise ValidationError(
                f"expected {self.n_agents} utility rows, got {len(self.utilities)}", "$.utilities"
            )
        agent: int
        row: tuple[Fraction, ...]
        for agent, row in enumerate(self.utilities):
            if len(row) != self.modulus:
                raise ValidationError(
                    f"utility row must cover all {self.modulus} outcomes", f"$.utilities[{agent}]"
                )
        object.__setattr__(
            self, "utilities", tuple(tuple(Fraction(u) for u in row) for row in self.utilities)
        )

    def utility(self, agent: int, outcome: int) -> Fraction:
        """Utility of `agent` for `outcome`."""
        return self.utilities[agent][outcome]


def win_loss_game(
    preferred: Sequence[int],
    modulus: int,
    win: Fraction | int = 1,
    loss: Fraction | int = 0,
) -> ModGame:
    """
    Build a game where each agent gets `win` on their preferred outcome and
    `loss` otherwise.

    Parameters
    ----------
    preferred : Sequence[int]
        Preferred outcome of each agent.
    modulus : int
        The game's modulus.
    win : Fraction | int, default 1
        Utility on the preferred outcome.
    loss : Fraction | int, default 0
        Utility on every other outcome.

    Returns
    -------
    ModGame
        The win/loss game.
    """
    rows: list[tuple[Fraction, ...]] = []
    agent: int
    target: int
    for agent, target in enumerate(preferred):
        if not 0 <= target < modulus:
            raise RangeError(f"agent {agent} prefers {target}, outside [0, {modulus})", agent, target)
        rows.append(
            tuple(Fraction(win) if o == target else Fraction(loss) for o in range(modulus))
        )
    return ModGame(len(rows), modulus, tuple(rows))


def parity_game(win: Fraction | int = 1, loss: Fraction | int = 0) -> ModGame:
    """
    The parity game: agent 0 (even) wins when the bits match, agent 1 (odd)
    wins when they differ.
    """
    return win_loss_game([0, 1], 2, win, loss)


def outcome_sum(plays: Sequence[int], modulus: int) -> int:
    """
    Compute the outcome of one round of pure play.

    Parameters
    ----------
    plays : Sequence[int]
        Integer picked by each agent.
    modulus : int
        The game's modulus.

    Returns
    -------
    int
        The sum of the plays mod `modulus`.

    Raises
    ------
    RangeError
        If a play lies outside [0, modulus); names the agent.
    """
    agent: int
    play: int
    for agent, play in enumerate(plays):
        if not 0 <= play < modulus:
            raise RangeError(
                f"agent {agent} played {play}, outside [0, {modulus})", agent=agent, value=play
            )
    return sum(plays) % modulus


def convolve(left: Sequence[Fraction], right: Sequence[Fraction], modulus: int) -> list[Fraction]:
    """
    Distribution of the sum mod `modulus` of two independent integers.

    Parameters
    ----------
    left : Sequence[Fraction]
        Dense distribution of the first integer.
    right : Sequence[Fraction]
        Dense distribution of the second integer.
    modulus : int
        The modulus.

    Returns
    -------
    list[Fraction]
        Dense distribution of the sum.
    """
    result: list[Fraction] = [Fraction(0)] * modulus
    i: int
    p_left: Fraction
    for i, p_left in enumerate(left):
        if not p_left:
            continue
        j: int
        p_right: Fraction
        for j, p_right in enumerate(right):
            if p_right:
                result[(i + j) % modulus] += p_left * p_right
    return result


def _dense(strategy: MixedStrategy, modulus: int, agent: int) -> list[Fraction]:
    vector: list[Fraction] = [Fraction(0)] * modulus
    value: int
    weight: Fraction
    for value, weight in strategy.weights.items():
        if value >= modulus:
            raise RangeError(
                f"agent {agent} has support value {value} outside [0, {modulus})", agent, value
            )
        vector[value] = weight
    return vector


def sum_distribution(strategies: Sequence[MixedStrategy], modulus: int) -> list[Fraction]:
    """
    Dense distribution of the sum mod `modulus` of independent strategies.
    An empty sequence sums to 0 with certainty.
    """
    result: list[Fraction] = [Fraction(0)] * modulus
    result[0] = Fraction(1)
    agent: int
    strategy: MixedStrategy
    for agent, strategy in enumerate(strategies):
        result = convolve(result, _dense(strategy, modulus, agent), modulus)
    return result


def outcome_distribution(profile: Profile, modulus: int) -> MixedStrategy:
    """
    Exact distribution of the game's outcome when agents play independently.

    Parameters
    ----------
    profile : Profile
        One strategy per agent.
    modulus : int
        The game's modulus.

    Returns
    -------
    MixedStrategy
        The discrete convolution of every strategy under addition mod `modulus`.

    Raises
    ------
    ValidationError
        If the profile is empty.
    """
    if len(profile) == 0:
        raise ValidationError("cannot compute the outcome of an empty profile", "$.strategies")
    vector: list[Fraction] = sum_distribution(profile.strategies, modulus)
    return MixedStrategy(modulus, dict(enumerate(vector)))
