"""Defines how a simulated agent plays the game and what it reports"""

from dataclasses import dataclass
from enum import Enum
from typing import Any

import numpy as np

from common.errors import RangeError, ValidationError
from common.rationals import format_rational
from modgame.strategy import MixedStrategy, point_mass, uniform_strategy


class PlayKind(Enum):
    """
    How an agent picks its game integers.
    """

    UNIFORM: str = "uniform"
    FIXED: str = "fixed"
    CUSTOM: str = "custom"


@dataclass(slots=True, frozen=True)
class AgentPolicy:
    """
    A simulated agent.

    Attributes
    ----------
    kind : PlayKind
        Uniform, fixed or custom play.
    value : int | None
        The integer played by a fixed agent.
    strategy : MixedStrategy | None
        The distribution of a custom agent.
    report : Any
        The mechanism report; None means sincere.

    Methods
    -------
    draw(rng: np.random.Generator, modulus: int) -> int
        One game integer.
    distribution(modulus: int) -> MixedStrategy
        The exact distribution of `draw`.
    """

    kind: PlayKind = PlayKind.UNIFORM
    value: int | None = None
    strategy: MixedStrategy | None = None
    report: Any = None

    def __post_init__(self) -> None:
        if self.kind is PlayKind.FIXED and self.value is None:
            raise ValidationError("a fixed policy needs a value", "$.policies.value")
        if self.kind is PlayKind.CUSTOM and self.strategy is None:
            raise ValidationError("a custom policy needs a strategy", "$.policies.strategy")

    @classmethod
    def uniform(cls, report: Any = None) -> "AgentPolicy":
        """Plays uniformly at random."""
        return cls(PlayKind.UNIFORM, report=report)

    @classmethod
    def fixed(cls, value: int, report: Any = None) -> "AgentPolicy":
        """Always plays `value`."""
        return cls(PlayKind.FIXED, value=value, report=report)

    @classmethod
    def custom(cls, strategy: MixedStrategy, report: Any = None) -> "AgentPolicy":
        """Plays `strategy`."""
        return cls(PlayKind.CUSTOM, strategy=strategy, report=report)

    def _check_modulus(self, modulus: int) -> None:
        if self.kind is PlayKind.FIXED and not 0 <= int(self.value) < modulus:  # type: ignore[arg-type]
            raise RangeError(f"fixed play {self.value} outside [0, {modulus})", value=self.value)
        if self.kind is PlayKind.CUSTOM and self.strategy.modulus != modulus:  # type: ignore[union-attr]
            raise ValidationError(
                f"strategy modulus {self.strategy.modulus} does not match the game size {modulus}",  # type: ignore[union-attr]
                "$.policies.strategy",
            )

    def draw(self, rng: np.random.Generator, modulus: int) -> int:
        """
        Draw one game integer.

        Parameters
        ----------
        rng : np.random.Generator
            The trial's generator.
        modulus : int
            The game size.

        Returns
        -------
        int
            An integer in [0, modulus).
        """
        self._check_modulus(modulus)
        if self.kind is PlayKind.FIXED:
            return int(self.value)  # type: ignore[arg-type]
        if self.kind is PlayKind.UNIFORM:
            return int(rng.integers(0, modulus))
        strategy: MixedStrategy = self.strategy  # type: ignore[assignment]
        support: list[int] = list(strategy.weights)
        index: int = int(rng.choice(len(support), p=[float(w) for w in strategy.weights.values()]))
        return support[index]

    def distribution(self, modulus: int) -> MixedStrategy:
        """
        The exact distribution of one draw.

        Parameters
        ----------
        modulus : int
            The game size.

        Returns
        -------
        MixedStrategy
            Uniform, point mass or the custom strategy.
        """
        self._check_modulus(modulus)
        if self.kind is PlayKind.FIXED:
            return point_mass(int(self.value), modulus)  # type: ignore[arg-type]
        if self.kind is PlayKind.UNIFORM:
            return uniform_strategy(modulus)
        return self.strategy  # type: ignore[return-value]

    def to_json(self) -> dict[str, Any]:
        """JSON-ready form."""
        data: dict[str, Any] = {"kind": self.kind.value}
        if self.value is not None:
            data["value"] = self.value
        if self.strategy is not None:
            data["strategy"] = {
                "modulus": self.strategy.modulus,
                "weights": {
                    str(value): format_rational(weight)
                    for value, weight in self.strategy.weights.items()
                },
            }
        if self.report is not None:
            data["report"] = self.report
        return data
