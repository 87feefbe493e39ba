"""Defines the audit transcript recorded by every de-randomized mechanism"""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from common.rationals import to_jsonable


class GamePlacement(Enum):
    """
    Where the modular arithmetic game sits relative to the mechanism.
    """

    GAME_FIRST: str = "game-first"
    GAME_LAST: str = "game-last"
    GAME_INTERLEAVED: str = "game-interleaved"


@dataclass(slots=True)
class MechanismTranscript:
    """
    Full record of one mechanism run: the bids, what was derived from them and
    the discrete outcome, so the run can be replayed and audited.

    Attributes
    ----------
    domain : str
        The mechanism's domain tag (dictator, lrm, tasks, peer, school, alloc).
    placement : GamePlacement
        How the game was combined with the mechanism.
    bids : Any
        The submitted game integers exactly as received.
    seed : int | None
        The game outcome (sum of bids modulo the game size), when there is one.
    modulus : int | None
        The game size.
    permutation : list[int] | None
        The priority or elimination order derived from the seed.
    outcome : Any
        The discrete outcome of the mechanism.
    details : dict[str, Any]
        Anything else needed to replay the run (strict priorities, matrices).
    """

    domain: str
    placement: GamePlacement
    bids: Any
    seed: int | None = None
    modulus: int | None = None
    permutation: list[int] | None = None
    outcome: Any = None
    details: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        """
        Returns the transcript as JSON-ready data with rationals as "num/den".

        Returns
        -------
        dict[str, Any]
            The transcript fields.
        """
        return {
            "domain": self.domain,
            "placement": self.placement.value,
            "bids": to_jsonable(self.bids),
            "seed": self.seed,
            "modulus": self.modulus,
            "permutation": self.permutation,
            "outcome": to_jsonable(self.outcome),
            "details": to_jsonable(self.details),
        }

    def dumps(self) -> str:
        """
        Canonical serialization: sorted keys, fixed separators, so identical
        runs produce byte-identical text.

        Returns
        -------
        str
            The transcript as a JSON document.
        """
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
