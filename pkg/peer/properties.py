"""Defines peer selection mechanisms as report spaces, and the responsiveness and impartiality checkers"""

from abc import ABC, abstractmethod
from functools import lru_cache
import itertools
import logging
from math import factorial
from typing import Any, Hashable, Iterator

import numpy as np

from common.errors import ValidationError
from common.verdict import Verdict
from peer.elimination import spe_winner_linear
from peer.partition import non_candidates, partition_sides, partition_winner
from peer.profile import PeerProfile
from permute.lehmer import seed_to_order

# Full enumeration is used while a space holds at most this many points
ENUMERATION_LIMIT: int = 50_000

Configuration = tuple[Hashable, ...]


@lru_cache(maxsize=4096)
def _profile(prefs: tuple[tuple[int, ...], ...]) -> PeerProfile:
    return PeerProfile(len(prefs), prefs)


def _random_profile(rng: np.random.Generator, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in rng.permutation(n)) for _ in range(n))


def _profiles(n: int, samples: int, rng: np.random.Generator) -> list[tuple[tuple[int, ...], ...]]:
    rankings: list[tuple[int, ...]] = list(itertools.permutations(range(n)))
    if len(rankings) ** n <= samples:
        return list(itertools.product(rankings, repeat=n))
    return [_random_profile(rng, n) for _ in range(samples)]


class PeerMechanism(ABC):
    """
    A peer selection mechanism seen as a space of configurations, where a
    configuration fixes every agent's report.

    Attributes
    ----------
    n : int
        Number of agents.

    Methods
    -------
    configurations(exhaustive: bool, samples: int, rng: np.random.Generator) -> Iterator[Configuration]
        The configurations to test.
    alternatives(config: Configuration, agent: int) -> Iterator[Configuration]
        Every configuration reachable by changing only `agent`'s report.
    winner(config: Configuration) -> int
        The selected agent.
    describe(config: Configuration) -> dict[str, Any]
        JSON-ready form of a configuration for witnesses.
    """

    mechanism_id: str = ""

    def __init__(self, n: int) -> None:
        if n < 2:
            raise ValidationError(f"peer selection needs n >= 2, got {n}", "$.n")
        self.n: int = n

    @property
    def name(self) -> str:
        """
        Get the mechanism's registry id.

        Returns
        -------
        str
            The id.
        """
        return type(self).mechanism_id

    @abstractmethod
    def configurations(
        self, exhaustive: bool, samples: int, rng: np.random.Generator
    ) -> Iterator[Configuration]:
        """The configurations to test."""

    @abstractmethod
    def alternatives(self, config: Configuration, agent: int) -> Iterator[Configuration]:
        """Configurations differing from `config` only in `agent`'s report."""

    @abstractmethod
    def winner(self, config: Configuration) -> int:
        """The selected agent."""

    @abstractmethod
    def describe(self, config: Configuration) -> dict[str, Any]:
        """JSON-ready form of a configuration."""


class DerandRSE(PeerMechanism):
    """
    De-randomized random sequential elimination. A report is an integer in
    [0, n!) plus the ranking that drives the agent's eliminations; the second
    stage is the subgame-perfect continuation.
    """

    mechanism_id = "derand_rse"

    def configurations(
        self, exhaustive: bool, samples: int, rng: np.random.Generator
    ) -> Iterator[Configuration]:
        modulus: int = factorial(self.n)
        bid_vectors: list[tuple[int, ...]]
        if exhaustive and modulus**self.n <= ENUMERATION_LIMIT:
            bid_vectors = list(itertools.product(range(modulus), repeat=self.n))
        else:
            bid_vectors = [
                tuple(int(b) for b in rng.integers(0, modulus, size=self.n)) for _ in range(samples)
            ]
        prefs: tuple[tuple[int, ...], ...]
        for prefs in _profiles(self.n, samples, rng):
            bids: tuple[int, ...]
            for bids in bid_vectors:
                yield (bids, prefs)

    def alternatives(self, config: Configuration, agent: int) -> Iterator[Configuration]:
        bids: tuple[int, ...] = config[0]  # type: ignore[assignment]
        prefs: tuple[tuple[int, ...], ...] = config[1]  # type: ignore[assignment]
        ranking: tuple[int, ...]
        for ranking in itertools.permutations(range(self.n)):
            bid: int
            for bid in range(factorial(self.n)):
                yield (
                    bids[:agent] + (bid,) + bids[agent + 1 :],
                    prefs[:agent] + (ranking,) + prefs[agent + 1 :],
                )

    def winner(self, config: Configuration) -> int:
        bids: tuple[int, ...] = config[0]  # type: ignore[assignment]
        return spe_winner_linear(seed_to_order(bids, self.n)[1], _profile(config[1]))  # type: ignore[arg-type]

    def describe(self, config: Configuration) -> dict[str, Any]:
        return {"bids": list(config[0]), "prefs": [list(r) for r in config[1]]}  # type: ignore[union-attr]


class FixedOrderSE(PeerMechanism):
    """
    Sequential elimination on the identity order. A report is a ranking; the
    last agent never eliminates anyone.
    """

    mechanism_id = "fixed_order_se"

    def configurations(
        self, exhaustive: bool, samples: int, rng: np.random.Generator
    ) -> Iterator[Configuration]:
        budget: int = ENUMERATION_LIMIT if exhaustive else samples
        yield from _profiles(self.n, budget, rng)

    def alternatives(self, config: Configuration, agent: int) -> Iterator[Configuration]:
        ranking: tuple[int, ...]
        for ranking in itertools.permutations(range(self.n)):
            yield config[:agent] + (ranking,) + config[agent + 1 :]

    def winner(self, config: Configuration) -> int:
        return spe_winner_linear(list(range(self.n)), _profile(config))  # type: ignore[arg-type]

    def describe(self, config: Configuration) -> dict[str, Any]:
        return {"order": list(range(self.n)), "prefs": [list(r) for r in config]}  # type: ignore[union-attr]


class PartitionMechanism(PeerMechanism):
    """
    The partition mechanism. A configuration is every agent's vote (their
    favourite on the other side) plus the bits of the parity game slots. An
    agent's report is their vote and, when they end up a non-candidate, the
    bit in their slot.
    """

    mechanism_id = "partition"

    def __init__(self, n: int) -> None:
        if n < 4:
            raise ValidationError(f"the partition mechanism needs n >= 4, got {n}", "$.n")
        super().__init__(n)
        self._sides: tuple[list[int], list[int]] = partition_sides(n)

    def _opposite(self, agent: int) -> list[int]:
        return self._sides[1] if agent in self._sides[0] else self._sides[0]

    def profile(self, votes: tuple[int, ...]) -> PeerProfile:
        """
        Profile where each agent ranks their vote first and everyone else ascending.

        Parameters
        ----------
        votes : tuple[int, ...]
            Each agent's favourite on the other side.

        Returns
        -------
        PeerProfile
            A profile realizing the votes.
        """
        return _profile(
            tuple((vote,) + tuple(a for a in range(self.n) if a != vote) for vote in votes)
        )

    def configurations(
        self, exhaustive: bool, samples: int, rng: np.random.Generator
    ) -> Iterator[Configuration]:
        choices: list[list[int]] = [self._opposite(agent) for agent in range(self.n)]
        votes: tuple[int, ...]
        slots: tuple[int, ...]
        if exhaustive:
            for votes in itertools.product(*choices):
                for slots in itertools.product((0, 1), repeat=self.n - 2):
                    yield (votes, slots)
            return
        for _ in range(samples):
            votes = tuple(int(rng.choice(options)) for options in choices)
            slots = tuple(int(b) for b in rng.integers(0, 2, size=self.n - 2))
            yield (votes, slots)

    def alternatives(self, config: Configuration, agent: int) -> Iterator[Configuration]:
        votes: tuple[int, ...] = config[0]  # type: ignore[assignment]
        slots: tuple[int, ...] = config[1]  # type: ignore[assignment]
        vote: int
        for vote in self._opposite(agent):
            changed: tuple[int, ...] = votes[:agent] + (vote,) + votes[agent + 1 :]
            players: list[int] = non_candidates(self.profile(changed))
            if agent not in players:
                yield (changed, slots)
                continue
            slot: int = players.index(agent)
            bit: int
            for bit in (0, 1):
                yield (changed, slots[:slot] + (bit,) + slots[slot + 1 :])

    def winner(self, config: Configuration) -> int:
        return partition_winner(self.profile(config[0]), config[1])  # type: ignore[arg-type]

    def describe(self, config: Configuration) -> dict[str, Any]:
        return {"votes": list(config[0]), "parity_bits": list(config[1])}  # type: ignore[arg-type]


class ConstantMechanism(PeerMechanism):
    """Always selects agent 0. A report is a ranking."""

    mechanism_id = "constant"

    def configurations(
        self, exhaustive: bool, samples: int, rng: np.random.Generator
    ) -> Iterator[Configuration]:
        yield from _profiles(self.n, ENUMERATION_LIMIT if exhaustive else samples, rng)

    def alternatives(self, config: Configuration, agent: int) -> Iterator[Configuration]:
        ranking: tuple[int, ...]
        for ranking in itertools.permutations(range(self.n)):
            yield config[:agent] + (ranking,) + config[agent + 1 :]

    def winner(self, config: Configuration) -> int:
        return 0

    def describe(self, config: Configuration) -> dict[str, Any]:
        return {"prefs": [list(r) for r in config]}  # type: ignore[union-attr]


PEER_MECHANISMS: dict[str, type[PeerMechanism]] = {
    mechanism.mechanism_id: mechanism
    for mechanism in (DerandRSE, FixedOrderSE, PartitionMechanism, ConstantMechanism)
}


def build_mechanism(mechanism_id: str, n: int) -> PeerMechanism:
    """
    Look up a peer mechanism by id.

    Parameters
    ----------
    mechanism_id : str
        One of derand_rse, fixed_order_se, partition, constant.
    n : int
        Number of agents.

    Returns
    -------
    PeerMechanism
        The mechanism bound to n agents.
    """
    if mechanism_id not in PEER_MECHANISMS:
        raise ValidationError(
            f"unknown peer mechanism {mechanism_id!r}, expected one of {sorted(PEER_MECHANISMS)}",
            "$.mechanism",
        )
    return PEER_MECHANISMS[mechanism_id](n)


def check_responsive(
    mechanism_id: str, n: int, exhaustive: bool = True, samples: int = 200, seed: int = 0
) -> Verdict:
    """
    Every agent, in every configuration, has two reports giving different winners.

    Parameters
    ----------
    mechanism_id : str
        Registry id of the mechanism.
    n : int
        Number of agents.
    exhaustive : bool
        Enumerate the configuration space where feasible instead of sampling.
    samples : int
        Sample size for the parts that are sampled.
    seed : int
        Seed for sampling.

    Returns
    -------
    Verdict
        On failure the witness names an agent whose every report gives the same winner.
    """
    mechanism: PeerMechanism = build_mechanism(mechanism_id, n)
    name: str = f"responsive[{mechanism_id}]"
    checked: int = 0
    config: Configuration
    for config in mechanism.configurations(exhaustive, samples, np.random.default_rng(seed)):
        checked += 1
        base: int = mechanism.winner(config)
        agent: int
        for agent in range(n):
            if all(mechanism.winner(alt) == base for alt in mechanism.alternatives(config, agent)):
                logging.info("%s fails for agent %d", name, agent)
                return Verdict.failure(
                    name,
                    {"agent": agent, "winner": base, "configuration": mechanism.describe(config)},
                    checked,
                )
    return Verdict.success(name, checked)


def check_impartial(
    mechanism_id: str, n: int, exhaustive: bool = True, samples: int = 200, seed: int = 0
) -> Verdict:
    """
    No agent can change whether they themselves are selected.

    Parameters
    ----------
    mechanism_id : str
        Registry id of the mechanism.
    n : int
        Number of agents.
    exhaustive : bool
        Enumerate the configuration space where feasible instead of sampling.
    samples : int
        Sample size for the parts that are sampled.
    seed : int
        Seed for sampling.

    Returns
    -------
    Verdict
        On failure the witness holds the agent, the configuration and the deviation.
    """
    mechanism: PeerMechanism = build_mechanism(mechanism_id, n)
    name: str = f"impartial[{mechanism_id}]"
    checked: int = 0
    config: Configuration
    for config in mechanism.configurations(exhaustive, samples, np.random.default_rng(seed)):
        checked += 1
        base: int = mechanism.winner(config)
        agent: int
        for agent in range(n):
            alt: Configuration
            for alt in mechanism.alternatives(config, agent):
                if (mechanism.winner(alt) == agent) != (base == agent):
                    logging.info("%s fails for agent %d", name, agent)
                    return Verdict.failure(
                        name,
                        {
                            "agent": agent,
                            "configuration": mechanism.describe(config),
                            "deviation": mechanism.describe(alt),
                        },
                        checked,
                    )
    return Verdict.success(name, checked)
