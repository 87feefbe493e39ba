"""Adapters that let the simulator drive every de-randomized mechanism"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Sequence

from alloc.instance import AllocInstance
from alloc.priority import derand_rp
from alloc.realization import common_denominator, realize_assignment
from alloc.serial import probabilistic_serial
from common.constants import LRM_MODULUS
from common.errors import ValidationError
from modgame.game import ModGame, outcome_sum
from peer.elimination import derand_rse
from peer.profile import PeerProfile
from school.instance import SchoolInstance
from school.lottery import derand_da
from simple_mechs.dictator import DictatorBallot, derand_dictator
from simple_mechs.facility import FacilityReport, derand_lrm
from tasks.allocation import TaskInstance, TaskOutcome, derand_biased_min_work

# plays[agent] holds that agent's game integers for one trial
Plays = list[list[int]]


@dataclass(slots=True, frozen=True)
class SimulatedMechanism:
    """
    How to run one mechanism from drawn game integers.

    Attributes
    ----------
    mechanism_id : str
        Registry id.
    agents : Callable[[Any], int]
        Number of agents of an instance.
    modulus : Callable[[Any], int]
        Game size of an instance.
    draws : Callable[[Any], int]
        Game integers each agent draws per trial.
    play : Callable[[Any, Plays, Sequence[Any]], Any]
        The outcome given the instance, the plays and the reports (None for sincere).
    reports : bool
        Whether the mechanism takes a per-agent report.
    """

    mechanism_id: str
    agents: Callable[[Any], int]
    modulus: Callable[[Any], int]
    draws: Callable[[Any], int]
    play: Callable[[Any, Plays, Sequence[Any]], Any]
    reports: bool = False


def _one(_: Any) -> int:
    return 1


def _play_game(game: ModGame, plays: Plays, _: Sequence[Any]) -> int:
    return outcome_sum([p[0] for p in plays], game.modulus)


def _play_dictator(favourites: Sequence[Any], plays: Plays, reports: Sequence[Any]) -> Any:
    return derand_dictator(
        [
            DictatorBallot(p[0], favourite if report is None else report)
            for p, favourite, report in zip(plays, favourites, reports)
        ]
    )


def _play_lrm(positions: Sequence[Fraction], plays: Plays, reports: Sequence[Any]) -> Fraction:
    return derand_lrm(
        [
            FacilityReport(p[0], Fraction(position if report is None else report))
            for p, position, report in zip(plays, positions, reports)
        ]
    )


def _play_tasks(instance: TaskInstance, plays: Plays, _: Sequence[Any]) -> dict[str, Any]:
    outcome: TaskOutcome = derand_biased_min_work(instance, list(zip(plays[0], plays[1])))
    return {"a1": outcome.a1, "a2": outcome.a2, "p1": outcome.p1, "p2": outcome.p2}


def _play_peer(profile: PeerProfile, plays: Plays, _: Sequence[Any]) -> int:
    return derand_rse([p[0] for p in plays], profile)


def _play_school(instance: SchoolInstance, plays: Plays, _: Sequence[Any]) -> dict[str, int]:
    return derand_da(instance, [p[0] for p in plays])[0].to_json()


def _play_rp(instance: AllocInstance, plays: Plays, _: Sequence[Any]) -> dict[str, int]:
    return {str(item): agent for item, agent in sorted(derand_rp([p[0] for p in plays], instance)[0].items())}


def _ps_modulus(instance: AllocInstance) -> int:
    return common_denominator(probabilistic_serial(instance)[0])


def _play_ps(instance: AllocInstance, plays: Plays, _: Sequence[Any]) -> dict[str, int]:
    matrix = probabilistic_serial(instance)[0]
    modulus: int = common_denominator(matrix)
    sigma: int = outcome_sum([p[0] for p in plays], modulus)
    return {str(item): agent for item, agent in sorted(realize_assignment(matrix, sigma, modulus).items())}


_GAME: SimulatedMechanism = SimulatedMechanism(
    "modgame", lambda game: game.n_agents, lambda game: game.modulus, _one, _play_game
)

# alloc-ps uses the reduced common denominator as its game size
MECHANISMS: dict[str, SimulatedMechanism] = {
    "modgame": _GAME,
    "parity": _GAME,
    "dictator": SimulatedMechanism("dictator", len, len, _one, _play_dictator, reports=True),
    "lrm": SimulatedMechanism(
        "lrm", len, lambda _: LRM_MODULUS, _one, _play_lrm, reports=True
    ),
    "tasks": SimulatedMechanism("tasks", lambda _: 2, lambda _: 2, lambda i: i.m, _play_tasks),
    "peer": SimulatedMechanism(
        "peer", lambda p: p.n, lambda p: factorial(p.n), _one, _play_peer
    ),
    "school": SimulatedMechanism(
        "school",
        lambda i: i.n_students,
        lambda i: factorial(i.n_students),
        _one,
        _play_school,
    ),
    "alloc-rp": SimulatedMechanism(
        "alloc-rp", lambda i: i.n, lambda i: factorial(i.n), _one, _play_rp
    ),
    "alloc-ps": SimulatedMechanism("alloc-ps", lambda i: i.n, _ps_modulus, _one, _play_ps),
}


def lookup(mechanism_id: str) -> SimulatedMechanism:
    """
    Find a simulated mechanism by id.

    Parameters
    ----------
    mechanism_id : str
        One of the MECHANISMS keys.

    Returns
    -------
    SimulatedMechanism
        The adapter.
    """
    if mechanism_id not in MECHANISMS:
        raise ValidationError(
            f"unknown mechanism {mechanism_id!r}, expected one of {sorted(MECHANISMS)}", "$.mechanism"
        )
    return MECHANISMS[mechanism_id]
