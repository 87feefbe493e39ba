"""Executes a parsed instance file and produces its transcript"""

from fractions import Fraction
import logging
from typing import Any, Callable

from alloc.instance import RationalMatrix
from alloc.priority import derand_rp
from alloc.realization import derand_ps, ps_modulus, realize_assignment
from alloc.serial import probabilistic_serial
from cli.instance_file import InstanceFile
from common.constants import LRM_MODULUS
from common.errors import ValidationError
from common.transcript import GamePlacement, MechanismTranscript
from modgame.game import outcome_sum, sum_distribution
from peer.elimination import derand_rse_transcript
from school.lottery import TieBreakMode, derand_da
from simple_mechs.dictator import DictatorBallot, derand_dictator
from simple_mechs.facility import FacilityReport, derand_lrm
from sim.mechanisms import SimulatedMechanism, lookup
from sim.policy import AgentPolicy
from sim.trials import exact_distribution
from tasks.allocation import TaskOutcome, derand_biased_min_work, xor_bits


def _run_dictator(instance: InstanceFile, _: bool) -> MechanismTranscript:
    n: int = len(instance.payload)
    winner: Any = derand_dictator(
        [DictatorBallot(bid, report) for bid, report in zip(instance.bids, instance.payload)]
    )
    return MechanismTranscript(
        "dictator",
        GamePlacement.GAME_LAST,
        list(instance.bids),
        seed=outcome_sum(instance.bids, n),
        modulus=n,
        outcome=winner,
        details={"reports": list(instance.payload)},
    )


def _run_lrm(instance: InstanceFile, _: bool) -> MechanismTranscript:
    location: Fraction = derand_lrm(
        [FacilityReport(bid, position) for bid, position in zip(instance.bids, instance.payload)]
    )
    return MechanismTranscript(
        "lrm",
        GamePlacement.GAME_LAST,
        list(instance.bids),
        seed=outcome_sum(instance.bids, LRM_MODULUS),
        modulus=LRM_MODULUS,
        outcome=location,
        details={"reports": list(instance.payload)},
    )


def _run_tasks(instance: InstanceFile, _: bool) -> MechanismTranscript:
    outcome: TaskOutcome = derand_biased_min_work(instance.payload, instance.bids)
    return MechanismTranscript(
        "tasks",
        GamePlacement.GAME_INTERLEAVED,
        [list(pair) for pair in instance.bids],
        modulus=2,
        outcome={"a1": outcome.a1, "a2": outcome.a2, "p1": outcome.p1, "p2": outcome.p2},
        details={"bits": xor_bits(instance.bids)},
    )


def _run_peer(instance: InstanceFile, _: bool) -> MechanismTranscript:
    return derand_rse_transcript(
        instance.bids, instance.payload, None if instance.choices is None else list(instance.choices)
    )


def _run_school(instance: InstanceFile, _: bool) -> MechanismTranscript:
    bids: Any = instance.bids if instance.mode == "compact" else list(instance.bids)
    return derand_da(instance.payload, bids, TieBreakMode(instance.mode))[1]


def _run_alloc(instance: InstanceFile, strict: bool) -> MechanismTranscript:
    if instance.mode == "rp":
        return derand_rp(list(instance.bids), instance.payload)[1]
    if instance.bids is not None:
        return derand_ps(list(instance.bids), instance.payload, instance.modulus, strict)[1]
    # sigma supplied directly, no bids
    size: int = ps_modulus(instance.payload.n, instance.payload.m) if instance.modulus is None else instance.modulus
    matrix: RationalMatrix = probabilistic_serial(instance.payload)[0]
    allocation: dict[int, int] = realize_assignment(matrix, instance.sigma, size, strict)
    return MechanismTranscript(
        "alloc",
        GamePlacement.GAME_LAST,
        None,
        seed=instance.sigma,
        modulus=size,
        outcome={str(item): owner for item, owner in sorted(allocation.items())},
        details={"mode": "ps", "matrix": matrix, "strict": strict},
    )


RUNNERS: dict[str, Callable[[InstanceFile, bool], MechanismTranscript]] = {
    "dictator": _run_dictator,
    "lrm": _run_lrm,
    "tasks": _run_tasks,
    "peer": _run_peer,
    "school": _run_school,
    "alloc": _run_alloc,
}


def run_instance(instance: InstanceFile, strict: bool = False) -> MechanismTranscript:
    """
    Execute the mechanism of an instance file with its recorded bids.

    Parameters
    ----------
    instance : InstanceFile
        A parsed instance carrying bids (or sigma for alloc ps).
    strict : bool
        Use the literal sigma / N draw for alloc ps.

    Returns
    -------
    MechanismTranscript
        The transcript; identical inputs give byte-identical dumps.

    Raises
    ------
    ValidationError
        If the file has nothing to play with.
    """
    if instance.bids is None and not (instance.domain == "alloc" and instance.sigma is not None):
        raise ValidationError("the instance has no bids to run", "$.bids")
    logging.info("Running %s", instance.mechanism_id)
    return RUNNERS[instance.domain](instance, strict)


def policies_of(instance: InstanceFile) -> list[AgentPolicy]:
    """The file's policies, or every agent uniform and sincere."""
    if instance.policies is not None:
        return list(instance.policies)
    simulated: SimulatedMechanism = lookup(instance.mechanism_id)
    return [AgentPolicy.uniform() for _ in range(simulated.agents(instance.payload))]


def exact_dist(instance: InstanceFile) -> dict[str, Any]:
    """
    The law of the embedded game's sum and of the mechanism outcome under the
    file's policies.

    Parameters
    ----------
    instance : InstanceFile
        A parsed instance.

    Returns
    -------
    dict[str, Any]
        mechanism, modulus, draws per agent, "game" (sum value to probability)
        and "outcomes" (canonical outcome JSON to probability).
    """
    simulated: SimulatedMechanism = lookup(instance.mechanism_id)
    policies: list[AgentPolicy] = policies_of(instance)
    modulus: int = simulated.modulus(instance.payload)
    game: list[Fraction] = sum_distribution([policy.distribution(modulus) for policy in policies], modulus)
    return {
        "mechanism": instance.mechanism_id,
        "modulus": modulus,
        "draws": simulated.draws(instance.payload),
        "game": {str(value): p for value, p in enumerate(game) if p},
        "outcomes": exact_distribution(instance.mechanism_id, instance.payload, policies),
    }
