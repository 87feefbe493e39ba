"""Runs reproducible Monte Carlo trials of a mechanism and measures their distance to the exact law"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
import hashlib
import itertools
import json
import logging
from multiprocessing import Pool, Queue
from typing import Any, Hashable, Mapping, Sequence

import numpy as np

from common.constants import EXACT_DIST_MAX_OUTCOMES
from common.errors import CapacityError, ValidationError
from common.rationals import format_rational, to_jsonable
from logger import muted, worker_configurer
from modgame.game import sum_distribution
from sim.mechanisms import Plays, SimulatedMechanism, lookup
from sim.policy import AgentPolicy


@dataclass(slots=True, frozen=True)
class TrialReport:
    """
    Tallies of a Monte Carlo run.

    Attributes
    ----------
    mechanism : str
        Simulated mechanism id.
    trials : int
        Number of trials run.
    master_seed : int
        Seed every per-trial seed was split from.
    frequencies : dict[str, int]
        Count per outcome, keyed by the outcome's canonical JSON.
    empirical_tv : Fraction | None
        Total variation distance to the reference distribution, if one was given.
    """

    mechanism: str
    trials: int
    master_seed: int
    frequencies: dict[str, int] = field(default_factory=dict)
    empirical_tv: Fraction | None = None

    def empirical_distribution(self) -> dict[str, Fraction]:
        """Observed frequency of every outcome as an exact fraction of the trials."""
        return {outcome: Fraction(count, self.trials) for outcome, count in self.frequencies.items()}

    def to_json(self) -> dict[str, Any]:
        """JSON-ready form with the distance as "num/den"."""
        return {
            "mechanism": self.mechanism,
            "trials": self.trials,
            "master_seed": self.master_seed,
            "outcome_frequencies": dict(sorted(self.frequencies.items())),
            "empirical_tv": None if self.empirical_tv is None else format_rational(self.empirical_tv),
        }


def trial_seed(master_seed: int, trial: int) -> int:
    """
    Split a per-trial seed from the master seed: the blake2b-64 digest of
    "{master_seed}:{trial}" read as an unsigned big-endian integer.

    Parameters
    ----------
    master_seed : int
        Seed of the whole run.
    trial : int
        Trial index.

    Returns
    -------
    int
        A 64-bit seed for numpy.random.default_rng.
    """
    digest: bytes = hashlib.blake2b(f"{master_seed}:{trial}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def outcome_key(outcome: Any) -> str:
    """Canonical JSON text of an outcome, used as its tally key."""
    return json.dumps(to_jsonable(outcome), sort_keys=True, separators=(",", ":"))


def tv_distance(first: Mapping[Hashable, Fraction], second: Mapping[Hashable, Fraction]) -> Fraction:
    """
    Total variation distance, half the L1 distance. An outcome missing from
    one side has probability 0 there.

    Parameters
    ----------
    first : Mapping[Hashable, Fraction]
        A distribution.
    second : Mapping[Hashable, Fraction]
        Another distribution.

    Returns
    -------
    Fraction
        A value in [0, 1].
    """
    outcomes: set[Hashable] = set(first) | set(second)
    return sum(
        (abs(Fraction(first.get(o, 0)) - Fraction(second.get(o, 0))) for o in outcomes),
        Fraction(0),
    ) / 2


def _check_policies(simulated: SimulatedMechanism, instance: Any, policies: Sequence[AgentPolicy]) -> None:
    agents: int = simulated.agents(instance)
    if len(policies) != agents:
        raise ValidationError(
            f"{len(policies)} policies for {agents} agents", "$.policies"
        )
    if not simulated.reports and any(policy.report is not None for policy in policies):
        raise ValidationError(
            f"mechanism {simulated.mechanism_id!r} takes no reports", "$.policies.report"
        )


def _run_chunk(
    mechanism_id: str,
    instance: Any,
    policies: Sequence[AgentPolicy],
    master_seed: int,
    start: int,
    stop: int,
) -> Counter[str]:
    simulated: SimulatedMechanism = lookup(mechanism_id)
    modulus: int = simulated.modulus(instance)
    draws: int = simulated.draws(instance)
    reports: list[Any] = [policy.report for policy in policies]
    tally: Counter[str] = Counter()
    logging.debug("Running trials %d to %d of %s", start, stop, mechanism_id)
    # per-trial mechanism logs would flood the listener
    with muted():
        trial: int
        for trial in range(start, stop):
            rng: np.random.Generator = np.random.default_rng(trial_seed(master_seed, trial))
            plays: Plays = [[policy.draw(rng, modulus) for _ in range(draws)] for policy in policies]
            tally[outcome_key(simulated.play(instance, plays, reports))] += 1
    return tally


def _chunks(trials: int, workers: int) -> list[tuple[int, int]]:
    size: int = -(-trials // workers)
    return [(start, min(start + size, trials)) for start in range(0, trials, size)]


def run_trials(
    mechanism_id: str,
    instance: Any,
    policies: Sequence[AgentPolicy],
    trials: int,
    master_seed: int,
    workers: int = 1,
    reference: Mapping[str, Fraction] | None = None,
    log_queue: "Queue[str] | None" = None,
) -> TrialReport:
    """
    Run `trials` independent plays of a mechanism. Trial t draws every
    agent's game integers from a generator seeded by trial_seed(master_seed, t),
    so tallies do not depend on the worker count.

    Parameters
    ----------
    mechanism_id : str
        Simulated mechanism id.
    instance : Any
        The mechanism's instance (a ModGame for "parity"/"modgame").
    policies : Sequence[AgentPolicy]
        One policy per agent.
    trials : int
        Number of trials, at least 1.
    master_seed : int
        Seed of the run.
    workers : int, default 1
        Worker processes; contiguous trial ranges are split between them.
    reference : Mapping[str, Fraction] | None
        Distribution keyed by canonical outcome JSON to measure the tallies against.
    log_queue : Queue[str] | None
        Queue of the parent's log listener, attached in every worker.

    Returns
    -------
    TrialReport
        The merged tallies.

    Raises
    ------
    ValidationError
        If the policies do not match the agents or the trial count is not positive.
    """
    simulated: SimulatedMechanism = lookup(mechanism_id)
    _check_policies(simulated, instance, policies)
    if trials < 1 or workers < 1:
        raise ValidationError("trials and workers must be positive", "$.trials")
    logging.info("Simulating %s for %d trials on %d worker(s)", mechanism_id, trials, workers)

    ranges: list[tuple[int, int]] = _chunks(trials, workers)
    tallies: list[Counter[str]]
    if workers == 1:
        tallies = [_run_chunk(mechanism_id, instance, policies, master_seed, *span) for span in ranges]
    else:
        with Pool(
            workers,
            initializer=None if log_queue is None else worker_configurer,
            initargs=() if log_queue is None else (log_queue,),
        ) as pool:
            tallies = pool.starmap(
                _run_chunk,
                [(mechanism_id, instance, list(policies), master_seed, *span) for span in ranges],
            )
    total: Counter[str] = sum(tallies, Counter())

    report: TrialReport = TrialReport(mechanism_id, trials, master_seed, dict(sorted(total.items())))
    if reference is None:
        return report
    tv: Fraction = tv_distance(report.empirical_distribution(), reference)
    logging.info("Empirical TV distance %s", format_rational(tv))
    return TrialReport(mechanism_id, trials, master_seed, report.frequencies, tv)


def exact_distribution(
    mechanism_id: str, instance: Any, policies: Sequence[AgentPolicy]
) -> dict[str, Fraction]:
    """
    The exact outcome law under the policies, keyed like TrialReport
    frequencies. Each game outcome is weighted by the convolution of the
    agents' play distributions and pushed through the mechanism.

    Parameters
    ----------
    mechanism_id : str
        Simulated mechanism id.
    instance : Any
        The mechanism's instance.
    policies : Sequence[AgentPolicy]
        One policy per agent.

    Returns
    -------
    dict[str, Fraction]
        Probability of every reachable outcome.

    Raises
    ------
    CapacityError
        If there are too many game outcomes to enumerate.
    """
    simulated: SimulatedMechanism = lookup(mechanism_id)
    _check_policies(simulated, instance, policies)
    modulus: int = simulated.modulus(instance)
    draws: int = simulated.draws(instance)
    if modulus**draws > EXACT_DIST_MAX_OUTCOMES:
        raise CapacityError(
            f"{modulus}^{draws} game outcomes is above {EXACT_DIST_MAX_OUTCOMES}; use the Monte Carlo path"
        )
    agents: int = len(policies)
    reports: list[Any] = [policy.report for policy in policies]
    # draws are independent, so each draw's sum has the same law
    per_draw: list[Fraction] = sum_distribution(
        [policy.distribution(modulus) for policy in policies], modulus
    )
    law: dict[str, Fraction] = {}
    sums: tuple[int, ...]
    for sums in itertools.product(range(modulus), repeat=draws):
        weight: Fraction = Fraction(1)
        value: int
        for value in sums:
            weight *= per_draw[value]
        if weight == 0:
            continue
        # agent 0 carries the sums, the others play 0
        plays: Plays = [list(sums)] + [[0] * draws for _ in range(agents - 1)]
        key: str = outcome_key(simulated.play(instance, plays, reports))
        law[key] = law.get(key, Fraction(0)) + weight
    return dict(sorted(law.items()))
