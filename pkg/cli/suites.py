"""Property suites run by `verify`, one list of Verdicts per package"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
import itertools
import logging
from math import factorial
from typing import Any, Callable, Iterable, Sequence

import numpy as np
from tqdm import tqdm
import yaml

from alloc.instance import AllocInstance, RationalMatrix, allocation_matrix, zero_matrix
from alloc.priority import derand_rp, rp_distribution_oracle, serial_dictatorship
from alloc.properties import pareto_efficient, sd_efficient, sd_envy_free
from alloc.realization import common_denominator, denominator_bound_check, realization_marginals
from alloc.serial import probabilistic_serial
from common.constants import DEFAULT_TV_THRESHOLD, LRM_APPROXIMATION, TASK_APPROXIMATION
from common.errors import ProtocolError, ValidationError
from common.transcript import MechanismTranscript
from common.verdict import Verdict, combine
from modgame.equilibrium import parity_equilibrium_grid, verify_nash
from modgame.game import ModGame, outcome_distribution, parity_game, win_loss_game
from modgame.strategy import MixedStrategy, Profile, is_quasi_uniform, pure_profile, uniform_strategy
from peer.elimination import spe_winner_linear, spe_winner_oracle
from peer.profile import PeerProfile
from peer.properties import check_impartial, check_responsive
from permute.compact import BidRange, CompactBids, compact_bid_ranges, compact_priority_order, enumerate_compact_bids
from permute.lehmer import lehmer_decode, lehmer_encode
from school.acceptance import StrictPriorities, find_student_manipulation, is_stable
from school.instance import Matching, SchoolInstance
from school.lottery import TieBreakMode, derand_da, replay_transcript
from simple_mechs.dictator import best_dictator_deviation
from simple_mechs.facility import best_lrm_deviation, lrm_expected_ratio
from sim.policy import AgentPolicy
from sim.trials import TrialReport, exact_distribution, run_trials
from tasks.allocation import TaskInstance
from tasks.makespan import expected_makespan_uniform, optimal_makespan
from tasks.truthfulness import find_profitable_misreport, individually_rational
from tasks.truthfulness import winning_weakly_dominates


@dataclass(slots=True)
class SuiteOptions:
    """
    Parameters shared by every suite.

    Attributes
    ----------
    seed : int
        Seed for sampled instances and Monte Carlo runs.
    config : dict[str, Any]
        The suite's section of the YAML defaults, already overridden by flags.
    workers : int
        Worker processes for Monte Carlo runs.
    progress : bool
        Show tqdm progress bars.
    """

    seed: int
    config: dict[str, Any] = field(default_factory=dict)
    workers: int = 1
    progress: bool = True

    def rng(self) -> np.random.Generator:
        """A fresh generator seeded with the run's seed."""
        return np.random.default_rng(self.seed)

    def steps(self, values: Iterable[Any], desc: str) -> Iterable[Any]:
        """Wrap an iterable with a progress bar when enabled."""
        return tqdm(values, desc=desc, leave=False, disable=not self.progress)


class PropertyTally:
    """
    Aggregates many checks of the same properties, keeping the first failure
    of each one together with the context it happened in.

    Methods
    -------
    record(verdict: Verdict, context: dict[str, Any] | None) -> None
        Count one checker result.
    check(name: str, holds: bool, context: dict[str, Any] | None) -> None
        Count one boolean check.
    verdicts() -> list[Verdict]
        One Verdict per property, in first-seen order.
    """

    def __init__(self) -> None:
        self.__verdicts: dict[str, Verdict] = {}

    def record(self, verdict: Verdict, context: dict[str, Any] | None = None) -> None:
        """
        Count one checker result.

        Parameters
        ----------
        verdict : Verdict
            The result.
        context : dict[str, Any] | None
            Instance data merged into the witness on failure.
        """
        current: Verdict | None = self.__verdicts.get(verdict.name)
        if current is not None and not current.passed:
            return
        checked: int = 1 if current is None else current.checked + 1
        self.__verdicts[verdict.name] = (
            Verdict.success(verdict.name, checked)
            if verdict.passed
            else Verdict.failure(verdict.name, {**(context or {}), **verdict.witness}, checked)
        )

    def check(self, name: str, holds: bool, context: dict[str, Any] | None = None) -> None:
        """Count one boolean check of `name`."""
        self.record(Verdict(name, holds), context)

    def failed(self, name: str) -> bool:
        """Whether `name` already has a failure."""
        return name in self.__verdicts and not self.__verdicts[name].passed

    def verdicts(self) -> list[Verdict]:
        """One Verdict per property."""
        return list(self.__verdicts.values())


def load_suite_config(file_path: str) -> dict[str, dict[str, Any]]:
    """
    Reads the suite defaults.

    Parameters
    ----------
    file_path : str
        Path to the YAML file.

    Returns
    -------
    dict[str, dict[str, Any]]
        One mapping of settings per suite.
    """
    with open(file_path, encoding="utf-8") as file:
        config: dict[str, dict[str, Any]] = yaml.safe_load(file) or {}
    return config


def expect_failure(name: str, verdict: Verdict) -> Verdict:
    """
    Invert a verdict for properties that are known not to hold; the passing
    result carries the refuting witness.
    """
    if verdict.passed:
        return Verdict.failure(name, {"unexpectedly_passed": verdict.name}, verdict.checked)
    return Verdict(name, True, verdict.witness, verdict.checked)


def _random_strategy(rng: np.random.Generator, modulus: int) -> MixedStrategy:
    weights: list[int] = [int(w) for w in rng.integers(0, 4, size=modulus)]
    if sum(weights) == 0:
        weights[int(rng.integers(modulus))] = 1
    total: int = sum(weights)
    return MixedStrategy(modulus, {value: Fraction(w, total) for value, w in enumerate(weights)})


def _random_game(rng: np.random.Generator, n_agents: int, modulus: int) -> ModGame:
    return ModGame(
        n_agents,
        modulus,
        tuple(
            tuple(Fraction(int(u)) for u in rng.integers(-5, 6, size=modulus))
            for _ in range(n_agents)
        ),
    )


# ----- Modular Game ----- #
def modgame_suite(options: SuiteOptions) -> list[Verdict]:
    """Uniform convolution, quasi-uniform equilibria and the parity game."""
    rng: np.random.Generator = options.rng()
    samples: int = options.config["samples"]
    max_agents: int = options.config["n"]
    tally: PropertyTally = PropertyTally()

    modulus: int
    for modulus in options.steps(range(2, options.config["max_modulus"] + 1), "convolution"):
        for _ in range(samples):
            n_agents: int = int(rng.integers(1, max_agents + 1))
            strategies: list[MixedStrategy] = [_random_strategy(rng, modulus) for _ in range(n_agents)]
            strategies[int(rng.integers(n_agents))] = uniform_strategy(modulus)
            tally.check(
                "uniform-convolution",
                outcome_distribution(Profile(tuple(strategies)), modulus).is_uniform(),
                {"modulus": modulus, "profile": [dict(s.weights) for s in strategies]},
            )

    for _ in options.steps(range(samples), "quasi-uniform"):
        modulus = int(rng.integers(2, options.config["nash_max_modulus"] + 1))
        n_agents = int(rng.integers(2, max_agents + 1))
        strategies = [_random_strategy(rng, modulus) for _ in range(n_agents)]
        slot: int
        for slot in rng.choice(n_agents, size=2, replace=False):
            strategies[int(slot)] = uniform_strategy(modulus)
        profile: Profile = Profile(tuple(strategies))
        verdict: Verdict = verify_nash(_random_game(rng, n_agents, modulus), profile)
        tally.check(
            "quasi-uniform-nash",
            is_quasi_uniform(profile, modulus) and verdict.passed,
            {"modulus": modulus, **verdict.witness},
        )

    # two agents on {0, 1} and two on {0, 2} with distinct preferred outcomes
    half: Fraction = Fraction(1, 2)
    paired: Profile = Profile(
        (
            MixedStrategy(4, {0: half, 1: half}),
            MixedStrategy(4, {0: half, 1: half}),
            MixedStrategy(4, {0: half, 2: half}),
            MixedStrategy(4, {0: half, 2: half}),
        )
    )
    tally.check("paired-support-nash", verify_nash(win_loss_game([0, 1, 2, 3], 4), paired).passed)

    plays: tuple[int, ...]
    for plays in itertools.product(range(2), repeat=2):
        tally.check(
            "pure-parity-not-nash",
            not verify_nash(parity_game(), pure_profile(list(plays), 2)).passed,
            {"plays": list(plays)},
        )

    grid: list[tuple[Fraction, Fraction]] = parity_equilibrium_grid()
    tally.check("parity-grid-unique", grid == [(half, half)], {"grid": [list(point) for point in grid]})
    return tally.verdicts()


# ----- Permutations ----- #
def permute_suite(options: SuiteOptions) -> list[Verdict]:
    """Lehmer bijection and compact-order uniformity."""
    tally: PropertyTally = PropertyTally()
    n: int
    for n in options.steps(range(1, options.config["n"] + 1), "lehmer"):
        seen: set[tuple[int, ...]] = set()
        code: int
        for code in range(factorial(n)):
            perm: list[int] = lehmer_decode(code, n)
            seen.add(tuple(perm))
            tally.check("lehmer-bijection", lehmer_encode(perm) == code, {"n": n, "code": code, "perm": perm})
        tally.check("lehmer-bijection", len(seen) == factorial(n), {"n": n, "distinct": len(seen)})

    for n in options.steps(range(1, options.config["compact_n"] + 1), "compact"):
        counts: Counter[tuple[int, ...]] = Counter(
            tuple(compact_priority_order(bids, n)) for bids in enumerate_compact_bids(n)
        )
        tally.check(
            "compact-uniform",
            len(counts) == factorial(n) and len(set(counts.values())) == 1,
            {"n": n, "orders": len(counts), "multiplicities": sorted(set(counts.values()))},
        )
    return tally.verdicts()


# ----- Simple Mechanisms ----- #
def simple_suite(options: SuiteOptions) -> list[Verdict]:
    """LRM ratio and sincerity of the dictator and LRM games."""
    rng: np.random.Generator = options.rng()
    samples: int = options.config["samples"]
    max_agents: int = options.config["n"]
    tally: PropertyTally = PropertyTally()

    for _ in options.steps(range(samples), "lrm"):
        n: int = int(rng.integers(2, max_agents + 1))
        positions: list[Fraction] = [
            Fraction(int(x), int(d))
            for x, d in zip(rng.integers(-20, 21, size=n), rng.integers(1, 4, size=n))
        ]
        if len(set(positions)) == 1:
            positions[0] += 1
        ratio: Fraction = lrm_expected_ratio(positions)
        tally.check("lrm-ratio", ratio == LRM_APPROXIMATION, {"positions": positions, "ratio": ratio})
        agent: int = int(rng.integers(n))
        deviation: tuple[int, Fraction, Fraction] | None = best_lrm_deviation(positions, agent)
        tally.check(
            "lrm-sincere",
            deviation is None,
            {"positions": positions, "agent": agent, "deviation": list(deviation or ())},
        )

    candidates: list[str] = ["a", "b", "c", "d"]
    for _ in options.steps(range(samples), "dictator"):
        n = int(rng.integers(1, max_agents + 1))
        favourites: list[str] = [candidates[int(c)] for c in rng.integers(0, len(candidates), size=n)]
        agent = int(rng.integers(n))
        found: tuple[int, Any, Fraction] | None = best_dictator_deviation(favourites, candidates, agent)
        tally.check(
            "dictator-sincere",
            found is None,
            {"favourites": favourites, "agent": agent, "deviation": list(found or ())},
        )
    return tally.verdicts()


# ----- Task Allocation ----- #
def _random_tasks(rng: np.random.Generator, m: int) -> TaskInstance:
    return TaskInstance(
        m,
        (
            tuple(Fraction(int(t)) for t in rng.integers(1, 11, size=m)),
            tuple(Fraction(int(t)) for t in rng.integers(1, 11, size=m)),
        ),
    )


def tasks_suite(options: SuiteOptions) -> list[Verdict]:
    """Makespan approximation and strong truthfulness of biased min-work."""
    rng: np.random.Generator = options.rng()
    tally: PropertyTally = PropertyTally()

    for _ in options.steps(range(options.config["samples"]), "approximation"):
        instance: TaskInstance = _random_tasks(rng, int(rng.integers(1, options.config["n"] + 1)))
        expected: Fraction = expected_makespan_uniform(instance)
        optimal: Fraction = optimal_makespan(instance.true_times)
        tally.check(
            "makespan-approximation",
            expected <= TASK_APPROXIMATION * optimal,
            {"t": [list(row) for row in instance.declared_times], "expected": expected, "optimal": optimal},
        )

    for _ in options.steps(range(options.config["truthful_samples"]), "truthfulness"):
        instance = _random_tasks(rng, int(rng.integers(1, options.config["truthful_n"] + 1)))
        bits: list[int] = [int(b) for b in rng.integers(0, 2, size=instance.m)]
        context: dict[str, Any] = {"t": [list(row) for row in instance.declared_times], "bits": bits}
        tally.record(find_profitable_misreport(instance, bits), context)
        tally.record(individually_rational(instance, bits), context)
        task: int
        for task in range(1, instance.m + 1):
            tally.record(winning_weakly_dominates(instance, task), context)
    return tally.verdicts()


# ----- Peer Selection ----- #
def peer_suite(options: SuiteOptions) -> list[Verdict]:
    """Equilibrium equivalence, responsiveness and impartiality."""
    rng: np.random.Generator = options.rng()
    tally: PropertyTally = PropertyTally()

    n: int
    for n in range(3, options.config["n"] + 1):
        for _ in options.steps(range(options.config["samples"]), f"se n={n}"):
            profile: PeerProfile = PeerProfile.from_rankings(
                [[int(x) for x in rng.permutation(n)] for _ in range(n)]
            )
            order: tuple[int, ...]
            for order in itertools.permutations(range(n)):
                linear: int = spe_winner_linear(list(order), profile)
                oracle: int = spe_winner_oracle(list(order), profile)
                tally.check(
                    "se-equivalence",
                    linear == oracle,
                    {"prefs": [list(r) for r in profile.prefs], "order": list(order), "linear": linear, "oracle": oracle},
                )

    count: int = options.config["responsive_samples"]
    logging.info("Checking responsiveness and impartiality")
    return [
        *tally.verdicts(),
        check_responsive("derand_rse", 3, True, count, options.seed),
        expect_failure("partition-not-responsive", check_responsive("partition", 4, True, count, options.seed)),
        check_impartial("partition", 4, True, count, options.seed),
        expect_failure("derand-rse-not-impartial", check_impartial("derand_rse", 3, True, count, options.seed)),
    ]


# ----- School Choice ----- #
def random_school(rng: np.random.Generator, n: int) -> SchoolInstance:
    """
    A random instance with n students, one to three schools, truncated
    preference lists and random priority groups.
    """
    n_schools: int = int(rng.integers(1, 4))
    prefs: list[list[int]] = []
    for _ in range(n):
        ranked: list[int] = [int(s) for s in rng.permutation(n_schools)]
        prefs.append(ranked[: int(rng.integers(1, n_schools + 1))])
    capacities: list[int] = [int(c) for c in rng.integers(1, n + 1, size=n_schools)]
    groups: list[list[list[int]]] = []
    for _ in range(n_schools):
        students: list[int] = [int(s) for s in rng.permutation(n)]
        cuts: list[int] = sorted({int(c) for c in rng.integers(1, n + 1, size=2)} | {n})
        levels: list[list[int]] = []
        start: int = 0
        cut: int
        for cut in cuts:
            levels.append(students[start:cut])
            start = cut
        groups.append(levels)
    return SchoolInstance.from_lists(prefs, capacities, groups)


def _random_compact(rng: np.random.Generator, n: int) -> CompactBids:
    ranges: list[BidRange] = compact_bid_ranges(n)
    return CompactBids(
        tuple(None if r.a is None else int(rng.integers(r.a)) for r in ranges),
        tuple(None if r.b is None else int(rng.integers(r.b)) for r in ranges),
    )


def _lottery_bids(rng: np.random.Generator, n: int, mode: TieBreakMode) -> list[Sequence[int] | CompactBids]:
    """Every Lehmer seed, or as many sampled compact bid vectors."""
    if mode is TieBreakMode.LEHMER:
        return [[code] + [0] * (n - 1) for code in range(factorial(n))]
    return [_random_compact(rng, n) for _ in range(factorial(n))]


def school_suite(options: SuiteOptions) -> list[Verdict]:
    """
    Stability, byte-identical replay and student strategyproofness of the
    lottery in both tie-break modes; each property folds the two modes.
    """
    rng: np.random.Generator = options.rng()
    tallies: dict[TieBreakMode, PropertyTally] = {mode: PropertyTally() for mode in TieBreakMode}
    for _ in options.steps(range(options.config["samples"]), "school"):
        instance: SchoolInstance = random_school(rng, int(rng.integers(1, options.config["n"] + 1)))
        n: int = instance.n_students
        mode: TieBreakMode
        for mode in TieBreakMode:
            tally: PropertyTally = tallies[mode]
            index: int
            bids: Sequence[int] | CompactBids
            for index, bids in enumerate(_lottery_bids(rng, n, mode)):
                matching: Matching
                transcript: MechanismTranscript
                matching, transcript = derand_da(instance, bids, mode)
                context: dict[str, Any] = {
                    "mode": mode.value,
                    "prefs": [list(p) for p in instance.student_prefs],
                    "bids": transcript.bids,
                }
                priorities: StrictPriorities = transcript.details["priorities"]
                tally.record(is_stable(instance, priorities, matching), context)
                try:
                    replayed: Matching | None = replay_transcript(instance, transcript)
                except ProtocolError:
                    replayed = None
                tally.check(
                    "transcript-replay",
                    replayed == matching and derand_da(instance, bids, mode)[1].dumps() == transcript.dumps(),
                    context,
                )
                if index > 0:
                    continue
                student: int
                for student in range(n):
                    tally.record(find_student_manipulation(instance, priorities, student), context)

    per_mode: list[Verdict] = [verdict for tally in tallies.values() for verdict in tally.verdicts()]
    names: list[str] = list(dict.fromkeys(verdict.name for verdict in per_mode))
    return [combine(name, [verdict for verdict in per_mode if verdict.name == name]) for name in names]


# ----- Assignment ----- #
def _random_alloc(rng: np.random.Generator, n: int, m: int) -> AllocInstance:
    return AllocInstance.from_rankings([[int(x) for x in rng.permutation(m)] for _ in range(n)])


def _record_ps(tally: PropertyTally, instance: AllocInstance) -> RationalMatrix:
    matrix: RationalMatrix = probabilistic_serial(instance)[0]
    context: dict[str, Any] = {"prefs": [list(r) for r in instance.prefs]}
    tally.record(denominator_bound_check(matrix, instance.n, instance.m), context)
    tally.record(sd_efficient(matrix, instance), context)
    tally.record(sd_envy_free(matrix, instance), context)
    return matrix


def alloc_suite(options: SuiteOptions) -> list[Verdict]:
    """Probabilistic serial denominators and realization, random priority equivalence."""
    rng: np.random.Generator = options.rng()
    size: int = options.config["n"]
    tally: PropertyTally = PropertyTally()

    exhaustive: int = options.config["exhaustive_n"]
    rankings: list[tuple[int, ...]] = list(itertools.permutations(range(exhaustive)))
    profile: tuple[tuple[int, ...], ...]
    for profile in options.steps(list(itertools.product(rankings, repeat=exhaustive)), "ps exhaustive"):
        _record_ps(tally, AllocInstance.from_rankings(profile))

    # the literal sigma / N draw is expected to miss the marginals by one quantum
    biased: Verdict = Verdict.failure("strict-realization-biased", {}, 0)
    instance: AllocInstance
    for _ in options.steps(range(options.config["samples"]), "ps sampled"):
        instance = _random_alloc(rng, int(rng.integers(2, size + 1)), int(rng.integers(2, size + 1)))
        matrix: RationalMatrix = _record_ps(tally, instance)
        reduced: int = common_denominator(matrix)
        if reduced > options.config["max_denominator"]:
            continue
        context: dict[str, Any] = {"prefs": [list(r) for r in instance.prefs], "denominator": reduced}
        tally.check("realization-marginals", realization_marginals(matrix, reduced) == matrix, context)
        if not biased.passed and realization_marginals(matrix, reduced, strict=True) != matrix:
            biased = Verdict("strict-realization-biased", True, context, 1)

    n: int
    for n in options.steps(range(2, min(size, 5) + 1), "rp"):
        for _ in range(options.config["rp_samples"]):
            instance = _random_alloc(rng, n, int(rng.integers(1, n + 2)))
            total: RationalMatrix = zero_matrix(n, instance.m)
            code: int
            for code in range(factorial(n)):
                held: RationalMatrix = allocation_matrix(
                    derand_rp([code] + [0] * (n - 1), instance)[0], n, instance.m
                )
                total = [[t + h for t, h in zip(row, held_row)] for row, held_row in zip(total, held)]
            seeded: RationalMatrix = [[t / factorial(n) for t in row] for row in total]
            tally.check(
                "rp-equivalence",
                seeded == rp_distribution_oracle(instance),
                {"prefs": [list(r) for r in instance.prefs]},
            )

    pareto_n: int = options.config["pareto_n"]
    for _ in options.steps(range(options.config["rp_samples"] * 5), "pareto"):
        instance = _random_alloc(rng, int(rng.integers(1, pareto_n + 1)), int(rng.integers(1, pareto_n + 1)))
        order: list[int] = [int(x) for x in rng.permutation(instance.n)]
        tally.record(
            pareto_efficient(serial_dictatorship(order, instance), instance),
            {"prefs": [list(r) for r in instance.prefs], "order": order},
        )
    return [*tally.verdicts(), biased]


# ----- Simulation ----- #
def sim_suite(options: SuiteOptions) -> list[Verdict]:
    """Monte Carlo agreement with the exact law and worker-count independence."""
    tally: PropertyTally = PropertyTally()
    policies: list[AgentPolicy] = [AgentPolicy.uniform(), AgentPolicy.uniform()]
    reference: dict[str, Fraction] = exact_distribution("parity", parity_game(), policies)
    report: TrialReport = run_trials(
        "parity", parity_game(), policies, options.config["trials"], options.seed, reference=reference
    )
    tv: Fraction = Fraction(1) if report.empirical_tv is None else report.empirical_tv
    tally.check("monte-carlo-tv", tv < DEFAULT_TV_THRESHOLD, {"tv": tv, "frequencies": report.frequencies})

    trials: int = options.config["worker_trials"]
    profile: PeerProfile = PeerProfile.from_rankings([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    uniform: list[AgentPolicy] = [AgentPolicy.uniform() for _ in range(3)]
    single: TrialReport = run_trials("peer", profile, uniform, trials, options.seed)
    pooled: TrialReport = run_trials("peer", profile, uniform, trials, options.seed, workers=max(2, options.workers))
    tally.check(
        "worker-independence",
        single.frequencies == pooled.frequencies,
        {"single": single.frequencies, "pooled": pooled.frequencies},
    )
    return tally.verdicts()


SUITES: dict[str, Callable[[SuiteOptions], list[Verdict]]] = {
    "modgame": modgame_suite,
    "permute": permute_suite,
    "simple": simple_suite,
    "tasks": tasks_suite,
    "peer": peer_suite,
    "school": school_suite,
    "alloc": alloc_suite,
    "sim": sim_suite,
}


def run_suite(
    name: str,
    config: dict[str, dict[str, Any]],
    seed: int,
    overrides: dict[str, int] | None = None,
    workers: int = 1,
    progress: bool = True,
) -> list[Verdict]:
    """
    Run one suite, or every suite for "all".

    Parameters
    ----------
    name : str
        A SUITES key or "all".
    config : dict[str, dict[str, Any]]
        The YAML defaults.
    seed : int
        Seed for sampling.
    overrides : dict[str, int] | None
        Values from --n / --samples replacing the defaults.
    workers : int
        Worker processes for Monte Carlo runs.
    progress : bool
        Show progress bars.

    Returns
    -------
    list[Verdict]
        One Verdict per property.

    Raises
    ------
    ValidationError
        If the suite is unknown or has no configuration.
    """
    if name == "all":
        return [
            verdict
            for suite in SUITES
            for verdict in run_suite(suite, config, seed, overrides, workers, progress)
        ]
    if name not in SUITES:
        raise ValidationError(f"unknown suite {name!r}, expected one of {sorted(SUITES) + ['all']}", "$.suite")
    if name not in config:
        raise ValidationError(f"no defaults for suite {name!r}", f"$.{name}")
    settings: dict[str, Any] = dict(config[name])
    key: str
    value: int
    for key, value in (overrides or {}).items():
        if key in settings:
            settings[key] = value
    logging.info("Running suite %s with %s", name, settings)
    return SUITES[name](SuiteOptions(seed, settings, workers, progress))
