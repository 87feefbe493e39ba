"""
Testing alloc.serial, alloc.realization, alloc.priority and alloc.properties
"""

from fractions import Fraction
import itertools
from math import factorial
import unittest

import numpy as np

from alloc import (
    AllocInstance,
    Allocation,
    EatingTrace,
    RationalMatrix,
    allocation_matrix,
    common_denominator,
    denominator_bound_check,
    derand_ps,
    derand_rp,
    find_sd_manipulation,
    matrix_invariants,
    pareto_efficient,
    probabilistic_serial,
    realization_marginals,
    realize_assignment,
    rp_distribution_oracle,
    sd_efficient,
    sd_envy_free,
    serial_dictatorship,
)
from common.errors import CapacityError, RangeError, ValidationError
from common.transcript import GamePlacement, MechanismTranscript
from modgame.game import sum_distribution
from modgame.strategy import point_mass, uniform_strategy

HALF: Fraction = Fraction(1, 2)
HALVES: RationalMatrix = [[HALF, HALF], [HALF, HALF]]
IDENTITY: RationalMatrix = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]


def random_instance(rng: np.random.Generator, max_n: int, max_m: int) -> AllocInstance:
    """Uniformly random rankings for random n <= max_n and m <= max_m."""
    n: int = int(rng.integers(1, max_n + 1))
    m: int = int(rng.integers(1, max_m + 1))
    return AllocInstance.from_rankings([[int(x) for x in rng.permutation(m)] for _ in range(n)])


def ps_matrix(instance: AllocInstance) -> RationalMatrix:
    """Just the matrix of probabilistic_serial."""
    return probabilistic_serial(instance)[0]


class TestProbabilisticSerial(unittest.TestCase):
    """
    Testing probabilistic_serial and matrix_invariants
    """

    def test_examples(self) -> None:
        """
        Asserts the shared-top, disjoint-top and identical three-agent matrices
        """
        shared: AllocInstance = AllocInstance.from_rankings([[0, 1], [0, 1]])
        self.assertEqual(ps_matrix(shared), HALVES)
        self.assertEqual(ps_matrix(AllocInstance.from_rankings([[0, 1], [1, 0]])), IDENTITY)
        third: Fraction = Fraction(1, 3)
        self.assertEqual(
            ps_matrix(AllocInstance.from_rankings([[0, 1, 2]] * 3)), [[third] * 3] * 3
        )

    def test_trace(self) -> None:
        """
        Asserts the shared-top trace has two halves and every item is fully eaten
        """
        trace: EatingTrace = probabilistic_serial(AllocInstance.from_rankings([[0, 1], [0, 1]]))[1]
        self.assertEqual([(s.start, s.end) for s in trace.steps], [(0, HALF), (HALF, 1)])
        self.assertEqual(trace.steps[0].eaters, (2, 0))
        self.assertEqual(trace.steps[0].consumed, (0,))
        rng: np.random.Generator = np.random.default_rng(73)
        for _ in range(100):
            instance: AllocInstance = random_instance(rng, 5, 5)
            trace = probabilistic_serial(instance)[1]
            item: int
            for item in range(instance.m):
                self.assertEqual(trace.consumed_fraction(item), 1)
            self.assertTrue(all(0 <= c <= instance.n for s in trace.steps for c in s.eaters))

    def test_sum_invariants(self) -> None:
        """
        Asserts columns sum to 1 and rows to m/n on random instances
        """
        rng: np.random.Generator = np.random.default_rng(79)
        for _ in range(200):
            instance: AllocInstance = random_instance(rng, 5, 5)
            self.assertTrue(matrix_invariants(ps_matrix(instance), instance.m).passed)
        self.assertFalse(matrix_invariants([[HALF, HALF]], 2).passed)

    def test_invalid_instance(self) -> None:
        """
        Asserts rankings must be permutations of the same item set
        """
        with self.assertRaises(ValidationError):
            AllocInstance.from_rankings([[0, 1], [0, 0]])
        with self.assertRaises(ValidationError):
            AllocInstance.from_rankings([])


class TestRealization(unittest.TestCase):
    """
    Testing denominator_bound_check, realize_assignment and derand_ps
    """

    def test_denominator_examples(self) -> None:
        """
        Asserts halves and identity pass and a fifth fails at n = m = 2
        """
        self.assertTrue(denominator_bound_check(HALVES, 2, 2).passed)
        self.assertTrue(denominator_bound_check(IDENTITY, 2, 2).passed)
        fifths: RationalMatrix = [[Fraction(1, 5), Fraction(4, 5)], [Fraction(4, 5), Fraction(1, 5)]]
        verdict = denominator_bound_check(fifths, 2, 2)
        self.assertFalse(verdict.passed)
        self.assertEqual(verdict.witness["value"], Fraction(1, 5))

    def test_denominator_bound(self) -> None:
        """
        Asserts the bound on random instances and on every profile at n = m = 3
        """
        rng: np.random.Generator = np.random.default_rng(83)
        for _ in range(200):
            instance: AllocInstance = random_instance(rng, 5, 5)
            self.assertTrue(
                denominator_bound_check(ps_matrix(instance), instance.n, instance.m).passed
            )
        rankings: list[tuple[int, ...]] = list(itertools.permutations(range(3)))
        prefs: tuple[tuple[int, ...], ...]
        for prefs in itertools.product(rankings, repeat=3):
            self.assertTrue(denominator_bound_check(ps_matrix(AllocInstance(prefs)), 3, 3).passed)

    def test_realize_examples(self) -> None:
        """
        Asserts the shared draw gives both halves items to one agent
        """
        self.assertEqual(realize_assignment(HALVES, 0, 4), {0: 0, 1: 0})
        self.assertEqual(realize_assignment(HALVES, 3, 4), {0: 1, 1: 1})
        sigma: int
        for sigma in range(4):
            self.assertEqual(realize_assignment(IDENTITY, sigma, 4), {0: 0, 1: 1})

    def test_realize_errors(self) -> None:
        """
        Asserts sigma out of range and a non-common denominator are rejected
        """
        with self.assertRaises(RangeError):
            realize_assignment(HALVES, 4, 4)
        with self.assertRaises(ValidationError):
            realize_assignment(HALVES, 0, 3)

    def test_marginals(self) -> None:
        """
        Asserts enumerating sigma reproduces the matrix, and the literal draw favours the first agent
        """
        rng: np.random.Generator = np.random.default_rng(89)
        for _ in range(60):
            instance: AllocInstance = random_instance(rng, 4, 4)
            matrix: RationalMatrix = ps_matrix(instance)
            modulus: int = common_denominator(matrix)
            if modulus <= 10_000:
                self.assertEqual(realization_marginals(matrix, modulus), matrix)
        quarter: Fraction = Fraction(1, 4)
        self.assertEqual(
            realization_marginals(HALVES, 4, strict=True),
            [[3 * quarter, 3 * quarter], [quarter, quarter]],
        )
        self.assertEqual(common_denominator(HALVES), 2)

    def test_derand_ps(self) -> None:
        """
        Asserts the bids sum to sigma and the transcript records a game-last run
        """
        instance: AllocInstance = AllocInstance.from_rankings([[0, 1], [0, 1]])
        allocation: Allocation
        transcript: MechanismTranscript
        allocation, transcript = derand_ps([1, 2], instance)
        self.assertEqual(transcript.seed, 3)
        self.assertEqual(transcript.modulus, 4)
        self.assertEqual(transcript.placement, GamePlacement.GAME_LAST)
        self.assertEqual(allocation, {0: 1, 1: 1})
        allocation, _ = derand_ps([1, 0], instance, modulus=2)
        self.assertEqual(allocation, {0: 1, 1: 1})
        with self.assertRaises(RangeError):
            derand_ps([4, 0], instance)

    def test_own_bid_irrelevant(self) -> None:
        """
        Asserts with two uniform bidders an agent's expected utility ignores their own bid
        """
        instance: AllocInstance = AllocInstance.from_rankings([[0, 1, 2], [0, 1, 2], [1, 0, 2]])
        matrix: RationalMatrix = ps_matrix(instance)
        modulus: int = common_denominator(matrix)
        value: dict[int, int] = {0: 3, 1: 2, 2: 1}
        expected: Fraction = sum((matrix[2][item] * value[item] for item in range(3)), Fraction(0))
        bid: int
        for bid in range(modulus):
            seeds: list[Fraction] = sum_distribution(
                [uniform_strategy(modulus), uniform_strategy(modulus), point_mass(bid, modulus)],
                modulus,
            )
            utility: Fraction = Fraction(0)
            sigma: int
            for sigma, probability in enumerate(seeds):
                allocation: Allocation = realize_assignment(matrix, sigma, modulus)
                utility += probability * sum(
                    value[item] for item, agent in allocation.items() if agent == 2
                )
            self.assertEqual(utility, expected)


class TestRandomPriority(unittest.TestCase):
    """
    Testing serial_dictatorship, derand_rp and rp_distribution_oracle
    """

    def test_serial_dictatorship_examples(self) -> None:
        """
        Asserts contested, disjoint, identical and round-robin picks
        """
        contested: AllocInstance = AllocInstance.from_rankings([[0, 1], [0, 1]])
        self.assertEqual(serial_dictatorship([0, 1], contested), {0: 0, 1: 1})
        disjoint: AllocInstance = AllocInstance.from_rankings([[0, 1], [1, 0]])
        self.assertEqual(serial_dictatorship([0, 1], disjoint), serial_dictatorship([1, 0], disjoint))
        identical: AllocInstance = AllocInstance.from_rankings([[0, 1, 2]] * 3)
        self.assertEqual(serial_dictatorship([2, 0, 1], identical), {0: 2, 1: 0, 2: 1})
        more_items: AllocInstance = AllocInstance.from_rankings([[0, 1, 2], [0, 1, 2]])
        self.assertEqual(serial_dictatorship([1, 0], more_items), {0: 1, 1: 0, 2: 1})

    def test_derand_rp_examples(self) -> None:
        """
        Asserts the bids pick the expected orders
        """
        instance: AllocInstance = AllocInstance.from_rankings([[0, 1], [0, 1]])
        self.assertEqual(derand_rp([1, 1], instance)[1].permutation, [0, 1])
        self.assertEqual(derand_rp([0, 1], instance)[1].permutation, [1, 0])
        self.assertEqual(derand_rp([0, 1], instance)[0], {0: 1, 1: 0})
        self.assertEqual(derand_rp([0, 0], instance)[1].permutation, [0, 1])
        with self.assertRaises(RangeError):
            derand_rp([2, 0], instance)

    def test_oracle_examples(self) -> None:
        """
        Asserts the oracle's worked matrices and its capacity limit
        """
        self.assertEqual(rp_distribution_oracle(AllocInstance.from_rankings([[0, 1], [0, 1]])), HALVES)
        self.assertEqual(rp_distribution_oracle(AllocInstance.from_rankings([[0, 1], [1, 0]])), IDENTITY)
        third: Fraction = Fraction(1, 3)
        self.assertEqual(
            rp_distribution_oracle(AllocInstance.from_rankings([[0, 1, 2]] * 3)), [[third] * 3] * 3
        )
        with self.assertRaises(CapacityError):
            rp_distribution_oracle(AllocInstance.from_rankings([[0]] * 8))

    def test_all_seeds_match_oracle(self) -> None:
        """
        Asserts enumerating every seed of derand_rp reproduces the oracle
        """
        rng: np.random.Generator = np.random.default_rng(97)
        for _ in range(20):
            instance: AllocInstance = random_instance(rng, 5, 5)
            total: int = factorial(instance.n)
            matrix: RationalMatrix = [[Fraction(0)] * instance.m for _ in range(instance.n)]
            seed: int
            for seed in range(total):
                allocation: Allocation = derand_rp([seed] + [0] * (instance.n - 1), instance)[0]
                for item, agent in allocation.items():
                    matrix[agent][item] += Fraction(1, total)
            self.assertEqual(matrix, rp_distribution_oracle(instance))

    def test_sincere_picking(self) -> None:
        """
        Asserts no agent gets a better item by misreporting under any fixed order
        """
        rankings: list[tuple[int, ...]] = list(itertools.permutations(range(3)))
        rng: np.random.Generator = np.random.default_rng(101)
        for _ in range(30):
            instance: AllocInstance = AllocInstance(
                tuple(rankings[int(i)] for i in rng.integers(0, 6, size=3))
            )
            order: tuple[int, ...]
            for order in rankings:
                honest: Allocation = serial_dictatorship(order, instance)
                agent: int
                for agent in range(3):
                    truth: tuple[int, ...] = instance.prefs[agent]
                    mine: int = next(i for i, a in honest.items() if a == agent)
                    for report in rankings:
                        lied: Allocation = serial_dictatorship(
                            order, instance.with_ranking(agent, report)
                        )
                        got: int = next(i for i, a in lied.items() if a == agent)
                        self.assertGreaterEqual(truth.index(got), truth.index(mine))


class TestProperties(unittest.TestCase):
    """
    Testing sd_envy_free, sd_efficient, pareto_efficient and find_sd_manipulation
    """

    def test_ps_fair_and_efficient(self) -> None:
        """
        Asserts probabilistic serial is SD-envy-free and SD-efficient on random instances
        """
        rng: np.random.Generator = np.random.default_rng(103)
        for _ in range(200):
            instance: AllocInstance = random_instance(rng, 4, 4)
            matrix: RationalMatrix = ps_matrix(instance)
            self.assertTrue(sd_envy_free(matrix, instance).passed)
            self.assertTrue(sd_efficient(matrix, instance).passed)

    def test_envy_examples(self) -> None:
        """
        Asserts the swapped matrix is envied at t = 1 and a single agent never envies
        """
        shared: AllocInstance = AllocInstance.from_rankings([[0, 1], [0, 1]])
        verdict = sd_envy_free([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]], shared)
        self.assertFalse(verdict.passed)
        self.assertEqual(verdict.witness, {"agent": 0, "envied": 1, "t": 1})
        single: AllocInstance = AllocInstance.from_rankings([[1, 0]])
        self.assertTrue(sd_envy_free(ps_matrix(single), single).passed)

    def test_efficiency_examples(self) -> None:
        """
        Asserts opposite tops sharing halves is inefficient and a serial dictatorship result is efficient
        """
        opposite: AllocInstance = AllocInstance.from_rankings([[0, 1], [1, 0]])
        verdict = sd_efficient(HALVES, opposite)
        self.assertFalse(verdict.passed)
        self.assertEqual(len(verdict.witness["cycle"]), 2)
        identical: AllocInstance = AllocInstance.from_rankings([[0, 1, 2]] * 3)
        allocation: Allocation = serial_dictatorship([2, 0, 1], identical)
        self.assertTrue(sd_efficient(allocation_matrix(allocation, 3, 3), identical).passed)
        self.assertTrue(pareto_efficient(allocation, identical).passed)

    def test_pareto(self) -> None:
        """
        Asserts serial dictatorship is Pareto efficient and a swap-dominated allocation is not
        """
        rng: np.random.Generator = np.random.default_rng(107)
        for _ in range(50):
            n: int = int(rng.integers(1, 5))
            instance: AllocInstance = AllocInstance.from_rankings(
                [[int(x) for x in rng.permutation(n)] for _ in range(n)]
            )
            order: list[int] = [int(x) for x in rng.permutation(n)]
            self.assertTrue(pareto_efficient(serial_dictatorship(order, instance), instance).passed)
        opposite: AllocInstance = AllocInstance.from_rankings([[0, 1], [1, 0]])
        verdict = pareto_efficient({0: 1, 1: 0}, opposite)
        self.assertFalse(verdict.passed)
        self.assertEqual(verdict.witness["dominated_by"], {0: 0, 1: 1})
        self.assertTrue(pareto_efficient({0: 0}, AllocInstance.from_rankings([[0]])).passed)
        with self.assertRaises(CapacityError):
            pareto_efficient({}, AllocInstance.from_rankings([[0]] * 7))

    def test_manipulation(self) -> None:
        """
        Asserts the known profitable misreport is found and identical rankings admit none
        """
        instance: AllocInstance = AllocInstance.from_rankings([[0, 1, 2], [1, 2, 0]])
        self.assertEqual(find_sd_manipulation(instance, 0), [1, 0, 2])
        identical: AllocInstance = AllocInstance.from_rankings([[0, 1, 2]] * 3)
        agent: int
        for agent in range(3):
            self.assertIsNone(find_sd_manipulation(identical, agent))
        with self.assertRaises(CapacityError):
            find_sd_manipulation(AllocInstance.from_rankings([list(range(7))] * 2), 0)


if __name__ == "__main__":
    unittest.main()
