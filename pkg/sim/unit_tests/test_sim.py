"""
Testing sim.policy, sim.mechanisms and sim.trials
"""

from fractions import Fraction
import unittest

import numpy as np

from alloc.instance import AllocInstance
from common.constants import DEFAULT_TV_THRESHOLD
from common.errors import CapacityError, RangeError, ValidationError
from modgame.game import ModGame, parity_game, win_loss_game
from modgame.strategy import MixedStrategy, uniform_strategy
from peer.elimination import uniform_order_distribution
from peer.profile import PeerProfile
from school.instance import SchoolInstance
from sim import (
    AgentPolicy,
    PlayKind,
    TrialReport,
    exact_distribution,
    lookup,
    outcome_key,
    run_trials,
    trial_seed,
    tv_distance,
)
from tasks.allocation import TaskInstance


class TestTvDistance(unittest.TestCase):
    """
    Testing tv_distance
    """

    def test_identical(self) -> None:
        """
        Asserts identical distributions are at distance 0
        """
        law: dict[str, Fraction] = {"0": Fraction(1, 3), "1": Fraction(2, 3)}
        self.assertEqual(tv_distance(law, dict(law)), 0)

    def test_disjoint_point_masses(self) -> None:
        """
        Asserts disjoint point masses are at distance 1, missing keys counting as 0
        """
        self.assertEqual(tv_distance({"0": Fraction(1)}, {"1": Fraction(1)}), 1)

    def test_biased_coin(self) -> None:
        """
        Asserts {0: 3/4, 1: 1/4} is 1/4 away from a fair coin
        """
        self.assertEqual(
            tv_distance(
                {0: Fraction(3, 4), 1: Fraction(1, 4)}, {0: Fraction(1, 2), 1: Fraction(1, 2)}
            ),
            Fraction(1, 4),
        )


class TestPolicy(unittest.TestCase):
    """
    Testing AgentPolicy
    """

    def test_fixed_draw(self) -> None:
        """
        Asserts a fixed agent always plays its value and rejects values outside the game
        """
        rng: np.random.Generator = np.random.default_rng(0)
        self.assertEqual({AgentPolicy.fixed(3).draw(rng, 5) for _ in range(20)}, {3})
        with self.assertRaises(RangeError):
            AgentPolicy.fixed(5).draw(rng, 5)

    def test_custom_draw_stays_in_support(self) -> None:
        """
        Asserts a custom agent only plays values its strategy weights
        """
        rng: np.random.Generator = np.random.default_rng(1)
        policy: AgentPolicy = AgentPolicy.custom(
            MixedStrategy(6, {1: Fraction(1, 2), 4: Fraction(1, 2)})
        )
        self.assertTrue({policy.draw(rng, 6) for _ in range(200)} <= {1, 4})

    def test_custom_modulus_mismatch(self) -> None:
        """
        Asserts a custom strategy over another game size is rejected
        """
        with self.assertRaises(ValidationError):
            AgentPolicy.custom(uniform_strategy(3)).distribution(4)

    def test_fixed_needs_value(self) -> None:
        """
        Asserts a fixed policy without a value is rejected
        """
        with self.assertRaises(ValidationError):
            AgentPolicy(PlayKind.FIXED)


class TestTrialSeed(unittest.TestCase):
    """
    Testing trial_seed
    """

    def test_split(self) -> None:
        """
        Asserts per-trial seeds are deterministic 64-bit values that differ between trials
        """
        seeds: list[int] = [trial_seed(42, trial) for trial in range(100)]
        self.assertEqual(seeds, [trial_seed(42, trial) for trial in range(100)])
        self.assertEqual(len(set(seeds)), 100)
        self.assertTrue(all(0 <= seed < 2**64 for seed in seeds))
        self.assertNotEqual(trial_seed(42, 0), trial_seed(43, 0))


class TestRunTrials(unittest.TestCase):
    """
    Testing run_trials and exact_distribution
    """

    def test_parity_uniform_close_to_exact(self) -> None:
        """
        Asserts 10^5 uniform parity trials with seed 42 are within TV 0.02 of the exact law
        """
        policies: list[AgentPolicy] = [AgentPolicy.uniform(), AgentPolicy.uniform()]
        reference: dict[str, Fraction] = exact_distribution("parity", parity_game(), policies)
        self.assertEqual(reference, {"0": Fraction(1, 2), "1": Fraction(1, 2)})
        report: TrialReport = run_trials("parity", parity_game(), policies, 100_000, 42, reference=reference)
        self.assertEqual(sum(report.frequencies.values()), 100_000)
        self.assertIsNotNone(report.empirical_tv)
        self.assertLess(report.empirical_tv, DEFAULT_TV_THRESHOLD)

    def test_all_fixed_single_outcome(self) -> None:
        """
        Asserts all-fixed policies give one outcome with frequency equal to the trials
        """
        game: ModGame = win_loss_game([0, 1, 2], 3)
        report: TrialReport = run_trials(
            "modgame", game, [AgentPolicy.fixed(2), AgentPolicy.fixed(2), AgentPolicy.fixed(0)], 50, 7
        )
        self.assertEqual(report.frequencies, {"1": 50})

    def test_reproducible(self) -> None:
        """
        Asserts the same master seed reproduces the same report
        """
        game: ModGame = win_loss_game([0, 1], 5)
        policies: list[AgentPolicy] = [AgentPolicy.uniform(), AgentPolicy.fixed(1)]
        self.assertEqual(
            run_trials("modgame", game, policies, 500, 3), run_trials("modgame", game, policies, 500, 3)
        )

    def test_worker_count_independent(self) -> None:
        """
        Asserts tallies are identical for one and three workers
        """
        profile: PeerProfile = PeerProfile.from_rankings([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
        policies: list[AgentPolicy] = [AgentPolicy.uniform() for _ in range(3)]
        single: TrialReport = run_trials("peer", profile, policies, 301, 11, workers=1)
        pooled: TrialReport = run_trials("peer", profile, policies, 301, 11, workers=3)
        self.assertEqual(single.frequencies, pooled.frequencies)

    def test_one_uniform_agent_makes_outcome_uniform(self) -> None:
        """
        Asserts one uniform agent against fixed and custom agents gives a uniform exact law
        """
        policies: list[AgentPolicy] = [
            AgentPolicy.fixed(3),
            AgentPolicy.uniform(),
            AgentPolicy.custom(MixedStrategy(4, {0: Fraction(1, 3), 2: Fraction(2, 3)})),
        ]
        law: dict[str, Fraction] = exact_distribution("modgame", win_loss_game([0, 1, 2], 4), policies)
        self.assertEqual(law, {str(outcome): Fraction(1, 4) for outcome in range(4)})

    def test_peer_exact_matches_uniform_order(self) -> None:
        """
        Asserts the exact peer law under uniform play is the uniform-order winner distribution
        """
        profile: PeerProfile = PeerProfile.from_rankings([[1, 0, 2, 3], [2, 3, 1, 0], [0, 1, 3, 2], [3, 2, 0, 1]])
        law: dict[str, Fraction] = exact_distribution(
            "peer", profile, [AgentPolicy.uniform() for _ in range(4)]
        )
        self.assertEqual(
            law,
            {outcome_key(winner): p for winner, p in uniform_order_distribution(profile).items()},
        )

    def test_dictator_reports(self) -> None:
        """
        Asserts a dictator's report replaces their sincere favourite
        """
        favourites: list[str] = ["a", "b"]
        sincere: TrialReport = run_trials("dictator", favourites, [AgentPolicy.fixed(0), AgentPolicy.fixed(1)], 10, 0)
        self.assertEqual(sincere.frequencies, {'"b"': 10})
        misreport: TrialReport = run_trials(
            "dictator", favourites, [AgentPolicy.fixed(0), AgentPolicy.fixed(1, report="c")], 10, 0
        )
        self.assertEqual(misreport.frequencies, {'"c"': 10})

    def test_tasks_all_fixed(self) -> None:
        """
        Asserts task allocation with both agents fixed runs every trial to the same outcome
        """
        instance: TaskInstance = TaskInstance(2, ((1, 2), (2, 1)))
        report: TrialReport = run_trials("tasks", instance, [AgentPolicy.fixed(0), AgentPolicy.fixed(0)], 20, 5)
        self.assertEqual(list(report.frequencies.values()), [20])

    def test_exact_laws_sum_to_one(self) -> None:
        """
        Asserts the exact laws of the school and allocation adapters are distributions
        """
        school: SchoolInstance = SchoolInstance.from_lists(
            [[0, 1], [0, 1], [1, 0]], [1, 2], [[[0, 1, 2]], [[2], [0, 1]]]
        )
        alloc: AllocInstance = AllocInstance.from_rankings([[0, 1, 2], [1, 2, 0]])
        laws: list[dict[str, Fraction]] = [
            exact_distribution("school", school, [AgentPolicy.uniform() for _ in range(3)]),
            exact_distribution("alloc-rp", alloc, [AgentPolicy.uniform(), AgentPolicy.uniform()]),
            exact_distribution("alloc-ps", alloc, [AgentPolicy.uniform(), AgentPolicy.fixed(0)]),
        ]
        law: dict[str, Fraction]
        for law in laws:
            self.assertEqual(sum(law.values()), 1)

    def test_policy_mismatch(self) -> None:
        """
        Asserts a policy count different from the agent count is rejected
        """
        with self.assertRaises(ValidationError):
            run_trials("parity", parity_game(), [AgentPolicy.uniform()], 10, 0)

    def test_reports_only_where_taken(self) -> None:
        """
        Asserts reports are rejected by mechanisms without a report
        """
        with self.assertRaises(ValidationError):
            run_trials("parity", parity_game(), [AgentPolicy.uniform(report=1), AgentPolicy.uniform()], 10, 0)

    def test_unknown_mechanism(self) -> None:
        """
        Asserts an unknown mechanism id is rejected
        """
        with self.assertRaises(ValidationError):
            lookup("lottery")

    def test_exact_capacity(self) -> None:
        """
        Asserts too many game outcomes to enumerate raise a capacity error
        """
        instance: TaskInstance = TaskInstance(21, (tuple([1] * 21), tuple([2] * 21)))
        with self.assertRaises(CapacityError):
            exact_distribution("tasks", instance, [AgentPolicy.uniform(), AgentPolicy.uniform()])


if __name__ == "__main__":
    unittest.main()
