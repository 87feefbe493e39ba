"""
Testing peer.elimination, peer.partition and peer.properties
"""

import itertools
import unittest
from math import factorial

import numpy as np

from common.errors import CapacityError, ProtocolError, RangeError, ValidationError
from common.transcript import MechanismTranscript
from modgame.strategy import MixedStrategy, point_mass, uniform_strategy
from peer import (
    PEER_MECHANISMS,
    PeerProfile,
    check_impartial,
    check_responsive,
    derand_rse,
    derand_rse_transcript,
    partition_candidates,
    partition_winner,
    responsive_witness,
    rse_winner_distribution,
    run_sequential_elimination,
    spe_winner_linear,
    spe_winner_oracle,
    uniform_order_distribution,
)
from permute.lehmer import lehmer_decode, seed_to_order


def random_profile(rng: np.random.Generator, n: int) -> PeerProfile:
    """Uniformly random strict profile on n agents."""
    return PeerProfile.from_rankings([[int(x) for x in rng.permutation(n)] for _ in range(n)])


EXAMPLE: PeerProfile = PeerProfile.from_rankings([[0, 1, 2], [1, 2, 0], [2, 0, 1]])


class TestSequentialElimination(unittest.TestCase):
    """
    Testing run_sequential_elimination
    """

    def test_examples(self) -> None:
        """
        Asserts the worked bookkeeping examples
        """
        self.assertEqual(run_sequential_elimination([0, 1], [1], 2), 0)
        self.assertEqual(run_sequential_elimination([0, 1, 2], [2, 0], 3), 1)

    def test_self_elimination_keeps_turn(self) -> None:
        """
        Asserts an eliminated agent still takes their turn
        """
        self.assertEqual(run_sequential_elimination([0, 1, 2], [0, 2], 3), 1)
        # agent 1 was eliminated first but still eliminates at step 1
        self.assertEqual(run_sequential_elimination([0, 1, 2], [1, 0], 3), 2)

    def test_protocol_error(self) -> None:
        """
        Asserts eliminating a candidate twice names the offending step
        """
        with self.assertRaises(ProtocolError) as context:
            run_sequential_elimination([0, 1, 2], [2, 2], 3)
        self.assertEqual(context.exception.step, 1)


class TestSubgamePerfectWinner(unittest.TestCase):
    """
    Testing spe_winner_linear and spe_winner_oracle
    """

    def test_examples(self) -> None:
        """
        Asserts the worked examples for both methods
        """
        self.assertEqual(spe_winner_linear([0, 1, 2], EXAMPLE), 1)
        self.assertEqual(spe_winner_oracle([0, 1, 2], EXAMPLE), 1)
        pair: PeerProfile = PeerProfile.from_rankings([[0, 1], [1, 0]])
        self.assertEqual(spe_winner_linear([0, 1], pair), 0)
        self.assertEqual(spe_winner_oracle([0, 1], pair), 0)
        self.assertEqual(spe_winner_linear([1, 0], pair), 1)
        deferring: PeerProfile = PeerProfile.from_rankings([[1, 0], [1, 0]])
        self.assertEqual(spe_winner_linear([0, 1], deferring), 1)

    def test_oracle_equivalence(self) -> None:
        """
        Asserts the linear rule matches backward induction for every order on random profiles
        """
        rng: np.random.Generator = np.random.default_rng(41)
        n: int
        count: int
        for n, count in ((3, 1000), (4, 1000), (5, 200)):
            orders: list[list[int]] = [list(p) for p in itertools.permutations(range(n))]
            for _ in range(count):
                profile: PeerProfile = random_profile(rng, n)
                order: list[int]
                for order in orders:
                    self.assertEqual(
                        spe_winner_linear(order, profile), spe_winner_oracle(order, profile)
                    )

    def test_oracle_capacity(self) -> None:
        """
        Asserts the oracle refuses n = 8
        """
        profile: PeerProfile = PeerProfile.from_rankings([list(range(8))] * 8)
        with self.assertRaises(CapacityError):
            spe_winner_oracle(list(range(8)), profile)


class TestDerandRSE(unittest.TestCase):
    """
    Testing derand_rse, rse_winner_distribution and responsive_witness
    """

    def test_orders(self) -> None:
        """
        Asserts the bids sum to the expected orders
        """
        transcript: MechanismTranscript = derand_rse_transcript([0, 0, 0], EXAMPLE)
        self.assertEqual(transcript.permutation, [0, 1, 2])
        self.assertEqual(transcript.outcome, spe_winner_linear([0, 1, 2], EXAMPLE))
        self.assertEqual(derand_rse_transcript([1, 2, 3], EXAMPLE).permutation, [0, 1, 2])
        transcript = derand_rse_transcript([3, 2, 3], EXAMPLE)
        self.assertEqual(transcript.seed, 2)
        self.assertEqual(transcript.permutation, [1, 0, 2])
        self.assertEqual(derand_rse([3, 2, 3], EXAMPLE), spe_winner_linear([1, 0, 2], EXAMPLE))

    def test_supplied_choices(self) -> None:
        """
        Asserts explicit choices are played on the derived order
        """
        self.assertEqual(derand_rse([0, 0, 0], EXAMPLE, [2, 0]), 1)

    def test_bid_out_of_range(self) -> None:
        """
        Asserts a bid of n! is rejected naming the agent
        """
        with self.assertRaises(RangeError) as context:
            derand_rse([0, 6, 0], EXAMPLE)
        self.assertEqual(context.exception.agent, 1)

    def test_uniform_bidders_match_random_order(self) -> None:
        """
        Asserts two uniform bidders make the winner distribution that of a uniform order
        """
        rng: np.random.Generator = np.random.default_rng(43)
        for _ in range(20):
            profile: PeerProfile = random_profile(rng, 3)
            strategies: list[MixedStrategy] = [
                uniform_strategy(6),
                point_mass(int(rng.integers(0, 6)), 6),
                uniform_strategy(6),
            ]
            self.assertEqual(
                rse_winner_distribution(profile, strategies), uniform_order_distribution(profile)
            )

    def test_responsive_witness(self) -> None:
        """
        Asserts the constructed deviation always changes the winner
        """
        rng: np.random.Generator = np.random.default_rng(47)
        for _ in range(30):
            profile: PeerProfile = random_profile(rng, 3)
            bids: tuple[int, ...]
            for bids in itertools.product(range(6), repeat=3):
                current: int = derand_rse(bids, profile)
                agent: int
                for agent in range(3):
                    new_bid, eliminated, winner = responsive_witness(bids, profile, agent)
                    self.assertEqual(eliminated, current)
                    self.assertNotEqual(winner, current)
                    self.assertTrue(0 <= new_bid < 6)
        for _ in range(200):
            profile = random_profile(rng, 4)
            bids = tuple(int(b) for b in rng.integers(0, 24, size=4))
            current = derand_rse(bids, profile)
            for agent in range(4):
                new_bid, _, winner = responsive_witness(bids, profile, agent)
                self.assertNotEqual(winner, current)
                changed: list[int] = list(bids)
                changed[agent] = new_bid
                self.assertEqual(seed_to_order(changed, 4)[1][0], agent)

    def test_seized_order(self) -> None:
        """
        Asserts the seizing code decodes to the agent first, then the rest ascending
        """
        agent: int
        for agent in range(4):
            order: list[int] = lehmer_decode(agent * factorial(3), 4)
            self.assertEqual(order[0], agent)
            self.assertEqual(order[1:], sorted(order[1:]))


class TestPartition(unittest.TestCase):
    """
    Testing partition_winner
    """

    def test_examples(self) -> None:
        """
        Asserts xor 0 picks the first side's candidate and xor 1 the second's
        """
        profile: PeerProfile = PeerProfile.from_rankings([[0, 2, 1, 3]] * 4)
        self.assertEqual(partition_candidates(profile), (0, 2))
        self.assertEqual(partition_winner(profile, [0, 0]), 0)
        self.assertEqual(partition_winner(profile, [0, 1]), 2)
        self.assertEqual(partition_winner(profile, [1, 1]), 0)

    def test_plurality_tie_break(self) -> None:
        """
        Asserts a tied vote goes to the lowest id
        """
        # agents 2 and 3 split their votes between 1 and 0
        profile: PeerProfile = PeerProfile.from_rankings(
            [[3, 0, 1, 2], [2, 0, 1, 3], [1, 0, 2, 3], [0, 1, 2, 3]]
        )
        self.assertEqual(partition_candidates(profile), (0, 2))

    def test_winner_is_a_candidate(self) -> None:
        """
        Asserts every bit vector selects one of the two candidates
        """
        rng: np.random.Generator = np.random.default_rng(53)
        for _ in range(50):
            profile: PeerProfile = random_profile(rng, 5)
            candidates: tuple[int, int] = partition_candidates(profile)
            bits: tuple[int, ...]
            for bits in itertools.product((0, 1), repeat=3):
                self.assertIn(partition_winner(profile, bits), candidates)

    def test_errors(self) -> None:
        """
        Asserts n < 4, wrong bit counts and non-bits are rejected
        """
        with self.assertRaises(ValidationError):
            partition_winner(EXAMPLE, [0])
        profile: PeerProfile = PeerProfile.from_rankings([[0, 1, 2, 3]] * 4)
        with self.assertRaises(ValidationError):
            partition_winner(profile, [0, 0, 0])
        with self.assertRaises(RangeError):
            partition_winner(profile, [0, 2])


class TestProperties(unittest.TestCase):
    """
    Testing check_responsive and check_impartial
    """

    def test_responsive(self) -> None:
        """
        Asserts only the de-randomized mechanism is responsive
        """
        self.assertTrue(check_responsive("derand_rse", 3, samples=10).passed)
        self.assertFalse(check_responsive("fixed_order_se", 3).passed)
        verdict = check_responsive("partition", 4)
        self.assertFalse(verdict.passed)
        self.assertIn(verdict.witness["agent"], range(4))
        self.assertFalse(check_responsive("constant", 3).passed)

    def test_impartial(self) -> None:
        """
        Asserts partition and constant are impartial and the de-randomized mechanism is not
        """
        self.assertTrue(check_impartial("partition", 4).passed)
        self.assertTrue(check_impartial("partition", 5).passed)
        self.assertTrue(check_impartial("constant", 3).passed)
        verdict = check_impartial("derand_rse", 3, samples=5)
        self.assertFalse(verdict.passed)
        self.assertIn("deviation", verdict.witness)

    def test_never_both(self) -> None:
        """
        Asserts no mechanism is both responsive and impartial
        """
        mechanism_id: str
        for mechanism_id in PEER_MECHANISMS:
            n: int = 4 if mechanism_id == "partition" else 3
            self.assertFalse(
                check_responsive(mechanism_id, n, samples=10).passed
                and check_impartial(mechanism_id, n, samples=10).passed
            )

    def test_unknown_mechanism(self) -> None:
        """
        Asserts an unknown id is a validation error
        """
        with self.assertRaises(ValidationError):
            check_responsive("lottery", 3)


if __name__ == "__main__":
    unittest.main()
