"""
Testing simple_mechs.dictator and simple_mechs.facility
"""

import itertools
import unittest
from fractions import Fraction

import numpy as np

from common.errors import RangeError, ValidationError
from simple_mechs import (
    DictatorBallot,
    FacilityReport,
    best_dictator_deviation,
    best_lrm_deviation,
    derand_dictator,
    derand_lrm,
    lrm_expected_ratio,
    max_cost,
)


class TestDerandDictator(unittest.TestCase):
    """
    Testing derand_dictator
    """

    def test_examples(self) -> None:
        """
        Asserts the zero sum picks voter 0, 5 mod 3 picks voter 2, and a lone voter dictates
        """
        candidates: list[str] = ["A", "B", "C"]
        zero: list[DictatorBallot] = [DictatorBallot(0, c) for c in candidates]
        self.assertEqual(derand_dictator(zero), "A")
        mixed: list[DictatorBallot] = [DictatorBallot(i, c) for i, c in zip((1, 2, 2), candidates)]
        self.assertEqual(derand_dictator(mixed), "C")
        self.assertEqual(derand_dictator([DictatorBallot(0, "A")]), "A")

    def test_errors(self) -> None:
        """
        Asserts empty ballots and out-of-range integers are rejected
        """
        with self.assertRaises(ValidationError):
            derand_dictator([])
        with self.assertRaises(RangeError) as context:
            derand_dictator([DictatorBallot(0, "A"), DictatorBallot(2, "B")])
        self.assertEqual(context.exception.agent, 1)

    def test_winner_is_some_favourite(self) -> None:
        """
        Asserts the winner is always one of the ballots' favourites
        """
        candidates: list[str] = ["A", "B", "C", "D"]
        integers: tuple[int, ...]
        for integers in itertools.product(range(3), repeat=3):
            ballots: list[DictatorBallot] = [
                DictatorBallot(i, candidates[k]) for k, i in enumerate(integers)
            ]
            self.assertIn(derand_dictator(ballots), candidates[:3])

    def test_sincerity_equilibrium(self) -> None:
        """
        Asserts no voter gains by any (integer, report) deviation against uniform sincere voters
        """
        candidates: list[str] = ["A", "B", "C"]
        favourites: tuple[str, ...]
        for favourites in itertools.product(candidates, repeat=3):
            agent: int
            for agent in range(3):
                self.assertIsNone(best_dictator_deviation(list(favourites), candidates, agent))


class TestDerandLrm(unittest.TestCase):
    """
    Testing derand_lrm, max_cost and lrm_expected_ratio
    """

    def test_locations(self) -> None:
        """
        Asserts midpoint on sum 1, rightmost on sum 3 and collocated agents
        """
        self.assertEqual(
            derand_lrm([FacilityReport(1, Fraction(0)), FacilityReport(0, Fraction(1))]),
            Fraction(1, 2),
        )
        self.assertEqual(
            derand_lrm([FacilityReport(2, Fraction(0)), FacilityReport(1, Fraction(1))]),
            Fraction(1),
        )
        integers: tuple[int, ...]
        for integers in itertools.product(range(4), repeat=2):
            reports: list[FacilityReport] = [FacilityReport(i, Fraction(7, 3)) for i in integers]
            self.assertEqual(derand_lrm(reports), Fraction(7, 3))

    def test_errors(self) -> None:
        """
        Asserts empty reports and integers outside {0,1,2,3} are rejected
        """
        with self.assertRaises(ValidationError):
            derand_lrm([])
        with self.assertRaises(RangeError):
            derand_lrm([FacilityReport(4, Fraction(0))])

    def test_max_cost(self) -> None:
        """
        Asserts the worked maximum costs
        """
        self.assertEqual(max_cost(Fraction(1, 2), [Fraction(0), Fraction(1)]), Fraction(1, 2))
        self.assertEqual(max_cost(Fraction(0), [Fraction(0), Fraction(1)]), 1)
        self.assertEqual(max_cost(Fraction(3), [Fraction(3)]), 0)

    def test_ratio_examples(self) -> None:
        """
        Asserts 3/2 on two agents and with an interior agent, 1 when collocated
        """
        self.assertEqual(lrm_expected_ratio([Fraction(0), Fraction(1)]), Fraction(3, 2))
        self.assertEqual(lrm_expected_ratio([Fraction(5)] * 3), 1)
        self.assertEqual(
            lrm_expected_ratio([Fraction(0), Fraction(1, 2), Fraction(1)]), Fraction(3, 2)
        )

    def test_ratio_random(self) -> None:
        """
        Asserts the ratio is exactly 3/2 on 1000 random non-degenerate instances
        """
        rng: np.random.Generator = np.random.default_rng(17)
        checked: int = 0
        while checked < 1000:
            size: int = int(rng.integers(2, 8))
            positions: list[Fraction] = [
                Fraction(int(num), int(den))
                for num, den in zip(rng.integers(-50, 51, size=size), rng.integers(1, 10, size=size))
            ]
            if min(positions) == max(positions):
                continue
            self.assertEqual(lrm_expected_ratio(positions), Fraction(3, 2))
            checked += 1

    def test_sincerity_equilibrium(self) -> None:
        """
        Asserts no agent of three lowers their expected distance by any deviation
        """
        rng: np.random.Generator = np.random.default_rng(19)
        for _ in range(30):
            positions: list[Fraction] = [Fraction(int(x)) for x in rng.integers(0, 10, size=3)]
            agent: int
            for agent in range(3):
                self.assertIsNone(best_lrm_deviation(positions, agent))


if __name__ == "__main__":
    unittest.main()
