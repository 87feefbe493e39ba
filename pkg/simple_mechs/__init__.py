"""Defines the de-randomized random dictator and left-right-middle mechanisms."""

from simple_mechs.dictator import DictatorBallot, best_dictator_deviation, derand_dictator
from simple_mechs.dictator import dictator_expected_utility
from simple_mechs.facility import FacilityReport, best_lrm_deviation, derand_lrm
from simple_mechs.facility import lrm_expected_cost, lrm_expected_ratio, lrm_location, max_cost
