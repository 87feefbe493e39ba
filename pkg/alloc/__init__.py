"""Defines random assignment: probabilistic serial, random priority and their de-randomizations."""

from alloc.instance import AllocInstance, Allocation, RationalMatrix, allocation_matrix
from alloc.instance import matrix_invariants
from alloc.serial import EatingStep, EatingTrace, probabilistic_serial
from alloc.realization import common_denominator, denominator_bound_check, derand_ps
from alloc.realization import ps_modulus, realization_marginals, realize_assignment
from alloc.priority import derand_rp, rp_distribution_oracle, serial_dictatorship
from alloc.properties import find_sd_manipulation, pareto_efficient, sd_dominates
from alloc.properties import sd_efficient, sd_envy_free, strictly_sd_dominates
