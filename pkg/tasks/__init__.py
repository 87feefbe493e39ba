"""Defines biased min-work task allocation and its de-randomization."""

from tasks.allocation import TaskInstance, TaskOutcome, TimeMatrix, agent_utility
from tasks.allocation import biased_min_work, derand_biased_min_work, xor_bits
from tasks.makespan import expected_makespan_uniform, makespan, optimal_makespan
from tasks.truthfulness import find_profitable_misreport, individually_rational
from tasks.truthfulness import winning_weakly_dominates
