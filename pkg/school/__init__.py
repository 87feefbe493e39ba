"""Defines school choice with a de-randomized tie-breaking lottery."""

from school.instance import Matching, School, SchoolInstance
from school.acceptance import StrictPriorities, deferred_acceptance, find_student_manipulation
from school.acceptance import is_stable, tie_break
from school.lottery import TieBreakMode, derand_da, lottery_order, replay_transcript
