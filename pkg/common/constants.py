"""Constant values shared by the mechanisms, checkers and the CLI"""

from fractions import Fraction
from typing import Final

# Exhaustive search guards
SPE_ORACLE_MAX_N: Final[int] = 7
RP_ORACLE_MAX_N: Final[int] = 7
PARETO_MAX_N: Final[int] = 6
EXHAUSTIVE_MAX_TASKS: Final[int] = 20
MANIPULATION_MAX_ITEMS: Final[int] = 6

# Mechanism constants
LRM_MODULUS: Final[int] = 4
TASK_BIAS: Final[Fraction] = Fraction(4, 3)
TASK_APPROXIMATION: Final[Fraction] = Fraction(7, 4)
LRM_APPROXIMATION: Final[Fraction] = Fraction(3, 2)

# Monte Carlo defaults
DEFAULT_TRIALS: Final[int] = 100_000
DEFAULT_TV_THRESHOLD: Final[float] = 0.02
EXACT_DIST_MAX_OUTCOMES: Final[int] = 1_000_000

DOMAINS: Final[tuple[str, ...]] = ("dictator", "lrm", "tasks", "peer", "school", "alloc")
