"""Defines the modular arithmetic game and its equilibrium checks."""

from modgame.strategy import MixedStrategy, Profile
from modgame.strategy import is_quasi_uniform, point_mass, pure_profile, uniform_strategy
from modgame.game import ModGame, outcome_distribution, outcome_sum, parity_game, win_loss_game
from modgame.equilibrium import expected_utility, parity_equilibrium_grid, verify_nash
