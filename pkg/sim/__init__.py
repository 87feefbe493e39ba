"""Monte Carlo trials of the de-randomized mechanisms under simulated agents."""

from sim.policy import AgentPolicy, PlayKind
from sim.mechanisms import MECHANISMS, SimulatedMechanism, lookup
from sim.trials import TrialReport, exact_distribution, outcome_key, run_trials, trial_seed
from sim.trials import tv_distance
