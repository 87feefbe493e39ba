"""Defines sequential elimination peer selection and its impartiality checks."""

from peer.profile import EliminationOrder, PeerProfile
from peer.elimination import derand_rse, derand_rse_transcript, responsive_witness
from peer.elimination import rse_winner_distribution, run_sequential_elimination
from peer.elimination import spe_continuation, spe_winner_linear, spe_winner_oracle
from peer.elimination import uniform_order_distribution
from peer.partition import partition_candidates, partition_sides, partition_winner
from peer.properties import PEER_MECHANISMS, PeerMechanism, build_mechanism
from peer.properties import check_impartial, check_responsive
