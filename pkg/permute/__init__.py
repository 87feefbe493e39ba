"""Defines Lehmer-code permutations and the compact permutation game."""

from permute.lehmer import Permutation, factorial_digits, lehmer_decode, lehmer_encode
from permute.lehmer import seed_to_order, validate_permutation
from permute.compact import BidRange, CompactBids, compact_bid_ranges, compact_priority_order
from permute.compact import enumerate_compact_bids
