"""Defines the de-randomized school lottery and transcript replay"""

from enum import Enum
import logging
from math import factorial
from typing import Any, Sequence

from common.errors import ProtocolError, ValidationError
from common.transcript import GamePlacement, MechanismTranscript
from permute.compact import CompactBids, compact_priority_order
from permute.lehmer import Permutation, seed_to_order
from school.acceptance import StrictPriorities, deferred_acceptance, tie_break
from school.instance import Matching, SchoolInstance


class TieBreakMode(Enum):
    """
    How the students' bids become the lottery order.
    """

    LEHMER: str = "lehmer"
    COMPACT: str = "compact"


def lottery_order(
    n: int, bids: Sequence[int] | CompactBids, mode: TieBreakMode
) -> tuple[int | None, Permutation]:
    """
    Turn the students' bids into one order over all students.

    Parameters
    ----------
    n : int
        Number of students.
    bids : Sequence[int] | CompactBids
        Integers in [0, n!) in lehmer mode, (a, b) pairs in compact mode.
    mode : TieBreakMode
        Which game the bids belong to.

    Returns
    -------
    tuple[int | None, Permutation]
        The seed (lehmer mode only) and the order.
    """
    if mode is TieBreakMode.COMPACT:
        if not isinstance(bids, CompactBids):
            raise ValidationError("compact mode needs a and b bid vectors", "$.bids")
        return None, compact_priority_order(bids, n)
    if isinstance(bids, CompactBids):
        raise ValidationError("lehmer mode needs one integer per student", "$.bids")
    if len(bids) != n:
        raise ValidationError(f"expected {n} bids, got {len(bids)}", "$.bids")
    return seed_to_order(bids, n)


def derand_da(
    instance: SchoolInstance,
    bids: Sequence[int] | CompactBids,
    mode: TieBreakMode = TieBreakMode.LEHMER,
) -> tuple[Matching, MechanismTranscript]:
    """
    Break every school's ties with one lottery played by the students, then
    run deferred acceptance.

    Parameters
    ----------
    instance : SchoolInstance
        The instance.
    bids : Sequence[int] | CompactBids
        The students' bids for `mode`.
    mode : TieBreakMode
        Full Lehmer game or the compact construction.

    Returns
    -------
    tuple[Matching, MechanismTranscript]
        The matching and the transcript of the run.
    """
    seed: int | None
    perm: Permutation
    seed, perm = lottery_order(instance.n_students, bids, mode)
    priorities: StrictPriorities = [tie_break(school.groups, perm) for school in instance.schools]
    matching: Matching = deferred_acceptance(instance, priorities)
    logging.info("School lottery order %s matched %d students", perm, len(matching.assignment))
    recorded: Any = (
        {"a": list(bids.a), "b": list(bids.b)} if isinstance(bids, CompactBids) else list(bids)
    )
    transcript: MechanismTranscript = MechanismTranscript(
        "school",
        GamePlacement.GAME_FIRST,
        recorded,
        seed=seed,
        modulus=factorial(instance.n_students) if mode is TieBreakMode.LEHMER else None,
        permutation=perm,
        outcome=matching.to_json(),
        details={"mode": mode.value, "priorities": priorities},
    )
    return matching, transcript


def replay_transcript(instance: SchoolInstance, transcript: MechanismTranscript) -> Matching:
    """
    Re-run a recorded lottery from its bids and check it reproduces the record.

    Parameters
    ----------
    instance : SchoolInstance
        The instance the transcript was recorded on.
    transcript : MechanismTranscript
        A transcript from derand_da.

    Returns
    -------
    Matching
        The replayed matching.

    Raises
    ------
    ProtocolError
        If the order (step 0) or the matching (step 1) differs from the record.
    """
    mode: TieBreakMode = TieBreakMode(transcript.details.get("mode", TieBreakMode.LEHMER.value))
    bids: Sequence[int] | CompactBids = (
        CompactBids(tuple(transcript.bids["a"]), tuple(transcript.bids["b"]))
        if mode is TieBreakMode.COMPACT
        else transcript.bids
    )
    matching: Matching
    replayed: MechanismTranscript
    matching, replayed = derand_da(instance, bids, mode)
    if replayed.permutation != transcript.permutation:
        raise ProtocolError(
            f"lottery order {replayed.permutation} differs from recorded {transcript.permutation}", 0
        )
    if replayed.outcome != transcript.outcome:
        raise ProtocolError("replayed matching differs from the recorded one", 1)
    return matching
