"""Defines tie-breaking, student-proposing deferred acceptance and the stability check"""

import itertools
import logging
from typing import Sequence

from common.errors import ValidationError
from common.verdict import Verdict
from permute.lehmer import validate_permutation
from school.instance import Matching, SchoolInstance

# Strict priority order over all students for each school, highest first
StrictPriorities = list[list[int]]


def tie_break(groups: Sequence[Sequence[int]], perm: Sequence[int]) -> list[int]:
    """
    Refine coarse priority groups into a strict order.

    Parameters
    ----------
    groups : Sequence[Sequence[int]]
        Priority groups, highest first.
    perm : Sequence[int]
        Lottery order over all students.

    Returns
    -------
    list[int]
        Groups concatenated in order, each sorted by position in `perm`.

    Raises
    ------
    ValidationError
        If `perm` is not a permutation of the grouped students.
    """
    n: int = sum(len(group) for group in groups)
    validate_permutation(perm, n, "$.permutation")
    position: dict[int, int] = {student: index for index, student in enumerate(perm)}
    order: list[int] = []
    group: Sequence[int]
    for group in groups:
        order.extend(sorted(group, key=position.__getitem__))
    return order


def _ranks(instance: SchoolInstance, priorities: StrictPriorities) -> list[dict[int, int]]:
    if len(priorities) != instance.n_schools:
        raise ValidationError(
            f"expected {instance.n_schools} priority orders, got {len(priorities)}", "$.priorities"
        )
    school: int
    order: list[int]
    for school, order in enumerate(priorities):
        validate_permutation(order, instance.n_students, f"$.priorities[{school}]")
    return [{student: rank for rank, student in enumerate(order)} for order in priorities]


def deferred_acceptance(instance: SchoolInstance, priorities: StrictPriorities) -> Matching:
    """
    Student-proposing deferred acceptance.

    Parameters
    ----------
    instance : SchoolInstance
        Students' preferences and school capacities.
    priorities : StrictPriorities
        A strict order over all students per school.

    Returns
    -------
    Matching
        The student-optimal stable matching; students may stay unmatched.
    """
    ranks: list[dict[int, int]] = _ranks(instance, priorities)
    next_choice: list[int] = [0] * instance.n_students
    held: list[list[int]] = [[] for _ in range(instance.n_schools)]
    free: list[int] = list(reversed(range(instance.n_students)))
    proposals: int = 0
    while free:
        student: int = free.pop()
        prefs: tuple[int, ...] = instance.student_prefs[student]
        if next_choice[student] >= len(prefs):
            continue
        school: int = prefs[next_choice[student]]
        next_choice[student] += 1
        proposals += 1
        held[school].append(student)
        if len(held[school]) > instance.schools[school].capacity:
            held[school].sort(key=ranks[school].__getitem__)
            free.append(held[school].pop())
    logging.debug("Deferred acceptance finished after %d proposals", proposals)
    return Matching({student: school for school, students in enumerate(held) for student in students})


def is_stable(instance: SchoolInstance, priorities: StrictPriorities, matching: Matching) -> Verdict:
    """
    Looks for a blocking pair: a student who prefers a school to their match
    while that school has a free seat or holds someone of lower priority.

    Parameters
    ----------
    instance : SchoolInstance
        The instance.
    priorities : StrictPriorities
        Strict priorities the matching is judged against.
    matching : Matching
        The matching to check.

    Returns
    -------
    Verdict
        Failing with the blocking student and school, or an over-capacity school.
    """
    ranks: list[dict[int, int]] = _ranks(instance, priorities)
    students_at: list[list[int]] = [matching.students_at(s) for s in range(instance.n_schools)]
    school: int
    for school, students in enumerate(students_at):
        if len(students) > instance.schools[school].capacity:
            return Verdict.failure("stable", {"school": school, "over_capacity": students})
    student: int
    prefs: tuple[int, ...]
    for student, prefs in enumerate(instance.student_prefs):
        current: int | None = matching.school_of(student)
        better: tuple[int, ...] = prefs if current not in prefs else prefs[: prefs.index(current)]
        for school in better:
            holders: list[int] = students_at[school]
            if len(holders) < instance.schools[school].capacity:
                return Verdict.failure(
                    "stable", {"student": student, "school": school, "reason": "free seat"}
                )
            worst: int = max(holders, key=ranks[school].__getitem__)
            if ranks[school][student] < ranks[school][worst]:
                return Verdict.failure(
                    "stable",
                    {"student": student, "school": school, "displaces": worst},
                )
    return Verdict.success("stable", instance.n_students)


def find_student_manipulation(
    instance: SchoolInstance, priorities: StrictPriorities, student: int
) -> Verdict:
    """
    Tries every ordering of every subset of schools as `student`'s report and
    checks none gets them a school they truly like better.

    Parameters
    ----------
    instance : SchoolInstance
        True preferences.
    priorities : StrictPriorities
        Fixed strict priorities.
    student : int
        The misreporting student.

    Returns
    -------
    Verdict
        Failing with the profitable report.
    """
    truth: tuple[int, ...] = instance.student_prefs[student]

    def value(school: int | None) -> int:
        return truth.index(school) if school in truth else len(truth)

    honest: int = value(deferred_acceptance(instance, priorities).school_of(student))
    checked: int = 0
    size: int
    for size in range(instance.n_schools + 1):
        report: tuple[int, ...]
        for report in itertools.permutations(range(instance.n_schools), size):
            checked += 1
            matched: int | None = deferred_acceptance(
                instance.with_prefs(student, report), priorities
            ).school_of(student)
            if value(matched) < honest:
                return Verdict.failure(
                    "student-strategyproof",
                    {"student": student, "report": list(report), "school": matched},
                    checked,
                )
    return Verdict.success("student-strategyproof", checked)
