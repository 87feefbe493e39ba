"""Defines school choice instances and matchings"""

from dataclasses import dataclass, field
from typing import Sequence

from common.errors import ValidationError


@dataclass(slots=True, frozen=True)
class School:
    """
    A school with a capacity and coarse priorities.

    Attributes
    ----------
    capacity : int
        Number of seats, at least 1.
    groups : tuple[tuple[int, ...], ...]
        Priority groups from highest to lowest; together they partition the students.
    """

    capacity: int
    groups: tuple[tuple[int, ...], ...]


@dataclass(slots=True, frozen=True)
class SchoolInstance:
    """
    Students with strict (possibly truncated) preference lists over schools,
    and schools with coarse priorities over students.

    Attributes
    ----------
    student_prefs : tuple[tuple[int, ...], ...]
        Schools each student finds acceptable, best first.
    schools : tuple[School, ...]
        The schools.

    Methods
    -------
    from_lists(student_prefs, capacities, groups) -> SchoolInstance
        Build an instance from plain lists.
    with_prefs(student: int, prefs: Sequence[int]) -> SchoolInstance
        Copy with one student's list replaced.
    """

    student_prefs: tuple[tuple[int, ...], ...]
    schools: tuple[School, ...]

    def __post_init__(self) -> None:
        n_schools: int = len(self.schools)
        student: int
        prefs: tuple[int, ...]
        for student, prefs in enumerate(self.student_prefs):
            if len(set(prefs)) != len(prefs):
                raise ValidationError("repeated school", f"$.students[{student}].prefs")
            if any(not 0 <= school < n_schools for school in prefs):
                raise ValidationError(
                    f"school ids must be in [0, {n_schools})", f"$.students[{student}].prefs"
                )
        everyone: list[int] = list(range(self.n_students))
        index: int
        school: School
        for index, school in enumerate(self.schools):
            if school.capacity < 1:
                raise ValidationError(
                    f"capacity must be positive, got {school.capacity}", f"$.schools[{index}].capacity"
                )
            if any(not group for group in school.groups):
                raise ValidationError("empty priority group", f"$.schools[{index}].groups")
            if sorted(s for group in school.groups for s in group) != everyone:
                raise ValidationError(
                    "priority groups must partition the students", f"$.schools[{index}].groups"
                )

    @property
    def n_students(self) -> int:
        """
        Get the number of students.

        Returns
        -------
        int
            Number of students.
        """
        return len(self.student_prefs)

    @property
    def n_schools(self) -> int:
        """
        Get the number of schools.

        Returns
        -------
        int
            Number of schools.
        """
        return len(self.schools)

    @classmethod
    def from_lists(
        cls,
        student_prefs: Sequence[Sequence[int]],
        capacities: Sequence[int],
        groups: Sequence[Sequence[Sequence[int]]],
    ) -> "SchoolInstance":
        """
        Build an instance from plain lists.

        Parameters
        ----------
        student_prefs : Sequence[Sequence[int]]
            Acceptable schools per student, best first.
        capacities : Sequence[int]
            Seats per school.
        groups : Sequence[Sequence[Sequence[int]]]
            Priority groups per school, highest first.

        Returns
        -------
        SchoolInstance
            The validated instance.
        """
        if len(capacities) != len(groups):
            raise ValidationError("one capacity and one group list per school", "$.schools")
        return cls(
            tuple(tuple(prefs) for prefs in student_prefs),
            tuple(
                School(int(capacity), tuple(tuple(group) for group in school_groups))
                for capacity, school_groups in zip(capacities, groups)
            ),
        )

    def with_prefs(self, student: int, prefs: Sequence[int]) -> "SchoolInstance":
        """Copy with one student's preference list replaced."""
        student_prefs: list[tuple[int, ...]] = list(self.student_prefs)
        student_prefs[student] = tuple(prefs)
        return SchoolInstance(tuple(student_prefs), self.schools)


@dataclass(slots=True)
class Matching:
    """
    Partial assignment of students to schools.

    Attributes
    ----------
    assignment : dict[int, int]
        School of every matched student.
    """

    assignment: dict[int, int] = field(default_factory=dict)

    def school_of(self, student: int) -> int | None:
        """
        The student's school, None when unmatched.

        Parameters
        ----------
        student : int
            The student.

        Returns
        -------
        int | None
            School id or None.
        """
        return self.assignment.get(student)

    def students_at(self, school: int) -> list[int]:
        """
        Students matched to a school, ascending.

        Parameters
        ----------
        school : int
            The school.

        Returns
        -------
        list[int]
            Student ids.
        """
        return sorted(s for s, c in self.assignment.items() if c == school)

    def to_json(self) -> dict[str, int]:
        """Student ids as strings mapped to schools, for transcripts."""
        return {str(student): self.assignment[student] for student in sorted(self.assignment)}
