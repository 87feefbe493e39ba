"""Defines the Verdict returned by every property checker"""

from dataclasses import dataclass, field
from typing import Any

from common.rationals import to_jsonable


@dataclass(slots=True, frozen=True)
class Verdict:
    """
    Structured pass/fail result of a property check.

    Attributes
    ----------
    name : str
        The property that was checked.
    passed : bool
        Whether the property holds on everything that was checked.
    witness : dict[str, Any]
        A counterexample when the check failed, empty otherwise.
    checked : int
        How many configurations were examined.

    Methods
    -------
    success(name: str, checked: int) -> Verdict
        Build a passing verdict.
    failure(name: str, witness: dict[str, Any], checked: int) -> Verdict
        Build a failing verdict carrying a witness.
    to_json() -> dict[str, Any]
        JSON-ready form, rationals as "num/den".
    """

    name: str
    passed: bool
    witness: dict[str, Any] = field(default_factory=dict)
    checked: int = 0

    def __bool__(self) -> bool:
        return self.passed

    @classmethod
    def success(cls, name: str, checked: int = 1) -> "Verdict":
        """
        Build a passing verdict.

        Parameters
        ----------
        name : str
            The property that was checked.
        checked : int
            How many configurations were examined.

        Returns
        -------
        Verdict
            A verdict with ``passed`` set and no witness.
        """
        return cls(name, True, {}, checked)

    @classmethod
    def failure(cls, name: str, witness: dict[str, Any], checked: int = 1) -> "Verdict":
        """
        Build a failing verdict.

        Parameters
        ----------
        name : str
            The property that was checked.
        witness : dict[str, Any]
            The counterexample that breaks the property.
        checked : int
            How many configurations were examined before the witness was found.

        Returns
        -------
        Verdict
            A verdict with ``passed`` unset.
        """
        return cls(name, False, witness, checked)

    def to_json(self) -> dict[str, Any]:
        """
        Returns the verdict as JSON-ready data.

        Returns
        -------
        dict[str, Any]
            Keys name, passed, checked and witness.
        """
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "witness": to_jsonable(self.witness),
        }


def combine(name: str, verdicts: list[Verdict]) -> Verdict:
    """
    Fold several verdicts into one; the first failure wins.

    Parameters
    ----------
    name : str
        Name of the combined property.
    verdicts : list[Verdict]
        The verdicts to fold.

    Returns
    -------
    Verdict
        Passing iff all inputs pass, with the summed check count.
    """
    checked: int = sum(verdict.checked for verdict in verdicts)
    verdict: Verdict
    for verdict in verdicts:
        if not verdict.passed:
            return Verdict.failure(name, {"failed": verdict.name, **verdict.witness}, checked)
    return Verdict.success(name, checked)
