"""Exception types raised by the mechanism packages"""


class MechanismError(Exception):
    """Base class for every error raised by a mechanism or checker."""


class RangeError(MechanismError, ValueError):
    """
    A play, bid or index lies outside its declared range.

    Attributes
    ----------
    agent : int | None
        The offending agent (or student, or step) index, when known.
    value : object
        The offending value.
    """

    def __init__(self, message: str, agent: int | None = None, value: object = None) -> None:
        super().__init__(message)
        self.agent: int | None = agent
        self.value: object = value


class ValidationError(MechanismError, ValueError):
    """
    A structure is malformed (not a permutation, bad matrix shape, schema violation).

    Attributes
    ----------
    path : str
        JSON-style path to the offending field, e.g. ``$.agents[2].integer``.
    """

    def __init__(self, message: str, path: str = "$") -> None:
        super().__init__(f"{path}: {message}")
        self.path: str = path


class CapacityError(MechanismError):
    """An exhaustive computation was asked to run above its size guard."""


class ProtocolError(MechanismError):
    """
    A mechanism protocol was violated by the supplied actions.

    Attributes
    ----------
    step : int
        The step at which the violation happened.
    """

    def __init__(self, message: str, step: int) -> None:
        super().__init__(f"step {step}: {message}")
        self.step: int = step
