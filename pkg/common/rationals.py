"""
Codec between exact rationals and the "num/den" strings used in instance and
transcript files. No floating point value ever passes through here.
"""

from fractions import Fraction
from typing import Any

from common.errors import ValidationError


def parse_rational(raw: Any, path: str = "$") -> Fraction:
    """
    Parse an integer or a "num/den" string into an exact rational.

    Parameters
    ----------
    raw : Any
        An int, or a string "num/den" or "num".
    path : str
        Path of the field being parsed, reported on failure.

    Returns
    -------
    value : Fraction
        The parsed rational in lowest terms.

    Raises
    ------
    ValidationError
        If the value is a float, a bool, malformed, or has a zero denominator.
    """
    if isinstance(raw, bool) or isinstance(raw, float):
        raise ValidationError(f"expected an integer or 'num/den' string, got {raw!r}", path)
    if isinstance(raw, int):
        return Fraction(raw)
    if not isinstance(raw, str):
        raise ValidationError(f"expected an integer or 'num/den' string, got {raw!r}", path)

    parts: list[str] = raw.strip().split("/")
    if len(parts) > 2:
        raise ValidationError(f"malformed rational {raw!r}", path)
    try:
        numerator: int = int(parts[0])
        denominator: int = int(parts[1]) if len(parts) == 2 else 1
    except ValueError as ex:
        raise ValidationError(f"malformed rational {raw!r}", path) from ex
    if denominator == 0:
        raise ValidationError(f"zero denominator in {raw!r}", path)
    return Fraction(numerator, denominator)


def format_rational(value: Fraction | int) -> str:
    """
    Render a rational as "num/den" (always with a denominator).

    Parameters
    ----------
    value : Fraction | int
        The value to render.

    Returns
    -------
    str
        The canonical string form, e.g. "3/2" or "4/1".
    """
    frac: Fraction = Fraction(value)
    return f"{frac.numerator}/{frac.denominator}"


def to_jsonable(value: Any) -> Any:
    """
    Recursively convert a value into JSON-ready data, turning every Fraction
    into its "num/den" string. Tuples and sets become lists (sets sorted).
    """
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (set, frozenset)):
        return [to_jsonable(item) for item in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    return value
