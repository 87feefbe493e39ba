"""Renders CLI results as canonical JSON or fixed-width tables"""

import json
from typing import Any

from common.rationals import to_jsonable
from common.verdict import Verdict

NAME_WIDTH: int = 28
STATUS_WIDTH: int = 6
COUNT_WIDTH: int = 10


def dumps(document: Any) -> str:
    """Canonical JSON: rationals as "num/den", sorted keys, fixed separators."""
    return json.dumps(to_jsonable(document), sort_keys=True, separators=(",", ":"))


def verdict_table(verdicts: list[Verdict]) -> str:
    """
    One row per verdict: name, PASS/FAIL, configurations checked and the
    witness of a failure.

    Parameters
    ----------
    verdicts : list[Verdict]
        The results to render.

    Returns
    -------
    str
        The table, header included.
    """
    lines: list[str] = [
        f"{'property':<{NAME_WIDTH}} {'result':<{STATUS_WIDTH}} {'checked':>{COUNT_WIDTH}}  witness"
    ]
    verdict: Verdict
    for verdict in verdicts:
        status: str = "PASS" if verdict.passed else "FAIL"
        witness: str = dumps(verdict.witness) if verdict.witness else ""
        lines.append(
            f"{verdict.name:<{NAME_WIDTH}} {status:<{STATUS_WIDTH}} {verdict.checked:>{COUNT_WIDTH}}  {witness}"
        )
    return "\n".join(lines)


def mapping_table(document: dict[str, Any]) -> str:
    """
    One row per top-level key with the value as compact JSON.

    Parameters
    ----------
    document : dict[str, Any]
        A transcript, report or distribution.

    Returns
    -------
    str
        The table.
    """
    data: dict[str, Any] = to_jsonable(document)
    width: int = max((len(key) for key in data), default=0)
    return "\n".join(
        f"{key:<{width}}  {value if isinstance(value, str) else json.dumps(value, sort_keys=True)}"
        for key, value in sorted(data.items())
    )


def render(document: Any, output_format: str) -> str:
    """
    Render a result for the terminal.

    Parameters
    ----------
    document : Any
        A list of Verdicts or a JSON-ready mapping.
    output_format : str
        "json" or "table".

    Returns
    -------
    str
        The rendered text.
    """
    if isinstance(document, list) and all(isinstance(item, Verdict) for item in document):
        if output_format == "table":
            return verdict_table(document)
        return dumps([verdict.to_json() for verdict in document])
    if output_format == "table":
        return mapping_table(document)
    return dumps(document)
