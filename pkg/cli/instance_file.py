"""Contains the instance file format: parsing, validation and serialization"""

from dataclasses import dataclass
from fractions import Fraction
import json
from math import factorial
from typing import Any, Callable, TypedDict

from alloc.instance import AllocInstance
from alloc.realization import ps_modulus
from common.constants import DOMAINS, LRM_MODULUS
from common.errors import RangeError, ValidationError
from common.rationals import format_rational, parse_rational
from modgame.strategy import MixedStrategy
from peer.profile import PeerProfile
from permute.compact import CompactBids
from school.instance import SchoolInstance
from sim.mechanisms import lookup
from sim.policy import AgentPolicy, PlayKind
from tasks.allocation import TaskInstance


class AgentEntry(TypedDict, total=False):
    """
    One agent of a dictator or LRM file.

    Attributes
    ----------
    integer : int
        The agent's game integer.
    report : Any
        Favourite candidate (dictator) or "num/den" position (LRM).
    """

    integer: int
    report: Any


class SchoolEntry(TypedDict):
    """
    One school of a school choice file.

    Attributes
    ----------
    capacity : int
        Number of seats.
    groups : list[list[int]]
        Priority groups, highest first.
    """

    capacity: int
    groups: list[list[int]]


@dataclass(slots=True, frozen=True)
class InstanceFile:
    """
    A parsed and validated instance file.

    Attributes
    ----------
    domain : str
        One of dictator, lrm, tasks, peer, school, alloc.
    payload : Any
        The domain instance: reports (dictator, LRM), TaskInstance,
        PeerProfile, SchoolInstance or AllocInstance.
    bids : Any
        Game integers per agent, bit pairs per task, or CompactBids; None if absent.
    mode : str | None
        "lehmer"/"compact" for school, "ps"/"rp" for alloc.
    sigma : int | None
        A directly supplied realization draw for alloc ps.
    modulus : int | None
        Game size override for alloc ps.
    choices : tuple[int, ...] | None
        Supplied elimination choices for peer.
    seed : int | None
        Master seed for `simulate`.
    trials : int | None
        Trial count for `simulate`.
    policies : tuple[AgentPolicy, ...] | None
        Simulated agents for `simulate` and `exact-dist`.
    """

    domain: str
    payload: Any
    bids: Any = None
    mode: str | None = None
    sigma: int | None = None
    modulus: int | None = None
    choices: tuple[int, ...] | None = None
    seed: int | None = None
    trials: int | None = None
    policies: tuple[AgentPolicy, ...] | None = None

    @property
    def mechanism_id(self) -> str:
        """
        Gets the simulated mechanism id of this file

        Returns
        -------
        mechanism_id : str
            The domain, or alloc-ps / alloc-rp
        """
        return f"alloc-{self.mode}" if self.domain == "alloc" else self.domain


def _field(data: Any, key: str, path: str) -> Any:
    if not isinstance(data, dict):
        raise ValidationError(f"expected an object, got {data!r}", path)
    if key not in data:
        raise ValidationError(f"missing field {key!r}", path)
    return data[key]


def _list(raw: Any, path: str) -> list[Any]:
    if not isinstance(raw, list):
        raise ValidationError(f"expected a list, got {raw!r}", path)
    return raw


def _integer(raw: Any, path: str) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise ValidationError(f"expected an integer, got {raw!r}", path)
    return raw


def _integers(raw: Any, path: str) -> tuple[int, ...]:
    return tuple(_integer(value, f"{path}[{index}]") for index, value in enumerate(_list(raw, path)))


def _matrix(raw: Any, path: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(raw, list):
        raise ValidationError(f"expected a list of lists, got {raw!r}", path)
    return tuple(_integers(row, f"{path}[{index}]") for index, row in enumerate(raw))


def _rationals(raw: Any, path: str) -> tuple[Fraction, ...]:
    return tuple(parse_rational(value, f"{path}[{j}]") for j, value in enumerate(_list(raw, path)))


def _slots(raw: Any, path: str) -> tuple[int | None, ...]:
    return tuple(None if v is None else _integer(v, f"{path}[{i}]") for i, v in enumerate(_list(raw, path)))


def _check_bids(bids: tuple[int, ...], agents: int, modulus: int, path: str) -> None:
    if len(bids) != agents:
        raise ValidationError(f"expected {agents} bids, got {len(bids)}", path)
    agent: int
    bid: int
    for agent, bid in enumerate(bids):
        if not 0 <= bid < modulus:
            raise ValidationError(f"agent {agent} bid {bid} outside [0, {modulus})", f"{path}[{agent}]")


def _parse_agents(data: dict[str, Any], modulus_of: Callable[[int], int]) -> tuple[Any, Any]:
    entries: Any = _field(data, "agents", "$")
    if not isinstance(entries, list) or not entries:
        raise ValidationError("expected a non-empty list of agents", "$.agents")
    reports: list[Any] = []
    integers: list[int] = []
    index: int
    entry: AgentEntry
    for index, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise ValidationError("expected an object", f"$.agents[{index}]")
        reports.append(_field(entry, "report", f"$.agents[{index}]"))
        if "integer" in entry:
            integers.append(_integer(entry["integer"], f"$.agents[{index}].integer"))
    if integers and len(integers) != len(entries):
        raise ValidationError("either every agent or no agent has an integer", "$.agents")
    modulus: int = modulus_of(len(entries))
    agent: int
    bid: int
    for agent, bid in enumerate(integers):
        if not 0 <= bid < modulus:
            raise ValidationError(
                f"agent {agent} bid {bid} outside [0, {modulus})", f"$.agents[{agent}].integer"
            )
    return tuple(reports), tuple(integers) if integers else None


def _parse_dictator(data: dict[str, Any]) -> dict[str, Any]:
    reports: tuple[Any, ...]
    reports, bids = _parse_agents(data, lambda n: n)
    agent: int
    report: Any
    for agent, report in enumerate(reports):
        if isinstance(report, (dict, list)):
            raise ValidationError("a candidate must be a JSON scalar", f"$.agents[{agent}].report")
    return {"payload": reports, "bids": bids}


def _parse_lrm(data: dict[str, Any]) -> dict[str, Any]:
    reports: tuple[Any, ...]
    reports, bids = _parse_agents(data, lambda _: LRM_MODULUS)
    positions: tuple[Fraction, ...] = tuple(
        parse_rational(report, f"$.agents[{agent}].report") for agent, report in enumerate(reports)
    )
    return {"payload": positions, "bids": bids}


def _parse_tasks(data: dict[str, Any]) -> dict[str, Any]:
    m: int = _integer(_field(data, "m", "$"), "$.m")
    declared: list[tuple[Fraction, ...]] = []
    true: list[tuple[Fraction, ...]] = []
    key: str
    for key in ("t1", "t2"):
        declared.append(_rationals(_field(data, key, "$"), f"$.{key}"))
    for key in ("true1", "true2"):
        if key in data:
            true.append(_rationals(data[key], f"$.{key}"))
    if len(true) == 1:
        raise ValidationError("give both true1 and true2 or neither", "$")
    instance: TaskInstance = (
        TaskInstance(m, (declared[0], declared[1]), (true[0], true[1]))
        if true
        else TaskInstance(m, (declared[0], declared[1]))
    )
    bids: tuple[tuple[int, ...], ...] | None = None
    if "bits" in data:
        bids = _matrix(data["bits"], "$.bits")
        if len(bids) != m:
            raise ValidationError(f"expected {m} bit pairs, got {len(bids)}", "$.bits")
        task: int
        pair: tuple[int, ...]
        for task, pair in enumerate(bids):
            if len(pair) != 2:
                raise ValidationError("expected one bit per agent", f"$.bits[{task}]")
            agent: int
            for agent in range(2):
                if pair[agent] not in (0, 1):
                    raise ValidationError(
                        f"agent {agent + 1} bit {pair[agent]} is not 0 or 1", f"$.bits[{task}][{agent}]"
                    )
    return {"payload": instance, "bids": bids}


def _parse_peer(data: dict[str, Any]) -> dict[str, Any]:
    profile: PeerProfile = PeerProfile.from_rankings(_matrix(_field(data, "prefs", "$"), "$.prefs"))
    fields: dict[str, Any] = {"payload": profile}
    if "bids" in data:
        fields["bids"] = _integers(data["bids"], "$.bids")
        _check_bids(fields["bids"], profile.n, factorial(profile.n), "$.bids")
    if "choices" in data:
        fields["choices"] = _integers(data["choices"], "$.choices")
    return fields


def _parse_school(data: dict[str, Any]) -> dict[str, Any]:
    students: Any = _field(data, "students", "$")
    schools: Any = _field(data, "schools", "$")
    if not isinstance(students, list) or not isinstance(schools, list):
        raise ValidationError("students and schools must be lists", "$")
    prefs: list[tuple[int, ...]] = [
        _integers(_field(student, "prefs", f"$.students[{index}]"), f"$.students[{index}].prefs")
        for index, student in enumerate(students)
    ]
    capacities: list[int] = []
    groups: list[list[list[int]]] = []
    k: int
    entry: SchoolEntry
    for k, entry in enumerate(schools):
        capacities.append(_integer(_field(entry, "capacity", f"$.schools[{k}]"), f"$.schools[{k}].capacity"))
        groups.append(
            [list(group) for group in _matrix(_field(entry, "groups", f"$.schools[{k}]"), f"$.schools[{k}].groups")]
        )
    instance: SchoolInstance = SchoolInstance.from_lists(prefs, capacities, groups)
    mode: str = data.get("mode", "lehmer")
    if mode not in ("lehmer", "compact"):
        raise ValidationError(f"unknown mode {mode!r}", "$.mode")
    fields: dict[str, Any] = {"payload": instance, "mode": mode}
    if "bids" not in data:
        return fields
    if mode == "lehmer":
        fields["bids"] = _integers(data["bids"], "$.bids")
        _check_bids(fields["bids"], instance.n_students, factorial(instance.n_students), "$.bids")
        return fields
    raw: Any = data["bids"]
    if not isinstance(raw, dict):
        raise ValidationError('compact bids are {"a": [...], "b": [...]}', "$.bids")
    compact: CompactBids = CompactBids(
        _slots(_field(raw, "a", "$.bids"), "$.bids.a"), _slots(_field(raw, "b", "$.bids"), "$.bids.b")
    )
    try:
        compact.validate(instance.n_students)
    except RangeError as ex:
        raise ValidationError(str(ex), f"$.bids[{ex.agent}]") from ex
    fields["bids"] = compact
    return fields


def _parse_alloc(data: dict[str, Any]) -> dict[str, Any]:
    instance: AllocInstance = AllocInstance.from_rankings(_matrix(_field(data, "prefs", "$"), "$.prefs"))
    mode: str = data.get("mode", "ps")
    if mode not in ("ps", "rp"):
        raise ValidationError(f"unknown mode {mode!r}", "$.mode")
    fields: dict[str, Any] = {"payload": instance, "mode": mode}
    size: int = factorial(instance.n)
    if mode == "ps":
        if "modulus" in data:
            fields["modulus"] = _integer(data["modulus"], "$.modulus")
            if fields["modulus"] < 1:
                raise ValidationError("modulus must be positive", "$.modulus")
        size = fields.get("modulus", ps_modulus(instance.n, instance.m))
        if "sigma" in data:
            fields["sigma"] = _integer(data["sigma"], "$.sigma")
            if not 0 <= fields["sigma"] < size:
                raise ValidationError(f"sigma {fields['sigma']} outside [0, {size})", "$.sigma")
    elif "sigma" in data or "modulus" in data:
        raise ValidationError("sigma and modulus only apply to mode ps", "$")
    if "bids" in data:
        fields["bids"] = _integers(data["bids"], "$.bids")
        _check_bids(fields["bids"], instance.n, size, "$.bids")
    return fields


PARSERS: dict[str, Callable[[dict[str, Any]], dict[str, Any]]] = {
    "dictator": _parse_dictator,
    "lrm": _parse_lrm,
    "tasks": _parse_tasks,
    "peer": _parse_peer,
    "school": _parse_school,
    "alloc": _parse_alloc,
}


def _parse_policy(raw: Any, modulus: int, domain: str, path: str) -> AgentPolicy:
    if not isinstance(raw, dict):
        raise ValidationError("expected an object", path)
    try:
        kind: PlayKind = PlayKind(raw.get("kind", "uniform"))
    except ValueError as ex:
        raise ValidationError(f"unknown policy kind {raw.get('kind')!r}", f"{path}.kind") from ex
    report: Any = raw.get("report")
    if report is not None and domain not in ("dictator", "lrm"):
        raise ValidationError(f"domain {domain!r} takes no reports", f"{path}.report")
    if report is not None and domain == "lrm":
        report = parse_rational(report, f"{path}.report")
    if kind is PlayKind.FIXED:
        value: int = _integer(_field(raw, "value", path), f"{path}.value")
        if not 0 <= value < modulus:
            raise ValidationError(f"fixed play {value} outside [0, {modulus})", f"{path}.value")
        return AgentPolicy.fixed(value, report)
    if kind is PlayKind.CUSTOM:
        weights: Any = _field(raw, "weights", path)
        if not isinstance(weights, dict):
            raise ValidationError('weights are {"value": "num/den"}', f"{path}.weights")
        try:
            strategy: MixedStrategy = MixedStrategy(
                modulus,
                {int(value): parse_rational(weight, f"{path}.weights.{value}") for value, weight in weights.items()},
            )
        except (RangeError, ValueError) as ex:
            raise ValidationError(str(ex), f"{path}.weights") from ex
        return AgentPolicy.custom(strategy, report)
    return AgentPolicy.uniform(report)


def parse_data(data: Any) -> InstanceFile:
    """
    Validate an already decoded instance document.

    Parameters
    ----------
    data : Any
        The decoded JSON value.

    Returns
    -------
    InstanceFile
        The validated instance.

    Raises
    ------
    ValidationError
        With the path of the offending field.
    """
    if not isinstance(data, dict):
        raise ValidationError("an instance file is a JSON object", "$")
    domain: Any = _field(data, "domain", "$")
    if domain not in DOMAINS:
        raise ValidationError(f"unknown domain {domain!r}, expected one of {list(DOMAINS)}", "$.domain")
    fields: dict[str, Any] = PARSERS[domain](data)

    key: str
    for key in ("seed", "trials"):
        if key in data:
            fields[key] = _integer(data[key], f"$.{key}")
    if fields.get("trials", 1) < 1:
        raise ValidationError("trials must be positive", "$.trials")

    parsed: InstanceFile = InstanceFile(domain, **fields)
    if "policies" not in data:
        return parsed
    if not isinstance(data["policies"], list):
        raise ValidationError("expected a list of policies", "$.policies")
    modulus: int = lookup(parsed.mechanism_id).modulus(parsed.payload)
    policies: tuple[AgentPolicy, ...] = tuple(
        _parse_policy(raw, modulus, domain, f"$.policies[{index}]")
        for index, raw in enumerate(data["policies"])
    )
    return InstanceFile(domain, **fields, policies=policies)


def parse_instance(text: str) -> InstanceFile:
    """
    Parse and validate a UTF-8 JSON instance document.

    Parameters
    ----------
    text : str
        The document.

    Returns
    -------
    InstanceFile
        The validated instance.

    Raises
    ------
    json.JSONDecodeError
        If the text is not JSON.
    ValidationError
        If the document violates its domain's schema, with the offending path.
    """
    return parse_data(json.loads(text))


def load_instance(file_path: str) -> InstanceFile:
    """
    Opens an instance file and parses it.

    Parameters
    ----------
    file_path : str
        Path of the JSON file.

    Returns
    -------
    InstanceFile
        The validated instance.
    """
    with open(file_path, encoding="utf-8") as file:
        return parse_instance(file.read())


def _policy_json(policy: AgentPolicy, domain: str) -> dict[str, Any]:
    data: dict[str, Any] = {"kind": policy.kind.value}
    if policy.kind is PlayKind.FIXED:
        data["value"] = policy.value
    if policy.kind is PlayKind.CUSTOM and policy.strategy is not None:
        data["weights"] = {
            str(value): format_rational(weight) for value, weight in policy.strategy.weights.items()
        }
    if policy.report is not None:
        data["report"] = format_rational(policy.report) if domain == "lrm" else policy.report
    return data


def instance_to_json(instance: InstanceFile) -> dict[str, Any]:
    """
    The schema form of a parsed instance, inverse of parse_data.

    Parameters
    ----------
    instance : InstanceFile
        A parsed instance.

    Returns
    -------
    dict[str, Any]
        JSON-ready data.
    """
    data: dict[str, Any] = {"domain": instance.domain}
    payload: Any = instance.payload
    if instance.domain in ("dictator", "lrm"):
        agents: list[dict[str, Any]] = [
            {"report": format_rational(report) if instance.domain == "lrm" else report}
            for report in payload
        ]
        if instance.bids is not None:
            entry: dict[str, Any]
            bid: int
            for entry, bid in zip(agents, instance.bids):
                entry["integer"] = bid
        data["agents"] = agents
    elif instance.domain == "tasks":
        data["m"] = payload.m
        data["t1"] = [format_rational(t) for t in payload.declared_times[0]]
        data["t2"] = [format_rational(t) for t in payload.declared_times[1]]
        if payload.true_times != payload.declared_times:
            data["true1"] = [format_rational(t) for t in payload.true_times[0]]
            data["true2"] = [format_rational(t) for t in payload.true_times[1]]
        if instance.bids is not None:
            data["bits"] = [list(pair) for pair in instance.bids]
    elif instance.domain == "school":
        data["students"] = [{"prefs": list(prefs)} for prefs in payload.student_prefs]
        data["schools"] = [
            {"capacity": school.capacity, "groups": [list(group) for group in school.groups]}
            for school in payload.schools
        ]
        data["mode"] = instance.mode
        if isinstance(instance.bids, CompactBids):
            data["bids"] = {"a": list(instance.bids.a), "b": list(instance.bids.b)}
        elif instance.bids is not None:
            data["bids"] = list(instance.bids)
    else:
        data["prefs"] = [list(ranking) for ranking in payload.prefs]
        if instance.bids is not None:
            data["bids"] = list(instance.bids)
    if instance.domain == "alloc":
        data["mode"] = instance.mode
    if instance.choices is not None:
        data["choices"] = list(instance.choices)
    key: str
    for key in ("sigma", "modulus", "seed", "trials"):
        if getattr(instance, key) is not None:
            data[key] = getattr(instance, key)
    if instance.policies is not None:
        data["policies"] = [_policy_json(policy, instance.domain) for policy in instance.policies]
    return data


def serialize_instance(instance: InstanceFile) -> str:
    """
    Serialize a parsed instance; parsing the result gives an equal instance.

    Parameters
    ----------
    instance : InstanceFile
        A parsed instance.

    Returns
    -------
    str
        Indented JSON with sorted keys.
    """
    return json.dumps(instance_to_json(instance), sort_keys=True, indent=2)
