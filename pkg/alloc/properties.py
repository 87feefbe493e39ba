"""Defines stochastic dominance comparisons and the efficiency, envy-freeness and manipulation checks"""

from fractions import Fraction
import itertools
from typing import Sequence

import networkx as nx

from alloc.instance import AllocInstance, Allocation, RationalMatrix
from alloc.serial import probabilistic_serial
from common.constants import MANIPULATION_MAX_ITEMS, PARETO_MAX_N
from common.errors import CapacityError
from common.verdict import Verdict


def prefix_sums(row: Sequence[Fraction | int], ranking: Sequence[int]) -> list[Fraction]:
    """
    Probability of getting one of the top-t items, for t = 1..m.

    Parameters
    ----------
    row : Sequence[Fraction | int]
        One agent's probabilities (or 0/1 holdings) per item.
    ranking : Sequence[int]
        Items from best to worst.

    Returns
    -------
    list[Fraction]
        Cumulative sums along the ranking.
    """
    return list(itertools.accumulate(Fraction(row[item]) for item in ranking))


def sd_dominates(
    row_p: Sequence[Fraction | int], row_q: Sequence[Fraction | int], ranking: Sequence[int]
) -> bool:
    """
    Whether `row_p` weakly stochastically dominates `row_q` under `ranking`.

    Parameters
    ----------
    row_p : Sequence[Fraction | int]
        Candidate dominating row.
    row_q : Sequence[Fraction | int]
        Row compared against.
    ranking : Sequence[int]
        Items from best to worst.

    Returns
    -------
    bool
        True if every top-t prefix sum of `row_p` is at least that of `row_q`.
    """
    return all(p >= q for p, q in zip(prefix_sums(row_p, ranking), prefix_sums(row_q, ranking)))


def strictly_sd_dominates(
    row_p: Sequence[Fraction | int], row_q: Sequence[Fraction | int], ranking: Sequence[int]
) -> bool:
    """Weak dominance with at least one strictly larger prefix sum."""
    return sd_dominates(row_p, row_q, ranking) and prefix_sums(row_p, ranking) != prefix_sums(
        row_q, ranking
    )


def sd_envy_free(matrix: RationalMatrix, instance: AllocInstance) -> Verdict:
    """
    No agent would rather have another agent's row.

    Parameters
    ----------
    matrix : RationalMatrix
        The probability matrix.
    instance : AllocInstance
        Agents' rankings.

    Returns
    -------
    Verdict
        Failing with the envious agent, the envied agent and the prefix length t.
    """
    checked: int = 0
    agent: int
    other: int
    for agent, other in itertools.permutations(range(instance.n), 2):
        checked += 1
        ranking: tuple[int, ...] = instance.prefs[agent]
        own: list[Fraction] = prefix_sums(matrix[agent], ranking)
        theirs: list[Fraction] = prefix_sums(matrix[other], ranking)
        t: int
        for t in range(instance.m):
            if own[t] < theirs[t]:
                return Verdict.failure(
                    "sd-envy-free", {"agent": agent, "envied": other, "t": t + 1}, checked
                )
    return Verdict.success("sd-envy-free", checked)


def sd_efficient(matrix: RationalMatrix, instance: AllocInstance) -> Verdict:
    """
    Ordinal efficiency: the relation "some agent ranks a above b yet gets b
    with positive probability" has no cycle over items.

    Parameters
    ----------
    matrix : RationalMatrix
        The probability matrix.
    instance : AllocInstance
        Agents' rankings.

    Returns
    -------
    Verdict
        Failing with one cycle as a list of (a, b) edges.
    """
    relation: nx.DiGraph = nx.DiGraph()
    relation.add_nodes_from(range(instance.m))
    agent: int
    ranking: tuple[int, ...]
    for agent, ranking in enumerate(instance.prefs):
        position: int
        better: int
        for position, better in enumerate(ranking):
            worse: int
            for worse in ranking[position + 1 :]:
                if matrix[agent][worse] > 0:
                    relation.add_edge(better, worse)
    try:
        cycle: list[tuple[int, int]] = nx.find_cycle(relation)
    except nx.NetworkXNoCycle:
        return Verdict.success("sd-efficient", relation.number_of_edges())
    return Verdict.failure(
        "sd-efficient", {"cycle": [list(edge) for edge in cycle]}, relation.number_of_edges()
    )


def _holdings(allocation: Allocation, agent: int, m: int) -> list[int]:
    return [1 if allocation.get(item) == agent else 0 for item in range(m)]


def pareto_efficient(allocation: Allocation, instance: AllocInstance) -> Verdict:
    """
    No other allocation makes every agent's bundle weakly better, and one
    strictly better, comparing bundles by top-t item counts along the ranking.

    Parameters
    ----------
    allocation : Allocation
        Agent of every item.
    instance : AllocInstance
        Agents' rankings, n and m at most 6.

    Returns
    -------
    Verdict
        Failing with a dominating allocation.

    Raises
    ------
    CapacityError
        If n or m is above the exhaustive limit.
    """
    if instance.n > PARETO_MAX_N or instance.m > PARETO_MAX_N:
        raise CapacityError(f"the exhaustive Pareto check is limited to n, m <= {PARETO_MAX_N}")
    current: list[list[int]] = [
        _holdings(allocation, agent, instance.m) for agent in range(instance.n)
    ]
    checked: int = 0
    owners: tuple[int, ...]
    for owners in itertools.product(range(instance.n), repeat=instance.m):
        checked += 1
        candidate: Allocation = dict(enumerate(owners))
        rows: list[list[int]] = [
            _holdings(candidate, agent, instance.m) for agent in range(instance.n)
        ]
        if all(
            sd_dominates(rows[agent], current[agent], instance.prefs[agent])
            for agent in range(instance.n)
        ) and any(
            strictly_sd_dominates(rows[agent], current[agent], instance.prefs[agent])
            for agent in range(instance.n)
        ):
            return Verdict.failure("pareto-efficient", {"dominated_by": candidate}, checked)
    return Verdict.success("pareto-efficient", checked)


def find_sd_manipulation(instance: AllocInstance, agent: int) -> list[int] | None:
    """
    Look for a ranking `agent` could report to get a probabilistic serial row
    that strictly dominates their truthful row under their true ranking.

    Parameters
    ----------
    instance : AllocInstance
        True rankings, m <= 6.
    agent : int
        The misreporting agent.

    Returns
    -------
    list[int] | None
        The first profitable ranking in lexicographic order, or None.

    Raises
    ------
    CapacityError
        If m is above the brute-force limit.
    """
    if instance.m > MANIPULATION_MAX_ITEMS:
        raise CapacityError(f"manipulation search is limited to m <= {MANIPULATION_MAX_ITEMS}")
    truth: tuple[int, ...] = instance.prefs[agent]
    honest: list[Fraction] = probabilistic_serial(instance)[0][agent]
    report: tuple[int, ...]
    for report in itertools.permutations(range(instance.m)):
        if report == truth:
            continue
        row: list[Fraction] = probabilistic_serial(instance.with_ranking(agent, report))[0][agent]
        if strictly_sd_dominates(row, honest, truth):
            return list(report)
    return None
