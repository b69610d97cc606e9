"""Deciding whether a line hypergraph admits a coloring with no
monochromatic edge.

`search_coloring` is an exact backtracker with forward checking: when an
edge has all but one vertex assigned a single common color, that color
is pruned from the last vertex.  `brute_force_coloring` is the
independent oracle: it walks assignments in lexicographic order (index
order, colors ascending), abandoning a prefix only when some fully
assigned edge is already monochromatic, so it visits every viable
assignment and returns the lexicographically first witness.
"""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass

from mpmath import mpf

from .curve import PointConfiguration
from .geometry import LineHypergraph, enumerate_lines
from .groupmodel import Coloring

DEFAULT_NODE_BUDGET = 10_000_000
BRUTE_FORCE_GUARD = 10 ** 8


class SearchBudgetError(RuntimeError):
    """Requested exhaustive search exceeds the hard enumeration guard."""


class SearchStatus(enum.Enum):
    SATISFIABLE = "SATISFIABLE"
    UNSATISFIABLE = "UNSATISFIABLE"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    witness: Coloring | None
    nodes: int
    elapsed: float

    def __post_init__(self) -> None:
        if (self.status is SearchStatus.SATISFIABLE) != (self.witness is not None):
            raise ValueError("exactly the satisfiable outcomes carry a witness")


class _BudgetHit(Exception):
    pass


def _empty_outcome(k: int, t0: float) -> SearchOutcome:
    witness = Coloring(max(k, 1), ())
    return SearchOutcome(SearchStatus.SATISFIABLE, witness, 0,
                         time.perf_counter() - t0)


def _check_colors(k: int, vertex_count: int) -> None:
    if k < 1 and vertex_count > 0:
        raise ValueError(f"need at least one color for {vertex_count} vertices")


def search_coloring(hypergraph: LineHypergraph, k: int,
                    budget: int = DEFAULT_NODE_BUDGET) -> SearchOutcome:
    """Backtracking search for a k-coloring with no monochromatic edge.

    Vertices are processed by descending degree (ties by index) and
    colors tried in ascending order, so outcomes are deterministic.
    UNSATISFIABLE is only reported after exhausting the search space;
    running out of node budget yields BUDGET_EXCEEDED instead.
    """
    t0 = time.perf_counter()
    n = hypergraph.vertex_count
    _check_colors(k, n)
    if n == 0:
        return _empty_outcome(k, t0)

    edges = hypergraph.edges
    incident: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in edges:
        for v in e:
            incident[v].append(e)
    order = sorted(range(n), key=lambda v: (-len(incident[v]), v))

    assignment: list[int | None] = [None] * n
    domains: list[set[int]] = [set(range(k)) for _ in range(n)]
    nodes = 0

    def propagate(v: int, color: int) -> tuple[bool, list[tuple[int, int]]]:
        """Forward-check the edges incident to v; returns (ok, pruning log)."""
        pruned: list[tuple[int, int]] = []
        for e in incident[v]:
            last_free = None
            shared: int | None = color
            for u in e:
                cu = assignment[u]
                if cu is None:
                    if last_free is not None:
                        shared = None     # two open vertices: no constraint yet
                        break
                    last_free = u
                elif cu != color:
                    shared = None
                    break
            if shared is None:
                continue
            if last_free is None:
                return False, pruned      # edge completed monochromatic
            if shared in domains[last_free]:
                domains[last_free].discard(shared)
                pruned.append((last_free, shared))
                if not domains[last_free]:
                    return False, pruned
        return True, pruned

    def undo(v: int, pruned: list[tuple[int, int]]) -> None:
        assignment[v] = None
        for u, color in pruned:
            domains[u].add(color)

    def extend(depth: int) -> bool:
        nonlocal nodes
        if depth == n:
            return True
        v = order[depth]
        for color in sorted(domains[v]):
            nodes += 1
            if nodes > budget:
                raise _BudgetHit
            assignment[v] = color
            ok, pruned = propagate(v, color)
            if ok and extend(depth + 1):
                return True
            undo(v, pruned)
        return False

    try:
        found = extend(0)
    except _BudgetHit:
        return SearchOutcome(SearchStatus.BUDGET_EXCEEDED, None, nodes,
                             time.perf_counter() - t0)
    if not found:
        return SearchOutcome(SearchStatus.UNSATISFIABLE, None, nodes,
                             time.perf_counter() - t0)
    witness = Coloring(k, tuple(assignment))
    if hypergraph.monochromatic_edges(witness):
        raise AssertionError("solver produced an invalid witness")
    return SearchOutcome(SearchStatus.SATISFIABLE, witness, nodes,
                         time.perf_counter() - t0)


def brute_force_coloring(hypergraph: LineHypergraph, k: int) -> SearchOutcome:
    """Exhaustive oracle over all k^n assignments in lexicographic order.

    Prefixes are abandoned exactly when a fully assigned edge is already
    monochromatic, so the first assignment reached is the
    lexicographically first valid one.  Guarded to k^n <= 1e8.
    """
    t0 = time.perf_counter()
    n = hypergraph.vertex_count
    _check_colors(k, n)
    if n == 0:
        return _empty_outcome(k, t0)
    if k ** n > BRUTE_FORCE_GUARD:
        raise SearchBudgetError(
            f"{k}^{n} assignments exceed the {BRUTE_FORCE_GUARD:.0e} guard")

    closing: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in hypergraph.edges:
        closing[e[-1]].append(e)

    assignment = [0] * n
    nodes = 0

    def descend(v: int) -> bool:
        nonlocal nodes
        if v == n:
            return True
        for color in range(k):
            nodes += 1
            assignment[v] = color
            if any(all(assignment[u] == color for u in e) for e in closing[v]):
                continue
            if descend(v + 1):
                return True
        return False

    if descend(0):
        witness = Coloring(k, tuple(assignment))
        return SearchOutcome(SearchStatus.SATISFIABLE, witness, nodes,
                             time.perf_counter() - t0)
    return SearchOutcome(SearchStatus.UNSATISFIABLE, None, nodes,
                         time.perf_counter() - t0)


@dataclass(frozen=True)
class InstanceReport:
    """How a configuration fares against a collinearity bound and a color
    budget: either some line exceeds the bound (search skipped), or the
    search outcome says whether k colors avoid monochromatic lines."""

    colors: int
    line_bound: int
    max_line_size: int
    search: SearchOutcome | None

    @property
    def exceeds_line_bound(self) -> bool:
        return self.max_line_size > self.line_bound

    @property
    def colorable(self) -> bool:
        return (self.search is not None
                and self.search.status is SearchStatus.SATISFIABLE)


def check_instance(config: PointConfiguration, k: int, line_bound: int,
                   tol: mpf | None = None,
                   budget: int = DEFAULT_NODE_BUDGET) -> InstanceReport:
    """Report whether `config` has more than `line_bound` collinear points,
    and if not, whether k colors suffice to avoid monochromatic lines."""
    if k < 1:
        raise ValueError(f"need at least one color, got k={k}")
    if line_bound < 2:
        raise ValueError(f"collinearity bound must be at least 2, got {line_bound}")
    hypergraph = enumerate_lines(config, tol)
    if hypergraph.edges:
        largest = max(len(e) for e in hypergraph.edges)
    else:
        largest = len(config)
    if largest > line_bound:
        return InstanceReport(k, line_bound, largest, None)
    outcome = search_coloring(hypergraph, k, budget)
    return InstanceReport(k, line_bound, largest, outcome)
