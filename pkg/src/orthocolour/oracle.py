"""Exhaustive backtracking for k mutually orthogonal proper t-colourings.

The solver is deliberately naive and shares nothing with the construction
modules except the verifier. Every vertex, in index order, receives a
k-tuple of colours. A branch is cut when an edge repeats a colour in some
coordinate or when some pair of coordinates repeats a colour pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product

from .colouring import Colouring, OrthogonalSet, certify, orthogonal_lower_bound
from .errors import BudgetExceededError
from .graphs import Graph

DEFAULT_NODE_LIMIT = 10 ** 8


@dataclass(frozen=True)
class SearchConfig:
    k: int = 2
    t_max: int = 64
    node_limit: int = DEFAULT_NODE_LIMIT
    symmetry_breaking: bool = True

    def __post_init__(self):
        if self.k < 1 or self.t_max < 1 or self.node_limit < 1:
            raise ValueError(f"invalid search config {self}")


class Status(Enum):
    WITNESS = "witness"
    INFEASIBLE = "infeasible"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchResult:
    status: Status
    t: int
    k: int
    nodes: int
    witness: OrthogonalSet | None = None

    def __bool__(self):
        return self.status is Status.WITNESS


class _OutOfBudget(Exception):
    pass


def feasible(g: Graph, k: int, t: int, cfg: SearchConfig | None = None) -> SearchResult:
    """Decide whether ``g`` has ``k`` mutually orthogonal proper ``t``-colourings."""
    cfg = cfg or SearchConfig(k=k)
    n = g.vertex_count
    if n == 0:
        return SearchResult(Status.INFEASIBLE, t, k, 0)
    # earlier neighbours only: the search fills vertices in index order
    back = [tuple(u for u in g.neighbours(v) if u < v) for v in range(n)]
    coord_pairs = list(combinations(range(k), 2))
    used = [[False] * (t * t) for _ in coord_pairs]
    assign: list[tuple[int, ...] | None] = [None] * n
    tuples = list(product(range(t), repeat=k))
    nodes = 0

    def options(v, max0):
        for tup in tuples:
            if cfg.symmetry_breaking:
                if v == 0 and any(tup):
                    continue
                # first-use order on coordinate 0
                if tup[0] > max0 + 1:
                    continue
            yield tup

    def place(v, max0):
        nonlocal nodes
        if v == n:
            return True
        for tup in options(v, max0):
            nodes += 1
            if nodes > cfg.node_limit:
                raise _OutOfBudget
            if any(assign[u][c] == tup[c] for u in back[v] for c in range(k)):
                continue
            slots = [tup[a] * t + tup[b] for a, b in coord_pairs]
            if any(used[i][s] for i, s in enumerate(slots)):
                continue
            for i, s in enumerate(slots):
                used[i][s] = True
            assign[v] = tup
            if place(v + 1, max(max0, tup[0])):
                return True
            assign[v] = None
            for i, s in enumerate(slots):
                used[i][s] = False
        return False

    try:
        found = place(0, -1)
    except _OutOfBudget:
        return SearchResult(Status.BUDGET_EXCEEDED, t, k, nodes)
    if not found:
        return SearchResult(Status.INFEASIBLE, t, k, nodes)
    cols = [Colouring(tuple(assign[v][c] for v in range(n)), t) for c in range(k)]
    return SearchResult(Status.WITNESS, t, k, nodes, certify(g, cols))


def exact_orthochromatic(g: Graph, k: int = 2, cfg: SearchConfig | None = None) -> int:
    """Smallest ``t`` admitting a k-orthogonal colouring of ``g``.

    Raises :class:`BudgetExceededError` if some ``t`` cannot be decided.
    """
    cfg = cfg or SearchConfig(k=k)
    if g.vertex_count < 1:
        raise ValueError("exact_orthochromatic needs a non-empty graph")
    start = orthogonal_lower_bound(g.vertex_count) if k >= 2 else 1
    last = None
    spent = 0
    for t in range(start, cfg.t_max + 1):
        res = feasible(g, k, t, cfg)
        spent += res.nodes
        if res.status is Status.WITNESS:
            return t
        if res.status is Status.BUDGET_EXCEEDED:
            raise BudgetExceededError(
                f"node budget {cfg.node_limit} exhausted at t={t}", last, spent
            )
        last = t
    raise BudgetExceededError(f"no witness up to t_max={cfg.t_max}", last, spent)
