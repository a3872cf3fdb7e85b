"""Simple undirected graphs and the Cayley families coloured by this package.

Vertices are the integers ``0 .. vertex_count - 1``. Edges are stored as
``(u, v)`` pairs with ``u < v``. Products use the row-major encoding
``(a, b) -> a * |V(H)| + b``, so ``hamming(d, q)`` labels a word
``(x_0, ..., x_{d-1})`` by its base-``q`` value with ``x_0`` most significant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise ValueError(f"vertex_count must be non-negative, got {n}")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            canon.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(canon))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    # serialization

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "edges": [list(e) for e in self.sorted_edges()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, doc: dict) -> "Graph":
        try:
            n = doc["vertex_count"]
            edges = [tuple(e) for e in doc["edges"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed graph document: {exc}") from None
        if not isinstance(n, int) or any(
            len(e) != 2 or not all(isinstance(x, int) for x in e) for e in edges
        ):
            raise ValueError("malformed graph document: non-integer entries")
        return cls(n, frozenset(edges))

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  v{v};" for v in range(self.vertex_count)]
        lines += [f"  v{u} -- v{v};" for u, v in self.sorted_edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CirculantSpec:
    """Connection set ``S`` of a Cayley graph on the cyclic group of order ``n``."""

    n: int
    generators: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ValueError(f"group order must be positive, got {n}")
        gens = frozenset(int(s) for s in self.generators)
        object.__setattr__(self, "generators", gens)
        if n <= 2 and gens:
            raise ValueError(f"Z_{n} admits only the empty generating set here")
        for s in gens:
            if not 0 < s < n:
                raise ValueError(f"generator {s} outside 1..{n - 1}")
            if (n - s) % n not in gens:
                raise ValueError(f"generator set not inverse-closed: {s} lacks {n - s}")


def circulant(spec: CirculantSpec | int, generators: Iterable[int] = ()) -> Graph:
    """Cayley graph of ``Z_n``: ``u ~ v`` iff ``(u - v) mod n`` is a generator.

    Accepts either a :class:`CirculantSpec` or ``(n, generators)``.
    """
    if not isinstance(spec, CirculantSpec):
        spec = CirculantSpec(spec, frozenset(generators))
    n = spec.n
    edges = {(u, (u + s) % n) for u in range(n) for s in spec.generators}
    return Graph(n, frozenset(edges))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return circulant(n, {1, n - 1})


def complete(q: int) -> Graph:
    if q < 1:
        raise ValueError(f"complete graph needs q >= 1, got {q}")
    return Graph(q, frozenset(combinations(range(q), 2)))


def empty(n: int) -> Graph:
    return Graph(n)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``G □ H`` with vertex ``(a, b)`` encoded as ``a * |V(H)| + b``."""
    m = h.vertex_count
    edges = set()
    for a in range(g.vertex_count):
        for b1, b2 in h.edges:
            edges.add((a * m + b1, a * m + b2))
    for a1, a2 in g.edges:
        for b in range(m):
            edges.add((a1 * m + b, a2 * m + b))
    return Graph(g.vertex_count * m, frozenset(edges))


def complement(g: Graph) -> Graph:
    edges = {e for e in combinations(range(g.vertex_count), 2) if e not in g.edges}
    return Graph(g.vertex_count, frozenset(edges))


def hamming(d: int, q: int) -> Graph:
    """``H(d, q)``: the left-folded product of ``d`` copies of ``K_q``."""
    if d < 1 or q < 1:
        raise ValueError(f"hamming needs d >= 1 and q >= 1, got d={d}, q={q}")
    kq = complete(q)
    g = kq
    for _ in range(d - 1):
        g = cartesian_product(g, kq)
    return g
