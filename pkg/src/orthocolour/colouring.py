"""Colourings, orthogonality, and the verifier every construction goes through.

Two colourings are orthogonal when ``v -> (c1[v], c2[v])`` is injective.
A k-orthogonal colouring is a list of k pairwise orthogonal proper colourings
sharing one colour count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import isqrt
from typing import Sequence

from .errors import SizeMismatchError, VerificationError
from .graphs import Graph


@dataclass(frozen=True)
class Colouring:
    colours: tuple
    colour_count: int

    def __post_init__(self):
        cols = tuple(int(c) for c in self.colours)
        object.__setattr__(self, "colours", cols)
        t = self.colour_count
        if t < 1:
            raise ValueError(f"colour_count must be positive, got {t}")
        for v, c in enumerate(cols):
            if not 0 <= c < t:
                raise ValueError(f"vertex {v} has colour {c} outside 0..{t - 1}")

    @property
    def graph_vertex_count(self) -> int:
        return len(self.colours)

    def __len__(self):
        return len(self.colours)

    def __getitem__(self, v):
        return self.colours[v]

    def __iter__(self):
        return iter(self.colours)

    def to_dict(self) -> dict:
        return {"colour_count": self.colour_count, "colours": list(self.colours)}

    @classmethod
    def from_dict(cls, doc: dict) -> "Colouring":
        return cls(tuple(doc["colours"]), doc["colour_count"])


def _check_sizes(*counts: int) -> None:
    if len(set(counts)) > 1:
        raise SizeMismatchError(f"vertex counts disagree: {sorted(set(counts))}")


def is_proper(g: Graph, c: Colouring) -> bool:
    _check_sizes(g.vertex_count, len(c))
    cols = c.colours
    return all(cols[u] != cols[v] for u, v in g.edges)


def are_orthogonal(c1: Colouring, c2: Colouring) -> bool:
    _check_sizes(len(c1), len(c2))
    seen = set()
    for pair in zip(c1.colours, c2.colours):
        if pair in seen:
            return False
        seen.add(pair)
    return True


@dataclass(frozen=True)
class OrthogonalSet:
    """Mutually orthogonal colourings; validated on construction.

    Properness depends on a graph and is checked by
    :func:`verify_orthogonal_set`, not here.
    """

    colourings: tuple

    def __post_init__(self):
        cs = tuple(self.colourings)
        object.__setattr__(self, "colourings", cs)
        if not cs:
            raise ValueError("an orthogonal set needs at least one colouring")
        _check_sizes(*(len(c) for c in cs))
        if len({c.colour_count for c in cs}) > 1:
            raise ValueError("members use different colour counts")
        for (a, x), (b, y) in combinations(enumerate(cs), 2):
            if not are_orthogonal(x, y):
                raise ValueError(f"colourings {a} and {b} are not orthogonal")

    @classmethod
    def of(cls, colour_lists: Sequence[Sequence[int]], colour_count: int) -> "OrthogonalSet":
        return cls(tuple(Colouring(tuple(c), colour_count) for c in colour_lists))

    @property
    def k(self) -> int:
        return len(self.colourings)

    @property
    def colour_count(self) -> int:
        return self.colourings[0].colour_count

    @property
    def vertex_count(self) -> int:
        return len(self.colourings[0])

    def __len__(self):
        return len(self.colourings)

    def __getitem__(self, i):
        return self.colourings[i]

    def __iter__(self):
        return iter(self.colourings)

    def pair(self) -> tuple[Colouring, Colouring]:
        if self.k != 2:
            raise ValueError(f"expected a pair, set has {self.k} members")
        return self.colourings[0], self.colourings[1]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "colour_count": self.colour_count,
            "colourings": [list(c.colours) for c in self.colourings],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, doc: dict) -> "OrthogonalSet":
        if "colourings" not in doc:
            return cls((Colouring.from_dict(doc),))
        t = doc["colour_count"]
        s = cls.of(doc["colourings"], t)
        if "k" in doc and doc["k"] != s.k:
            raise ValueError(f"document says k={doc['k']} but lists {s.k} colourings")
        return s


def orthogonal_lower_bound(vertex_count: int) -> int:
    """``ceil(sqrt(vertex_count))`` in exact integer arithmetic."""
    if vertex_count < 1:
        raise ValueError(f"vertex_count must be >= 1, got {vertex_count}")
    r = isqrt(vertex_count)
    return r if r * r == vertex_count else r + 1


def find_violation(g: Graph, colourings: Sequence[Colouring]) -> str | None:
    """First broken constraint as a human-readable string, or None."""
    _check_sizes(g.vertex_count, *(len(c) for c in colourings))
    for idx, c in enumerate(colourings):
        for u, v in sorted(g.edges):
            if c[u] == c[v]:
                return f"colouring {idx}: edge ({u}, {v}) has both ends coloured {c[u]}"
    for (a, x), (b, y) in combinations(enumerate(colourings), 2):
        first = {}
        for v, pair in enumerate(zip(x.colours, y.colours)):
            if pair in first:
                return (
                    f"colourings {a},{b}: vertices {first[pair]} and {v} "
                    f"share colour pair {pair}"
                )
            first[pair] = v
    return None


def verify_orthogonal_set(g: Graph, s: OrthogonalSet) -> bool:
    """True iff every member is proper on ``g`` (orthogonality is an invariant of ``s``)."""
    _check_sizes(g.vertex_count, s.vertex_count)
    ok = all(is_proper(g, c) for c in s) and all(
        are_orthogonal(x, y) for x, y in combinations(s.colourings, 2)
    )
    if ok and s.k >= 2 and s.colour_count ** 2 < g.vertex_count:
        # injective pairs into a t x t grid force t^2 >= n
        raise VerificationError(
            f"{s.colour_count}^2 < {g.vertex_count}: pair-injectivity check is broken"
        )
    return ok


def certify(g: Graph, colourings: Sequence[Colouring], optimal: bool = False) -> OrthogonalSet:
    """Wrap construction output, raising :class:`VerificationError` if invalid.

    With ``optimal=True`` the colour count must also equal the
    ``ceil(sqrt(n))`` lower bound.
    """
    try:
        s = OrthogonalSet(tuple(colourings))
    except ValueError as exc:
        raise VerificationError(str(exc)) from None
    if not verify_orthogonal_set(g, s):
        raise VerificationError(find_violation(g, s.colourings) or "verification failed")
    if optimal and s.colour_count != orthogonal_lower_bound(g.vertex_count):
        raise VerificationError(
            f"claimed optimal but uses {s.colour_count} colours, bound is "
            f"{orthogonal_lower_bound(g.vertex_count)}"
        )
    return s
