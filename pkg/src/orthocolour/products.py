"""Orthogonal colourings of Cartesian products and Hamming graphs.

If ``(f1, f2)`` is an orthogonal ``n``-colouring of ``G`` (``|V(G)| = n^2``)
and the ``m^2`` vertices of ``H`` are labelled bijectively by pairs
``(i, j)`` with ``m <= n``, then

    g1(v, w) = (f1(v) + j) mod n + i*n
    g2(v, w) = (f2(v) + i) mod n + j*n

is an orthogonal ``nm``-colouring of ``G □ H``. Iterating from an orthogonal
Latin square pair on ``H(2, q)`` covers ``H(2d, q)``, and from a stored
``H(4, 2)`` pair covers ``H(4d, 2)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .colouring import Colouring, OrthogonalSet, certify, verify_orthogonal_set
from .errors import NoConstructionError, VerificationError
from .field import make_field, prime_power
from .graphs import Graph, cartesian_product, hamming


@dataclass(frozen=True)
class LatinSquare:
    cells: tuple

    def __post_init__(self):
        cells = tuple(tuple(int(x) for x in row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        q = len(cells)
        symbols = set(range(q))
        for r, row in enumerate(cells):
            if len(row) != q or set(row) != symbols:
                raise ValueError(f"row {r} is not a permutation of 0..{q - 1}")
        for c in range(q):
            if {row[c] for row in cells} != symbols:
                raise ValueError(f"column {c} is not a permutation of 0..{q - 1}")

    @property
    def order(self) -> int:
        return len(self.cells)

    def __getitem__(self, ij):
        i, j = ij
        return self.cells[i][j]

    def to_dict(self) -> dict:
        return {"order": self.order, "cells": [list(r) for r in self.cells]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, doc: dict) -> "LatinSquare":
        sq = cls(tuple(tuple(r) for r in doc["cells"]))
        if doc.get("order", sq.order) != sq.order:
            raise ValueError(f"order field {doc['order']} disagrees with {sq.order} rows")
        return sq


def are_orthogonal_squares(l1: LatinSquare, l2: LatinSquare) -> bool:
    q = l1.order
    if l2.order != q:
        return False
    pairs = {(l1[i, j], l2[i, j]) for i in range(q) for j in range(q)}
    return len(pairs) == q * q


@dataclass(frozen=True)
class PairLabelling:
    """Bijection from the ``m^2`` vertices of a graph onto ``Z_m x Z_m``.

    The labels need not form a proper colouring.
    """

    m: int
    labels: tuple

    def __post_init__(self):
        labels = tuple((int(i), int(j)) for i, j in self.labels)
        object.__setattr__(self, "labels", labels)
        m = self.m
        expected = {(i, j) for i in range(m) for j in range(m)}
        if len(labels) != m * m or set(labels) != expected:
            raise ValueError(f"labels are not a bijection onto Z_{m} x Z_{m}")

    @classmethod
    def natural(cls, m: int) -> "PairLabelling":
        """``a*m + b -> (a, b)``, the coordinates of ``H(2, m)``."""
        return cls(m, tuple(divmod(v, m) for v in range(m * m)))

    @classmethod
    def from_pair(cls, c1: Colouring, c2: Colouring) -> "PairLabelling":
        return cls(c1.colour_count, tuple(zip(c1.colours, c2.colours)))


def compose_product(
    g: Graph, f_pair, h: Graph, h_labels: PairLabelling
) -> tuple[Colouring, Colouring]:
    f1, f2 = f_pair
    n = f1.colour_count
    m = h_labels.m
    if g.vertex_count != n * n:
        raise ValueError(f"G has {g.vertex_count} vertices, expected n^2={n * n}")
    if h.vertex_count != m * m:
        raise ValueError(f"H has {h.vertex_count} vertices, expected m^2={m * m}")
    if m > n:
        raise ValueError(f"composition needs m <= n, got m={m}, n={n}")
    try:
        ok = verify_orthogonal_set(g, OrthogonalSet((f1, f2)))
    except ValueError:
        ok = False
    if not ok:
        raise ValueError("input pair is not an orthogonal colouring of G")
    hv = h.vertex_count
    size = g.vertex_count * hv
    g1 = [0] * size
    g2 = [0] * size
    for v in range(g.vertex_count):
        a, b = f1[v], f2[v]
        for w, (i, j) in enumerate(h_labels.labels):
            g1[v * hv + w] = (a + j) % n + i * n
            g2[v * hv + w] = (b + i) % n + j * n
    pair = Colouring(tuple(g1), n * m), Colouring(tuple(g2), n * m)
    certify(cartesian_product(g, h), pair, optimal=True)
    return pair


def _latin_support(q: int) -> str | None:
    """Why ``q`` is unsupported, or None."""
    if q in (1, 2, 6):
        return f"no orthogonal Latin square pair of order {q} is constructed (q = 1, 2, 6)"
    if q % 4 == 2:
        return (
            f"order {q} = 2 mod 4 needs the Bose-Shrikhande-Parker constructions, "
            "which are out of scope"
        )
    return None


def _prime_power_factors(q: int) -> list[int]:
    out = []
    f = 2
    while f * f <= q:
        if q % f == 0:
            pp = 1
            while q % f == 0:
                q //= f
                pp *= f
            out.append(pp)
        f += 1
    if q > 1:
        out.append(q)
    return out


def _field_pair(q: int) -> tuple[LatinSquare, LatinSquare]:
    p, k = prime_power(q)
    f = make_field(p, k)
    el = f.elements()
    lam = el[2]
    l1 = tuple(tuple(int(el[i] + el[j]) for j in range(q)) for i in range(q))
    l2 = tuple(tuple(int(lam * el[i] + el[j]) for j in range(q)) for i in range(q))
    return LatinSquare(l1), LatinSquare(l2)


def _kronecker(a: LatinSquare, b: LatinSquare) -> LatinSquare:
    qa, qb = a.order, b.order
    q = qa * qb
    cells = tuple(
        tuple(a[i // qb, j // qb] * qb + b[i % qb, j % qb] for j in range(q))
        for i in range(q)
    )
    return LatinSquare(cells)


def latin_pair(q: int) -> tuple[LatinSquare, LatinSquare]:
    """Orthogonal Latin squares of order ``q``.

    Prime powers use ``i + j`` and ``lam*i + j`` over ``GF(q)``, ``lam`` the
    field element of index 2. Other orders multiply prime-power pairs
    (MacNeish), so every prime-power factor must be at least 3.
    """
    why = _latin_support(q)
    if why:
        raise NoConstructionError(why)
    parts = [_field_pair(pp) for pp in _prime_power_factors(q)]
    l1, l2 = parts[0]
    for a, b in parts[1:]:
        l1, l2 = _kronecker(l1, a), _kronecker(l2, b)
    if not are_orthogonal_squares(l1, l2):
        raise VerificationError(f"latin_pair({q}) produced non-orthogonal squares")
    return l1, l2


def mols_to_h2_colouring(l1: LatinSquare, l2: LatinSquare) -> tuple[Colouring, Colouring]:
    """Vertex ``a*q + b`` of ``H(2, q)`` gets ``(l1[a, b], l2[a, b])``."""
    q = l1.order
    if not are_orthogonal_squares(l1, l2):
        raise ValueError("Latin squares are not orthogonal")
    c1 = Colouring(tuple(l1[divmod(v, q)] for v in range(q * q)), q)
    c2 = Colouring(tuple(l2[divmod(v, q)] for v in range(q * q)), q)
    certify(hamming(2, q), (c1, c2), optimal=True)
    return c1, c2


def hamming_even_colouring(d: int, q: int) -> tuple[Colouring, Colouring]:
    """Orthogonal ``q^(d/2)``-colouring of ``H(d, q)`` for even ``d``."""
    if d < 2 or d % 2:
        raise NoConstructionError(f"hamming_even_colouring needs even d >= 2, got d={d}")
    h2 = hamming(2, q)
    pair = mols_to_h2_colouring(*latin_pair(q))
    labels = PairLabelling.natural(q)
    g = h2
    for _ in range(d // 2 - 1):
        pair = compose_product(g, pair, h2, labels)
        g = cartesian_product(g, h2)
    return pair


# found by the exact solver on hamming(4, 2) and frozen; vertex v is the
# binary word of v with the most significant bit first
H42_TABLE = (
    (0, 1, 1, 0, 1, 0, 0, 1, 2, 3, 3, 2, 3, 2, 2, 3),
    (0, 1, 2, 3, 3, 2, 1, 0, 1, 0, 3, 2, 2, 3, 0, 1),
)


def h42_colouring() -> tuple[Colouring, Colouring]:
    pair = Colouring(H42_TABLE[0], 4), Colouring(H42_TABLE[1], 4)
    certify(hamming(4, 2), pair, optimal=True)
    return pair


def hamming_4d_2_colouring(d: int) -> tuple[Colouring, Colouring]:
    """Orthogonal ``4^d``-colouring of ``H(4d, 2)``."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    h4 = hamming(4, 2)
    base = h42_colouring()
    labels = PairLabelling.from_pair(*base)
    pair, g = base, h4
    for _ in range(d - 1):
        pair = compose_product(g, pair, h4, labels)
        g = cartesian_product(g, h4)
    return pair

