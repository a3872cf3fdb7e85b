"""Coset colourings of Paley graphs ``QR(p^{2r})``.

With ``alpha`` primitive in ``GF(p^{2r})`` and ``H*`` the multiplicative
subgroup of order ``p^r - 1`` (powers of ``alpha^(p^r + 1)``), each
``H_i = {0} ∪ alpha^(2i) H*`` is an additive subgroup of size ``p^r`` made
of residues. Its cosets are cliques of ``QR(q)``, hence colour classes of the
complement. Distinct ``H_i`` meet only in 0, so their coset partitions are
mutually orthogonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .colouring import Colouring, OrthogonalSet, certify, is_proper
from .errors import VerificationError
from .field import FiniteField, is_prime, make_field, primitive_element, quadratic_residues
from .graphs import Graph, complement


@dataclass(frozen=True)
class PaleySpec:
    p: int
    r: int = 1

    def __post_init__(self):
        if self.p == 2 or not is_prime(self.p):
            raise ValueError(f"Paley construction needs an odd prime, got p={self.p}")
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")

    @property
    def q(self) -> int:
        return self.p ** (2 * self.r)

    @property
    def root(self) -> int:
        """``p^r``, the colour count."""
        return self.p ** self.r

    @cached_property
    def field(self) -> FiniteField:
        return make_field(self.p, 2 * self.r)

    @cached_property
    def residue_indices(self) -> frozenset:
        return frozenset(int(x) for x in quadratic_residues(self.field))


def paley_graph(spec: PaleySpec) -> Graph:
    f = spec.field
    elems = f.elements()
    res = spec.residue_indices
    edges = set()
    for u in range(f.q):
        for v in range(u + 1, f.q):
            if int(elems[u] - elems[v]) in res:
                edges.add((u, v))
    return Graph(f.q, frozenset(edges))


def subgroup_Hi(spec: PaleySpec, i: int) -> frozenset:
    """``{0} ∪ {alpha^(m(p^r+1) + 2i) : 0 <= m < p^r - 1}``."""
    half = (spec.root + 1) // 2
    if not 0 <= i < half:
        raise ValueError(f"i={i} outside 0..{half - 1}")
    f = spec.field
    alpha = primitive_element(f)
    step = alpha ** (spec.root + 1)
    x = alpha ** (2 * i)
    out = {f.zero}
    for _ in range(spec.root - 1):
        out.add(x)
        x = x * step
    return frozenset(out)


def cosets(spec: PaleySpec, subgroup) -> list[frozenset]:
    """Additive cosets in order of their smallest canonical index."""
    f = spec.field
    seen = set()
    out = []
    for x in f.elements():
        if x in seen:
            continue
        coset = frozenset(x + h for h in subgroup)
        seen |= coset
        out.append(coset)
    return out


def coset_colouring(spec: PaleySpec, i: int) -> Colouring:
    colours = [0] * spec.q
    for j, coset in enumerate(cosets(spec, subgroup_Hi(spec, i))):
        for x in coset:
            colours[int(x)] = j
    return Colouring(tuple(colours), spec.root)


def paley_orthogonal_set(spec: PaleySpec) -> OrthogonalSet:
    """``(p^r + 1)/2`` orthogonal ``p^r``-colourings of the complement of ``QR(q)``."""
    cols = [coset_colouring(spec, i) for i in range((spec.root + 1) // 2)]
    return certify(complement(paley_graph(spec)), cols, optimal=True)


def smallest_non_residue(spec: PaleySpec):
    res = spec.residue_indices
    for x in spec.field.elements():
        if x and int(x) not in res:
            return x
    raise AssertionError("field has no non-residue")


def transfer_to_paley(spec: PaleySpec, s: OrthogonalSet) -> OrthogonalSet:
    """Move complement colourings onto ``QR(q)`` via ``x -> beta * x``.

    ``beta`` is the smallest non-residue, so multiplication by it swaps
    residue and non-residue differences. Each colouring ``c`` becomes
    ``c o sigma^-1``.
    """
    qr = paley_graph(spec)
    comp = complement(qr)
    if not all(is_proper(comp, c) for c in s):
        raise ValueError("input set is not proper on the complement of QR(q)")
    f = spec.field
    beta = smallest_non_residue(spec)
    sigma = [int(beta * x) for x in f.elements()]
    if any(not comp.has_edge(sigma[u], sigma[v]) for u, v in qr.edges):
        raise VerificationError("multiplication by a non-residue is not an isomorphism")
    inv = [0] * f.q
    for x, y in enumerate(sigma):
        inv[y] = x
    moved = [Colouring(tuple(c[inv[v]] for v in range(f.q)), c.colour_count) for c in s]
    return certify(qr, moved, optimal=True)
