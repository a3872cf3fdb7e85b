"""Orthogonal colourings of cycles ``C_n``.

For ``n > 4`` the pair uses ``N = ceil(sqrt(n))`` colours:

* base pair ``c1(i) = i mod N``, ``c2(i) = (i + i // N) mod N``,
  proper unless the last vertex clashes with vertex 0;
* patched pair, which recolours only ``v_{n-1}``;
* hand tables for ``n`` in ``{3, 4, 6, 7, 8, 11, 13, 14}``.

When ``N = p`` is prime, ``c_k(i) = (i + k * (i // p)) mod p`` yields at
least ``p - 2`` mutually orthogonal proper ``p``-colourings.
"""

from __future__ import annotations

from .colouring import Colouring, OrthogonalSet, certify, orthogonal_lower_bound
from .errors import NoConstructionError, VerificationError
from .field import is_prime
from .graphs import cycle

# colour pairs in cycle order v_0, v_1, ...
SMALL_CYCLE_TABLES: dict[int, tuple[tuple[int, int], ...]] = {
    3: ((0, 0), (1, 1), (2, 2)),
    # found by the exact solver; no drawn table exists for C_4
    4: ((0, 0), (1, 1), (0, 2), (2, 1)),
    6: ((0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (2, 1)),
    7: ((0, 0), (1, 1), (2, 2), (0, 1), (2, 0), (1, 2), (2, 1)),
    8: ((0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (2, 0), (0, 2), (2, 1)),
    11: (
        (0, 0), (1, 1), (2, 2), (3, 3), (0, 1), (1, 2),
        (2, 3), (3, 0), (0, 2), (1, 3), (3, 1),
    ),
    13: (
        (0, 0), (1, 1), (2, 2), (3, 3), (0, 1), (1, 2), (2, 3),
        (3, 0), (0, 2), (1, 3), (3, 1), (2, 0), (3, 2),
    ),
    14: (
        (0, 0), (1, 1), (2, 2), (3, 3), (0, 1), (1, 2), (2, 3),
        (3, 0), (0, 2), (1, 3), (2, 0), (3, 1), (0, 3), (2, 1),
    ),
}


def _pair(c1, c2, t):
    return Colouring(tuple(c1), t), Colouring(tuple(c2), t)


def _base_lists(n, N):
    return [i % N for i in range(n)], [(i + i // N) % N for i in range(n)]


def base_pair_applies(n: int) -> bool:
    N = orthogonal_lower_bound(n)
    return n > 4 and (n - 1) % N != 0 and (n - 1 + (n - 1) // N) % N != 0


def cycle_base_pair(n: int) -> tuple[Colouring, Colouring]:
    if not base_pair_applies(n):
        raise NoConstructionError(
            f"base pair needs n > 4 with ceil(sqrt(n)) dividing neither n-1 nor "
            f"n-1+floor((n-1)/ceil(sqrt(n))); n={n} fails"
        )
    N = orthogonal_lower_bound(n)
    c1, c2 = _base_lists(n, N)
    certify(cycle(n), _pair(c1, c2, N), optimal=True)
    return _pair(c1, c2, N)


def patch_case(n: int) -> int | None:
    """Which of the four patch cases ``n`` falls in, or None if none does."""
    N = orthogonal_lower_bound(n)
    if (n - 1) % N == 0:
        return 3 if (n + n // N) % N == 0 else 1
    if (n - 1 + (n - 1) // N) % N == 0:
        return 4 if n % N == 0 else 2
    return None


def cycle_patched_pair(n: int) -> tuple[Colouring, Colouring]:
    """Base pair with ``v_{n-1}`` recoloured to break the wrap-around clash.

    Cases 1 and 2 give it the base pair formulas evaluated at ``n``;
    cases 3 and 4 evaluate them at ``n + 1``.
    """
    case = patch_case(n)
    if n <= 16 or case is None:
        raise NoConstructionError(
            f"patched pair needs n > 16 with ceil(sqrt(n)) dividing n-1 or "
            f"n-1+floor((n-1)/ceil(sqrt(n))); n={n} fails"
        )
    N = orthogonal_lower_bound(n)
    c1, c2 = _base_lists(n, N)
    x = n if case in (1, 2) else n + 1
    c1[-1] = x % N
    c2[-1] = (x + x // N) % N
    certify(cycle(n), _pair(c1, c2, N), optimal=True)
    return _pair(c1, c2, N)


def cycle_small_pair(n: int) -> tuple[Colouring, Colouring]:
    if n not in SMALL_CYCLE_TABLES:
        raise NoConstructionError(
            f"no stored table for C_{n}; tables exist for {sorted(SMALL_CYCLE_TABLES)}"
        )
    table = SMALL_CYCLE_TABLES[n]
    t = 3 if n <= 4 else orthogonal_lower_bound(n)
    c1, c2 = zip(*table)
    certify(cycle(n), _pair(c1, c2, t))
    return _pair(c1, c2, t)


def orthogonal_colouring_cycle(n: int) -> tuple[Colouring, Colouring]:
    """Orthogonal pair of ``C_n`` with ``ceil(sqrt(n))`` colours (3 for ``n <= 4``)."""
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    if n in SMALL_CYCLE_TABLES:
        pair = cycle_small_pair(n)
    elif base_pair_applies(n):
        pair = cycle_base_pair(n)
    else:
        pair = cycle_patched_pair(n)
    certify(cycle(n), pair, optimal=n > 4)
    return pair


def k_orthogonal_candidates(n: int, p: int) -> list[Colouring]:
    """``c_k(i) = (i + k * (i // p)) mod p`` for ``k = 0 .. p-1``, unfiltered."""
    return [
        Colouring(tuple((i + k * (i // p)) % p for i in range(n)), p) for k in range(p)
    ]


def k_orthogonal_cycle(n: int) -> OrthogonalSet:
    """At least ``p - 2`` mutually orthogonal proper ``p``-colourings of ``C_n``.

    Requires ``p = ceil(sqrt(n))`` prime and ``n > 4``. Candidates that give
    ``v_{n-1}`` colour 0 clash with ``v_0``. The ``k = p - 1`` candidate steps
    by ``1 + k = p`` across each block boundary, so it is never proper once
    ``n > p``; it is dropped by the same properness filter.
    """
    p = orthogonal_lower_bound(n)
    if n <= 4 or not is_prime(p):
        raise NoConstructionError(
            f"k-orthogonal cycle family needs n > 4 and ceil(sqrt(n)) prime; "
            f"n={n} gives {p}"
        )
    g = cycle(n)
    keep = []
    for c in k_orthogonal_candidates(n, p):
        if c[n - 1] == 0:
            continue
        if all(c[u] != c[v] for u, v in g.edges):
            keep.append(c)
    s = certify(g, keep, optimal=True)
    if s.k < p - 2:
        raise VerificationError(f"only {s.k} survivors for n={n}, expected >= {p - 2}")
    return s
