"""p-colour orthogonal pairs of circulants on ``Z_{p^2}``.

Two bijections ``Z_p x Z_p -> Z_{p^2}`` are inverted to colour vertices:

``fhat(i, j) = ((alpha*(j - i) mod p) + p*(2i - j)) mod p^2`` with
``alpha`` in ``1 .. p-1``, used when ``|S| < (p-1)/2``; and
``f(i, j) = (i*p + j*alpha) mod p^2`` with ``alpha`` a unit, used when
``|S| < p`` and ``S`` contains no multiple of ``p``.

Either way the smallest admissible ``alpha`` wins.
"""

from __future__ import annotations

from math import gcd

from .colouring import Colouring, certify
from .errors import NoConstructionError
from .field import is_prime
from .graphs import CirculantSpec, circulant


def _check_prime(p):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def _check_residue(name, x, p):
    if not 0 <= x < p:
        raise ValueError(f"{name}={x} outside Z_{p}")


def fhat(p: int, alpha: int, i: int, j: int) -> int:
    _check_prime(p)
    if not 0 < alpha < p:
        raise ValueError(f"alpha={alpha} must lie in 1..{p - 1}")
    _check_residue("i", i, p)
    _check_residue("j", j, p)
    return ((alpha * (j - i)) % p + p * (2 * i - j)) % (p * p)


def _invert(p, mapping):
    n = p * p
    c1 = [None] * n
    c2 = [None] * n
    for i in range(p):
        for j in range(p):
            v = mapping(i, j)
            if c1[v] is not None:
                raise AssertionError(f"map is not injective at vertex {v}")
            c1[v], c2[v] = i, j
    return Colouring(tuple(c1), p), Colouring(tuple(c2), p)


def fhat_colouring_pair(p: int, alpha: int) -> tuple[Colouring, Colouring]:
    """Vertex ``v`` gets the unique ``(i, j)`` with ``fhat(i, j) = v``."""
    return _invert(p, lambda i, j: fhat(p, alpha, i, j))


def conflict_sets(p: int, alpha: int) -> tuple[frozenset, frozenset]:
    """Differences joining equal first colours (A) and equal second colours (B)."""
    _check_prime(p)
    if not 0 < alpha < p:
        raise ValueError(f"alpha={alpha} must lie in 1..{p - 1}")
    n = p * p
    a = frozenset(((alpha * x) % p - p * x) % n for x in range(1, p))
    b = frozenset(((-alpha * x) % p + 2 * p * x) % n for x in range(1, p))
    return a, b


def _spec_for(p, spec):
    if not isinstance(spec, CirculantSpec):
        spec = CirculantSpec(p * p, frozenset(spec))
    if spec.n != p * p:
        raise ValueError(f"circulant has order {spec.n}, expected p^2={p * p}")
    return spec


def colour_circulant_small_S(p: int, spec) -> tuple[Colouring, Colouring]:
    _check_prime(p)
    spec = _spec_for(p, spec)
    S = spec.generators
    if not len(S) < (p - 1) / 2:
        raise NoConstructionError(f"small-S construction needs |S| < (p-1)/2; |S|={len(S)}, p={p}")
    for alpha in range(1, p):
        a, b = conflict_sets(p, alpha)
        if not (S & a) and not (S & b):
            pair = fhat_colouring_pair(p, alpha)
            certify(circulant(spec), pair, optimal=True)
            return pair
    raise NoConstructionError(f"no alpha in 1..{p - 1} avoids S={sorted(S)}")


def f_map(p: int, alpha: int, i: int, j: int) -> int:
    _check_prime(p)
    if gcd(alpha, p * p) != 1:
        raise ValueError(f"alpha={alpha} is not a unit mod {p * p}")
    _check_residue("i", i, p)
    _check_residue("j", j, p)
    return (i * p + j * alpha) % (p * p)


def f_colouring_pair(p: int, alpha: int) -> tuple[Colouring, Colouring]:
    return _invert(p, lambda i, j: f_map(p, alpha, i, j))


def forbidden_units(p: int, S) -> frozenset:
    """Units ``alpha`` with ``x * alpha`` in ``S`` for some ``x`` in ``1..p-1``."""
    n = p * p
    out = set()
    for s in S:
        for x in range(1, p):
            out.add(s * pow(x, -1, n) % n)
    return frozenset(out)


def colour_circulant_no_p_multiples(p: int, spec) -> tuple[Colouring, Colouring]:
    _check_prime(p)
    spec = _spec_for(p, spec)
    S = spec.generators
    n = p * p
    if any(s % p == 0 for s in S):
        raise NoConstructionError(
            f"no-p-multiples construction needs S free of multiples of {p}; "
            f"S contains {sorted(s for s in S if s % p == 0)}"
        )
    if not len(S) < p:
        raise NoConstructionError(f"no-p-multiples construction needs |S| < p; |S|={len(S)}, p={p}")
    for alpha in range(1, n):
        if gcd(alpha, n) != 1:
            continue
        if all((x * alpha) % n not in S for x in range(1, p)):
            pair = f_colouring_pair(p, alpha)
            certify(circulant(spec), pair, optimal=True)
            return pair
    raise NoConstructionError(f"every unit alpha mod {n} hits S={sorted(S)}")


def colour_circulant_p2(p: int, spec) -> tuple[Colouring, Colouring]:
    """Prefer the no-p-multiples construction, fall back to the small-S one."""
    _check_prime(p)
    spec = _spec_for(p, spec)
    S = spec.generators
    reasons = []
    if any(s % p == 0 for s in S):
        reasons.append(f"S contains multiples of {p}")
    if not len(S) < p:
        reasons.append(f"|S|={len(S)} is not < p={p}")
    if not reasons:
        return colour_circulant_no_p_multiples(p, spec)
    if len(S) < (p - 1) / 2:
        return colour_circulant_small_S(p, spec)
    raise NoConstructionError(
        "no circulant construction applies: no-p-multiples needs |S| < p and no "
        f"multiples of p ({'; '.join(reasons)}); small-S needs |S| < (p-1)/2 = "
        f"{(p - 1) / 2:g} (|S|={len(S)})"
    )
