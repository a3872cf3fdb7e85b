"""Arithmetic in GF(p^k) as polynomials over Z_p modulo a monic irreducible.

Polynomials are coefficient tuples, lowest degree first. An element's
canonical index is ``sum(c_i * p**i)``; every "smallest" choice in this
package (modulus, primitive element, coset representatives) uses it.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, k)`` with ``q == p**k``, or None if ``q`` is not a prime power."""
    fs = prime_factors(q) if q > 1 else []
    if len(fs) != 1:
        return None
    p, k = fs[0], 0
    while q > 1:
        q //= p
        k += 1
    return p, k


# polynomial helpers over Z_p

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a, b, p: int) -> list[int]:
    """Remainder of ``a`` divided by ``b`` over Z_p (``b`` non-zero)."""
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        a = _trim(a)
    return a


def poly_mul(a, b, p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def monic_polys(p: int, degree: int):
    """All monic polynomials of a degree, in low-degree-first lexicographic order."""
    for low in product(range(p), repeat=degree):
        yield tuple(low) + (1,)


def is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree ``<= deg/2``."""
    poly = _trim(poly)
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for f in monic_polys(p, d):
            if not poly_mod(poly, f, p):
                return False
    return True


class FiniteField:
    """GF(p^k). Build through :func:`make_field`."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k}")
        modulus = tuple(modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {k}")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over Z_{p}")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.q = p ** k

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __len__(self):
        return self.q

    def element(self, index: int) -> "FieldElement":
        if not 0 <= index < self.q:
            raise ValueError(f"index {index} outside GF({self.q})")
        coeffs = []
        for _ in range(self.k):
            index, c = divmod(index, self.p)
            coeffs.append(c)
        return FieldElement(tuple(coeffs), self)

    def from_coefficients(self, coeffs) -> "FieldElement":
        red = poly_mod([c % self.p for c in coeffs], self.modulus, self.p)
        return FieldElement(tuple(red + [0] * (self.k - len(red))), self)

    def elements(self) -> list["FieldElement"]:
        """All elements in ascending canonical index."""
        return [self.element(i) for i in range(self.q)]

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    def to_dict(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}


class FieldElement:
    __slots__ = ("coefficients", "field")

    def __init__(self, coefficients: tuple[int, ...], field: FiniteField):
        self.coefficients = coefficients
        self.field = field

    def __int__(self):
        p = self.field.p
        return sum(c * p ** i for i, c in enumerate(self.coefficients))

    __index__ = __int__

    def __repr__(self):
        return f"{self.field!r}[{int(self)}]"

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash((self.coefficients, self.field))

    def __bool__(self):
        return any(self.coefficients)

    def _same(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise ValueError(f"mixing elements of {self.field!r} and {other.field!r}")
        return other

    def __add__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FieldElement(
            tuple((a + b) % p for a, b in zip(self.coefficients, other.coefficients)),
            self.field,
        )

    def __neg__(self):
        p = self.field.p
        return FieldElement(tuple(-a % p for a in self.coefficients), self.field)

    def __sub__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        f = self.field
        if f.k == 1:
            return FieldElement(((self.coefficients[0] * other.coefficients[0]) % f.p,), f)
        return f.from_coefficients(poly_mul(self.coefficients, other.coefficients, f.p))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def order(self) -> int:
        """Multiplicative order, by brute force."""
        if not self:
            raise ValueError("zero has no multiplicative order")
        one = self.field.one
        x, n = self, 1
        while x != one:
            x = x * self
            n += 1
        return n


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FiniteField:
    """GF(p^k) with the smallest monic irreducible modulus of degree ``k``.

    For ``k == 1`` the modulus is ``X``, so elements are plain residues.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    for poly in monic_polys(p, k):
        if is_irreducible(poly, p):
            return FiniteField(p, k, poly)
    raise AssertionError(f"no irreducible polynomial of degree {k} over Z_{p}")


@lru_cache(maxsize=None)
def primitive_element(f: FiniteField) -> FieldElement:
    """Smallest-index generator of the multiplicative group."""
    q1 = f.q - 1
    rs = prime_factors(q1)
    one = f.one
    for idx in range(1, f.q):
        a = f.element(idx)
        if all(a ** (q1 // r) != one for r in rs):
            return a
    raise AssertionError(f"{f!r} has no primitive element")


def quadratic_residues(f: FiniteField) -> frozenset:
    """Non-zero squares of an odd-order field."""
    if f.q % 2 == 0:
        raise ValueError(f"quadratic residues need odd q, got q={f.q}")
    a = primitive_element(f)
    a2 = a * a
    out, x = set(), f.one
    for _ in range((f.q - 1) // 2):
        x = x * a2
        out.add(x)
    return frozenset(out)
