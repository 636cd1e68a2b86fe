# gf.py
# Exact arithmetic in finite fields GF(p^k)
# Author: qinvar developers

"""
Small finite fields GF(p^k) in polynomial representation.

Elements are coefficient tuples (c_0, ..., c_{k-1}) of residues mod p, reduced
modulo a fixed monic irreducible polynomial of degree k. The modulus is the
lowest one in lexicographic order, so every run builds the same field. Only
fields with p^k <= 32 are supported, which keeps exhaustive checks cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple, Union

from .helpers import MAX_PRIME_POWER, is_prime
from .state_types import FieldError

Poly = Tuple[int, ...]  # coefficients, lowest degree first


def _trim(poly: Sequence[int]) -> Poly:
    coeffs = list(poly)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> Poly:
    """Remainder of a modulo the monic polynomial m over GF(p)."""
    rem = [c % p for c in a]
    deg_m = len(m) - 1
    for i in range(len(rem) - 1, deg_m - 1, -1):
        c = rem[i]
        if c:
            shift = i - deg_m
            for j, mc in enumerate(m):
                rem[shift + j] = (rem[shift + j] - c * mc) % p
    return _trim(rem[:deg_m])


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _monic_polys(p: int, degree: int) -> Iterator[Poly]:
    """Monic polynomials of the given degree in lexicographic order of (c_{deg-1}, ..., c_0)."""
    for head in itertools.product(range(p), repeat=degree):
        yield tuple(reversed(head)) + (1,)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Exhaustive factor check: no monic factor of degree 1..deg/2 divides poly."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_mod(poly, g, p):
                return False
    return True


@dataclass(frozen=True)
class Field:
    """GF(p^k) with a fixed monic irreducible modulus (coefficients lowest degree first)"""

    p: int
    k: int
    modulus: Poly

    @property
    def order(self) -> int:
        return self.p**self.k

    def element(self, value: Union[int, Sequence[int]]) -> FieldElement:
        """Build an element from its integer index (base-p digits) or its coefficient list."""
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise FieldError(f"Element index {value} out of range for GF({self.order})")
            coeffs = []
            for _ in range(self.k):
                coeffs.append(value % self.p)
                value //= self.p
            return FieldElement(tuple(coeffs), self)
        coeffs = [int(c) for c in value]
        if len(coeffs) > self.k:
            coeffs = list(_poly_mod(coeffs, self.modulus, self.p))
        coeffs = [c % self.p for c in coeffs] + [0] * (self.k - len(coeffs))
        return FieldElement(tuple(coeffs), self)

    @property
    def zero(self) -> FieldElement:
        return FieldElement((0,) * self.k, self)

    @property
    def one(self) -> FieldElement:
        return self.element(1)

    def elements(self) -> List[FieldElement]:
        return [self.element(i) for i in range(self.order)]

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})"


@dataclass(frozen=True)
class FieldElement:
    """Element of GF(p^k); coefficients of its polynomial representative, lowest degree first"""

    coeffs: Poly
    field: Field

    def _same_field(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise FieldError(f"Cannot combine field element with {type(other)}")
        if other.field != self.field:
            raise FieldError(f"Cannot combine elements of {self.field!r} and {other.field!r}")

    def __add__(self, other: FieldElement) -> FieldElement:
        return add(self, other)

    def __sub__(self, other: FieldElement) -> FieldElement:
        return add(self, -other)

    def __neg__(self) -> FieldElement:
        p = self.field.p
        return FieldElement(tuple((-c) % p for c in self.coeffs), self.field)

    def __mul__(self, other: FieldElement) -> FieldElement:
        return mul(self, other)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return mul(self, inv(other))

    def __pow__(self, exponent: int) -> FieldElement:
        if exponent < 0:
            return inv(self) ** (-exponent)
        result = self.field.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __int__(self) -> int:
        return sum(c * self.field.p**i for i, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        terms = [
            ("" if c == 1 and i else str(c)) + ("x" if i == 1 else f"x^{i}" if i else "")
            for i, c in enumerate(self.coeffs)
            if c
        ]
        return " + ".join(reversed(terms)) or "0"


@lru_cache(maxsize=None)
def field_new(p: int, k: int = 1) -> Field:
    """
    Construct GF(p^k) with the lowest lexicographic monic irreducible modulus.

    :param p: prime characteristic
    :param k: extension degree >= 1
    :raises FieldError: non-prime p, k < 1, or p^k above the supported cap
    """
    if not is_prime(p):
        raise FieldError(f"Characteristic {p} is not prime")
    if k < 1:
        raise FieldError(f"Extension degree must be >= 1, got {k}")
    if p**k > MAX_PRIME_POWER:
        raise FieldError(f"GF({p}^{k}) exceeds the supported field order {MAX_PRIME_POWER}")

    for candidate in _monic_polys(p, k):
        if is_irreducible(candidate, p):
            return Field(p=p, k=k, modulus=candidate)
    raise FieldError(f"No irreducible polynomial of degree {k} found over GF({p})")  # pragma: no cover


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    a._same_field(b)
    p = a.field.p
    return FieldElement(tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)), a.field)


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    a._same_field(b)
    f = a.field
    prod = _poly_mul(a.coeffs, b.coeffs, f.p)
    return f.element(list(_poly_mod(prod, f.modulus, f.p)))


def inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse via a^(p^k - 2)."""
    if not a:
        raise FieldError(f"Cannot invert zero in {a.field!r}")
    return a ** (a.field.order - 2)


def trace(a: FieldElement) -> int:
    """Absolute trace a + a^p + ... + a^(p^(k-1)), returned as an integer in [0, p)."""
    f = a.field
    total = f.zero
    term = a
    for _ in range(f.k):
        total = total + term
        term = term**f.p
    if any(total.coeffs[1:]):
        raise FieldError(f"Trace of {a!r} left the prime subfield")  # pragma: no cover
    return total.coeffs[0]
