"""Table-based arithmetic for the small Galois fields GF(q), q <= 9.

Elements are plain integer codes in [0, q).  For prime q the code is the
residue; for q = p^e the code encodes the coefficient vector of the
polynomial-basis representation, little endian:

    code = c0 + c1*p + ... + c_{e-1}*p^(e-1),   c_i in [0, p)

The reducing polynomials are fixed so that codes are identical across
runs and machines:

    GF(4): x^2 + x + 1      GF(8): x^3 + x + 1      GF(9): x^2 + 1

All operations are lookups into precomputed tables.  Tables are checked
against the field axioms exhaustively at construction time, which is
cheap for q <= 9.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import DivisionByZero, UnsupportedOrder

SUPPORTED_ORDERS = (2, 3, 4, 5, 7, 8, 9)

# Monic irreducible modulus per prime power, as little-endian coefficient
# lists (constant term first).  Empty for prime fields.
FIXED_MODULI = {
    4: [1, 1, 1],        # x^2 + x + 1
    8: [1, 1, 0, 1],     # x^3 + x + 1
    9: [1, 0, 1],        # x^2 + 1
}


def _factor_prime_power(q: int) -> tuple[int, int]:
    for p in (2, 3, 5, 7):
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m == 1:
                return p, e
            break
    raise UnsupportedOrder(f"q={q} is not a supported prime power")


def _poly_mul_mod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    e = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce: x^e = -(modulus minus leading term)
    for deg in range(len(prod) - 1, e - 1, -1):
        c = prod[deg]
        if c:
            prod[deg] = 0
            for i in range(e):
                prod[deg - e + i] = (prod[deg - e + i] - c * modulus[i]) % p
    out = prod[:e]
    out += [0] * (e - len(out))
    return out


@dataclass(frozen=True)
class Field:
    """Arithmetic tables for GF(q).  Immutable after construction."""

    q: int
    p: int
    e: int
    modulus: tuple[int, ...]
    add_table: np.ndarray = field(repr=False)
    mul_table: np.ndarray = field(repr=False)
    neg_table: np.ndarray = field(repr=False)
    inv_table: np.ndarray = field(repr=False)

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inv(0) is undefined")
        return int(self.inv_table[a])

    def elements(self) -> range:
        return range(self.q)


def _check_axioms(q: int, add: np.ndarray, mul: np.ndarray) -> None:
    rng = range(q)
    for a in rng:
        if add[a, 0] != a or mul[a, 1] != a or mul[a, 0] != 0:
            raise AssertionError("identity axiom failed")
        for b in rng:
            if add[a, b] != add[b, a] or mul[a, b] != mul[b, a]:
                raise AssertionError("commutativity failed")
            for c in rng:
                if add[add[a, b], c] != add[a, add[b, c]]:
                    raise AssertionError("additive associativity failed")
                if mul[mul[a, b], c] != mul[a, mul[b, c]]:
                    raise AssertionError("multiplicative associativity failed")
                if mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]:
                    raise AssertionError("distributivity failed")


@lru_cache(maxsize=None)
def build_field(q: int) -> Field:
    """Build (and memoize) the verified arithmetic tables for GF(q)."""
    if q not in SUPPORTED_ORDERS:
        raise UnsupportedOrder(f"q={q} is not a supported prime power")
    p, e = _factor_prime_power(q)
    modulus = FIXED_MODULI.get(q, [])

    def to_poly(code: int) -> list[int]:
        digits = []
        for _ in range(e):
            digits.append(code % p)
            code //= p
        return digits

    def to_code(poly: list[int]) -> int:
        code = 0
        for c in reversed(poly):
            code = code * p + c
        return code

    add = np.zeros((q, q), dtype=np.uint8)
    mul = np.zeros((q, q), dtype=np.uint8)
    for a in range(q):
        pa = to_poly(a)
        for b in range(q):
            pb = to_poly(b)
            add[a, b] = to_code([(x + y) % p for x, y in zip(pa, pb)])
            if e == 1:
                mul[a, b] = (a * b) % p
            else:
                mul[a, b] = to_code(_poly_mul_mod(pa, pb, modulus, p))

    neg = np.zeros(q, dtype=np.uint8)
    inv = np.zeros(q, dtype=np.uint8)
    for a in range(q):
        neg[a] = to_code([(-c) % p for c in to_poly(a)])
        if a:
            hits = [b for b in range(1, q) if mul[a, b] == 1]
            if len(hits) != 1:
                raise AssertionError(f"no unique inverse for {a} in GF({q})")
            inv[a] = hits[0]

    _check_axioms(q, add, mul)

    fld = Field(q=q, p=p, e=e, modulus=tuple(modulus),
                add_table=add, mul_table=mul, neg_table=neg, inv_table=inv)
    fld.add_table.setflags(write=False)
    fld.mul_table.setflags(write=False)
    fld.neg_table.setflags(write=False)
    fld.inv_table.setflags(write=False)
    return fld
