"""Lookup-table arithmetic for GF(q), q a prime power up to 16.

Elements are dense integer codes 0..q-1.  For q = p**e the code of an
element is ``sum(a_i * p**i)`` where ``a_i`` is the coefficient of x**i in
its polynomial representative modulo a fixed irreducible polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import ElementOutOfRange, NotPrimePower, OrderOutOfRange, ZeroInverse

MAX_ORDER = 16

__all__ = ["FieldTable", "build_field_table", "field_eval", "prime_power", "MAX_ORDER"]


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``q == p**e`` and p prime, or None."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    return (p, e) if rest == 1 else None


@dataclass(frozen=True, eq=False)
class FieldTable:
    q: int
    p: int
    e: int
    modulus: tuple[int, ...]  # low-to-high coefficients of the monic irreducible
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]
    inv: tuple[int, ...]  # inv[0] is unused and set to 0

    def __eq__(self, other):
        if not isinstance(other, FieldTable):
            return NotImplemented
        return (self.q, self.modulus, self.add, self.mul) == (
            other.q, other.modulus, other.add, other.mul)

    def __hash__(self):
        return hash((self.q, self.modulus))

    def __repr__(self):
        return f"FieldTable(q={self.q})"

    @property
    def elements(self) -> range:
        return range(self.q)

    def sub(self, x: int, y: int) -> int:
        return self.add[x][self.neg[y]]

    def div(self, x: int, y: int) -> int:
        if y == 0:
            raise ZeroInverse("division by zero")
        return self.mul[x][self.inv[y]]


def _digits(code: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        code, r = divmod(code, p)
        out.append(r)
    return out


def _code(digits, p: int) -> int:
    return sum(d * p**i for i, d in enumerate(digits))


def _polymulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    e = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # mod is monic of degree e
    for d in range(len(prod) - 1, e - 1, -1):
        c = prod[d]
        if c:
            for i in range(e + 1):
                prod[d - e + i] = (prod[d - e + i] - c * mod[i]) % p
    return (prod + [0] * e)[:e]


def _polymod(a: list[int], b: list[int], p: int) -> list[int]:
    a = a[:]
    db = len(b) - 1
    while db >= 0 and b[db] == 0:
        db -= 1
    inv_lead = pow(b[db], p - 2, p)
    for d in range(len(a) - 1, db - 1, -1):
        c = a[d] * inv_lead % p
        if c:
            for i in range(db + 1):
                a[d - db + i] = (a[d - db + i] - c * b[i]) % p
    return a[:db] if db > 0 else []


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_polymod(poly, divisor, p)):
                return False
    return True


def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    # lower coefficients ordered by their base-p code, i.e. lexicographically
    # from the x**(e-1) coefficient down
    for code in range(p**e):
        poly = _digits(code, p, e) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@lru_cache(maxsize=None)
def build_field_table(q: int) -> FieldTable:
    """Build the full add/mul/neg/inv tables for GF(q).

    The extension is realised modulo the lexicographically smallest monic
    irreducible polynomial of degree e over GF(p), so two builds of the same
    order are identical.
    """
    if not isinstance(q, int) or q < 2 or q > MAX_ORDER:
        raise OrderOutOfRange(q)
    pe = prime_power(q)
    if pe is None:
        raise NotPrimePower(q)
    p, e = pe

    if e == 1:
        modulus: tuple[int, ...] = (0, 1)
        add = tuple(tuple((x + y) % p for y in range(q)) for x in range(q))
        mul = tuple(tuple((x * y) % p for y in range(q)) for x in range(q))
    else:
        modulus = _smallest_irreducible(p, e)
        digits = [_digits(c, p, e) for c in range(q)]
        add = tuple(
            tuple(_code([(a + b) % p for a, b in zip(digits[x], digits[y])], p) for y in range(q))
            for x in range(q)
        )
        mul = tuple(
            tuple(_code(_polymulmod(digits[x], digits[y], list(modulus), p), p) for y in range(q))
            for x in range(q)
        )

    neg = tuple(next(y for y in range(q) if add[x][y] == 0) for x in range(q))
    inv = (0,) + tuple(next(y for y in range(1, q) if mul[x][y] == 1) for x in range(1, q))
    return FieldTable(q=q, p=p, e=e, modulus=modulus, add=add, mul=mul, neg=neg, inv=inv)


def field_eval(t: FieldTable, op: str, x: int, y: int | None = None) -> int:
    """Evaluate one field operation through the lookup tables."""
    for v in (x, y):
        if v is not None and not 0 <= v < t.q:
            raise ElementOutOfRange(v)
    if op in ("add", "mul"):
        if y is None:
            raise TypeError(f"{op} needs two operands")
        return (t.add if op == "add" else t.mul)[x][y]
    if y is not None:
        raise TypeError(f"{op} takes one operand")
    if op == "neg":
        return t.neg[x]
    if op == "inv":
        if x == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return t.inv[x]
    raise ValueError(f"unknown field operation {op!r}")
