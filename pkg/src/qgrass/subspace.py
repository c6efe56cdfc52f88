"""Canonical subspaces of GF(q)^n, lattice operations and enumeration kernels."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Sequence

from . import _linalg
from .errors import (
    AmbientMismatch,
    BudgetExceeded,
    DimensionMismatch,
    DimensionOrder,
    EntryOutOfRange,
    NotContained,
)
from .field import FieldTable, build_field_table
from .qcalc import qbinom

__all__ = [
    "Ambient",
    "Subspace",
    "DEFAULT_BUDGET",
    "canonicalize",
    "intersect_dim",
    "meet_dim",
    "sum_span",
    "contains",
    "grassmannian_enumerate",
    "enumerate_between",
    "enumerate_containing",
    "enumerate_type",
    "unit_span",
]

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class Ambient:
    """The space GF(q)^n.  Equality only looks at (q, n)."""

    q: int
    n: int
    field: FieldTable = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "field", build_field_table(self.q))
        if self.n < 1:
            raise DimensionMismatch(f"ambient dimension must be >= 1, got {self.n}")

    def zero(self) -> "Subspace":
        return Subspace(self, ())

    def full(self) -> "Subspace":
        return unit_span(self, range(self.n))


class Subspace:
    """A subspace stored by its reduced row-echelon basis.

    Instances are immutable; equal subspaces have identical bases, so
    equality and hashing are plain tuple operations.  Use ``canonicalize``
    to build one from arbitrary rows.
    """

    __slots__ = ("ambient", "basis", "_key")

    def __init__(self, ambient: Ambient, basis: _linalg.Matrix):
        self.ambient = ambient
        self.basis = basis
        self._key = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.basis)

    @property
    def words(self) -> tuple[int, ...]:
        """Rows packed as base-q integers (bit words when q = 2)."""
        return self.key[2]

    @property
    def key(self):
        """Canonical sort key: dimension, pivot pattern, packed rows."""
        if self._key is None:
            q = self.ambient.q
            self._key = (self.dim, self.pivots, tuple(_linalg.pack(r, q) for r in self.basis))
        return self._key

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.basis]

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis == other.basis and self.ambient == other.ambient

    def __hash__(self):
        return hash((self.ambient.q, self.ambient.n, self.basis))

    def __lt__(self, other: "Subspace") -> bool:
        return self.key < other.key

    def __le__(self, other: "Subspace") -> bool:
        return self.key <= other.key

    def __repr__(self):
        return f"Subspace(q={self.ambient.q}, n={self.ambient.n}, basis={self.rows()})"


def canonicalize(ambient: Ambient, rows: Iterable[Sequence[int]]) -> Subspace:
    """Return the subspace spanned by ``rows`` in RREF."""
    rows = [tuple(r) for r in rows]
    for r in rows:
        if len(r) != ambient.n:
            raise DimensionMismatch(f"vector of length {len(r)} in ambient of dimension {ambient.n}")
        for x in r:
            if not (isinstance(x, int) and 0 <= x < ambient.q):
                raise EntryOutOfRange(x)
    return Subspace(ambient, _linalg.rref(rows, ambient.field, ambient.n))


def unit_span(ambient: Ambient, indices: Iterable[int]) -> Subspace:
    """Span of the unit vectors e_j, j in ``indices`` (0-based)."""
    n = ambient.n
    cols = sorted(set(indices))
    return Subspace(ambient, tuple(tuple(1 if j == c else 0 for j in range(n)) for c in cols))


def _same(a: Subspace, b: Subspace):
    if a.ambient != b.ambient:
        raise AmbientMismatch(f"{a.ambient} vs {b.ambient}")


def _union_rank(a: Subspace, b: Subspace) -> int:
    amb = a.ambient
    if amb.q == 2:
        return _linalg.rank_words(a.words + b.words)
    return _linalg.rank(a.basis + b.basis, amb.field, amb.n)


def meet_dim(a: Subspace, b: Subspace) -> int:
    """dim(a & b) without building the meet."""
    _same(a, b)
    return a.dim + b.dim - _union_rank(a, b)


def intersect_dim(a: Subspace, b: Subspace) -> tuple[int, Subspace]:
    _same(a, b)
    amb = a.ambient
    sum_rows, meet_rows = _linalg.zassenhaus(a.basis, b.basis, amb.field, amb.n)
    meet = Subspace(amb, meet_rows)
    assert meet.dim == a.dim + b.dim - len(sum_rows), "modular law violated"
    return meet.dim, meet


def sum_span(a: Subspace, b: Subspace) -> Subspace:
    _same(a, b)
    amb = a.ambient
    return Subspace(amb, _linalg.rref(a.basis + b.basis, amb.field, amb.n))


def contains(a: Subspace, b: Subspace) -> bool:
    """True iff b is a subspace of a."""
    _same(a, b)
    if b.dim > a.dim:
        return False
    return _union_rank(a, b) == a.dim


def _check_budget(count: int, budget: int | None):
    budget = DEFAULT_BUDGET if budget is None else budget
    if count > budget:
        raise BudgetExceeded(count, budget)


def grassmannian_enumerate(ambient: Ambient, k: int, budget: int | None = None) -> Iterator[Subspace]:
    """Yield every k-subspace once, in canonical order.

    RREF matrices are generated directly from pivot patterns, so no
    reduction or deduplication is needed.
    """
    if not 0 <= k <= ambient.n:
        raise DimensionOrder(f"need 0 <= k <= n, got k={k}, n={ambient.n}")
    _check_budget(qbinom(ambient.n, k, ambient.q), budget)
    for m in _linalg.rref_matrices(ambient.n, k, ambient.q):
        yield Subspace(ambient, m)


def _complement_gens(e: Subspace, x: Subspace) -> list[_linalg.Vector]:
    # rows of x that extend a basis of e to a basis of x
    amb = x.ambient
    gens: list[_linalg.Vector] = []
    current = list(e.basis)
    for r in x.basis:
        if _linalg.rank(current + [r], amb.field, amb.n) > len(current):
            gens.append(r)
            current.append(r)
    return gens


def enumerate_between(e: Subspace, x: Subspace, k: int, budget: int | None = None) -> Iterator[Subspace]:
    """Yield every k-subspace F with e <= F <= x, each once.

    Each F corresponds to the (k - dim e)-subspace F/e of x/e, written in
    coordinates over a fixed complement of e inside x.
    """
    _same(e, x)
    if not contains(x, e):
        raise NotContained("e is not contained in x")
    if not e.dim <= k <= x.dim:
        raise DimensionOrder(f"need dim e <= k <= dim x, got {e.dim}, {k}, {x.dim}")
    amb = x.ambient
    gens = _complement_gens(e, x)
    _check_budget(qbinom(len(gens), k - e.dim, amb.q), budget)
    f, n = amb.field, amb.n
    for w in _linalg.rref_matrices(len(gens), k - e.dim, amb.q):
        lifted = [_linalg.combine(row, gens, f, n) for row in w]
        yield Subspace(amb, _linalg.rref(e.basis + tuple(lifted), f, n))


def enumerate_containing(e: Subspace, k: int, budget: int | None = None) -> Iterator[Subspace]:
    """Yield every k-subspace of the ambient that contains e."""
    if not e.dim <= k <= e.ambient.n:
        raise DimensionOrder(f"need dim e <= k <= n, got {e.dim}, {k}, {e.ambient.n}")
    return enumerate_between(e, e.ambient.full(), k, budget)


def enumerate_type(l: Subspace, m: int, h: int, budget: int | None = None) -> Iterator[Subspace]:
    """Yield every m-subspace U with dim(U & l) = h, each once.

    Coordinates are taken over a basis of V that starts with the basis of l.
    In those coordinates U is determined by its meet A with l, its
    projection P onto the complementary coordinates, and a linear map from
    P into a fixed complement of A in l.
    """
    amb = l.ambient
    f, n, q = amb.field, amb.n, amb.q
    dl = l.dim
    de = n - dl
    if not (0 <= h <= min(m, dl) and 0 <= m - h <= de):
        raise DimensionOrder(f"no type ({m},{h}) subspaces for dim l = {dl}, n = {n}")
    _check_budget(qbinom(dl, h, q) * qbinom(de, m - h, q) * q ** ((dl - h) * (m - h)), budget)

    lpiv = set(l.pivots)
    gens = list(l.basis) + [tuple(1 if j == c else 0 for j in range(n)) for c in range(n) if c not in lpiv]
    zeros_e = (0,) * de
    unit_l = [tuple(1 if j == c else 0 for j in range(dl)) for c in range(dl)]

    for a in _linalg.rref_matrices(dl, h, q):
        apiv = {next(j for j, x in enumerate(r) if x) for r in a}
        comp = [unit_l[c] for c in range(dl) if c not in apiv]
        a_rows = [row + zeros_e for row in a]
        for p in _linalg.rref_matrices(de, m - h, q):
            for choice in product(range(q), repeat=len(comp) * len(p)):
                rows = list(a_rows)
                for i, prow in enumerate(p):
                    coeffs = choice[i * len(comp):(i + 1) * len(comp)]
                    rows.append(_linalg.combine(coeffs, comp, f, dl) + prow)
                lifted = [_linalg.combine(r, gens, f, n) for r in rows]
                yield Subspace(amb, _linalg.rref(lifted, f, n))
