"""Row-reduction kernels over GF(q).

Vectors are tuples of element codes.  Over GF(2) the kernels switch to
packed words: entry j of an n-vector is bit ``n-1-j``, so the numeric order
of words equals the lexicographic order of the vectors and the pivot column
of a word is ``n - w.bit_length()``.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator, Sequence

from .field import FieldTable

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def pack(vec: Sequence[int], q: int) -> int:
    code = 0
    for x in vec:
        code = code * q + x
    return code


def unpack(code: int, q: int, n: int) -> Vector:
    out = [0] * n
    for j in range(n - 1, -1, -1):
        code, out[j] = divmod(code, q)
    return tuple(out)


def rref_words(words: Sequence[int]) -> list[int]:
    """Reduced echelon basis of a GF(2) span, sorted by pivot column."""
    basis: list[int] = []
    for w in words:
        for b in basis:
            w = min(w, w ^ b)
        if w:
            bit = 1 << (w.bit_length() - 1)
            basis = [b ^ w if b & bit else b for b in basis]
            basis.append(w)
            basis.sort(reverse=True)
    return basis


def rank_words(words: Sequence[int]) -> int:
    basis: list[int] = []
    for w in words:
        for b in basis:
            w = min(w, w ^ b)
        if w:
            basis.append(w)
            basis.sort(reverse=True)
    return len(basis)


def _rref_general(rows: Sequence[Sequence[int]], f: FieldTable, n: int) -> Matrix:
    add, mul, neg, inv = f.add, f.mul, f.neg, f.inv
    m = [list(r) for r in rows]
    r = 0
    for c in range(n):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        if lead != 1:
            scale = mul[inv[lead]]
            m[r] = [scale[x] for x in m[r]]
        prow = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                mf = mul[neg[m[i][c]]]
                m[i] = [add[a][mf[b]] for a, b in zip(m[i], prow)]
        r += 1
    return tuple(tuple(row) for row in m[:r])


def rref(rows: Sequence[Sequence[int]], f: FieldTable, n: int) -> Matrix:
    """Reduced row-echelon basis of the span of ``rows`` (zero rows dropped)."""
    if f.q == 2:
        return tuple(unpack(w, 2, n) for w in rref_words([pack(r, 2) for r in rows]))
    return _rref_general(rows, f, n)


def rank(rows: Sequence[Sequence[int]], f: FieldTable, n: int) -> int:
    if f.q == 2:
        return rank_words([pack(r, 2) for r in rows])
    return len(_rref_general(rows, f, n))


def zassenhaus(a: Sequence[Vector], b: Sequence[Vector], f: FieldTable, n: int) -> tuple[Matrix, Matrix]:
    """Return RREF bases of ``span(a) + span(b)`` and ``span(a) & span(b)``."""
    if f.q == 2:
        aw = [pack(r, 2) for r in a]
        bw = [pack(r, 2) for r in b]
        red = rref_words([(w << n) | w for w in aw] + [w << n for w in bw])
        low = (1 << n) - 1
        sum_w = [w >> n for w in red if w >> n]
        meet_w = rref_words([w & low for w in red if not w >> n])
        return (tuple(unpack(w, 2, n) for w in sum_w), tuple(unpack(w, 2, n) for w in meet_w))
    zero = (0,) * n
    red = _rref_general([tuple(r) + tuple(r) for r in a] + [tuple(r) + zero for r in b], f, 2 * n)
    sum_rows = tuple(r[:n] for r in red if any(r[:n]))
    meet_rows = _rref_general([r[n:] for r in red if not any(r[:n])], f, n)
    return sum_rows, meet_rows


def combine(coeffs: Sequence[int], gens: Sequence[Vector], f: FieldTable, n: int) -> Vector:
    """Linear combination ``sum(c_i * g_i)``."""
    out = [0] * n
    add, mul = f.add, f.mul
    for c, g in zip(coeffs, gens):
        if c:
            mc = mul[c]
            out = [add[x][mc[y]] for x, y in zip(out, g)]
    return tuple(out)


def rref_matrices(n: int, k: int, q: int) -> Iterator[Matrix]:
    """Every k x n RREF matrix over GF(q), each exactly once.

    Order: pivot tuples lexicographically, then the free entries in
    row-major lexicographic order.  Within a pivot pattern this is the
    lexicographic order of the flattened matrix.
    """
    if k == 0:
        yield ()
        return
    for piv in combinations(range(n), k):
        pivset = set(piv)
        free = [(i, j) for i in range(k) for j in range(piv[i] + 1, n) if j not in pivset]
        base = [[0] * n for _ in range(k)]
        for i, p in enumerate(piv):
            base[i][p] = 1
        for vals in product(range(q), repeat=len(free)):
            rows = [row[:] for row in base]
            for (i, j), v in zip(free, vals):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows)
