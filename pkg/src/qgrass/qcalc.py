"""Exact Gaussian binomial calculus and inequality certification.

Everything here is integer arithmetic.  Fractional constants are cleared
by cross-multiplication and hypotheses of the form ``n >= A + log_q B``
are tested as ``q**(n - A) >= B``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Sequence

from .errors import HypothesisViolated, MissingX, UnknownLemma

__all__ = [
    "qbinom",
    "nprime_count",
    "ParamPoint",
    "LemmaVerdict",
    "AltSum",
    "f1",
    "f2",
    "f3",
    "g1",
    "g2",
    "g3",
    "f_eval",
    "g_eval",
    "alt_sum_terms",
    "alt_sum_identity",
    "power_at_least",
    "min_n",
    "hypothesis_check",
    "failed_hypotheses",
    "check_point",
    "lemma_grid_check",
    "LEMMA_IDS",
    "HYPOTHESIS_IDS",
    "default_lemma_grid",
    "CSV_HEADER",
]


@lru_cache(maxsize=65536)
def qbinom(a: int, b: int, q: int) -> int:
    """Gaussian binomial coefficient [a b]_q.

    1 when b = 0, 0 when b < 0 or b > a, otherwise the product formula.
    """
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if b == 0:
        return 1
    if b < 0 or b > a:
        return 0
    num = den = 1
    for i in range(b):
        num *= q ** (a - i) - 1
        den *= q ** (b - i) - 1
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def _line(a: int, q: int) -> int:
    # [a 1]_q
    return qbinom(a, 1, q)


def nprime_count(m1: int, h1: int, m: int, h: int, e: int, l: int, q: int) -> int:
    """Number of type-(m, h) subspaces containing a fixed type-(m1, h1) one.

    The ambient has dimension e + l and the reference subspace dimension l.
    """
    checks = [
        (0 <= h1, "0 <= h1"),
        (h1 <= h, "h1 <= h"),
        (h <= l, "h <= l"),
        (0 <= m1 - h1, "0 <= m1 - h1"),
        (m1 - h1 <= m - h, "m1 - h1 <= m - h"),
        (m - h <= e, "m - h <= e"),
    ]
    for ok, text in checks:
        if not ok:
            raise HypothesisViolated(text)
    d = m1 - h1
    return q ** ((l - h) * (m - h - d)) * qbinom(e - d, m - h - d, q) * qbinom(l - h1, h - h1, q)


@dataclass(frozen=True)
class ParamPoint:
    n: int
    k: int
    t: int
    s: int
    q: int
    x: int | None = None
    l: int | None = None

    def as_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


# --- the f and g functions ---------------------------------------------------

def f1(n: int, k: int, t: int, s: int, x: int, q: int) -> int:
    r = _line(k - t + 1, q)
    head = qbinom(x, t, q) * r ** (x - t) * qbinom(n - x, k - x, q)
    return head + s * qbinom(x, t, q) * sum(r**i for i in range(x - t))


def f2(n: int, k: int, t: int, s: int, x: int, q: int) -> int:
    return (
        _line(x - t, q) * qbinom(n - t - 1, k - t - 1, q)
        + q ** (2 * (x - t)) * _line(k + 1 - x, q) ** 2 * qbinom(n - t - 2, k - t - 2, q)
        + 2 * s
    )


def f3(n: int, k: int, t: int, s: int, x: int, q: int) -> int:
    return (
        qbinom(n - t, k - t, q)
        + q ** (x - t + 1) * _line(k - t, q) * _line(t, q) * qbinom(n - x, k - x, q)
        + s
    )


def g1(n: int, k: int, t: int, s: int, q: int) -> int:
    base = qbinom(n - t, k - t, q)
    removed = q ** ((k - t) * (k + 1 - t)) * qbinom(n - k - 1, k - t, q)
    added = min(s, q ** (k - t + 1) * _line(t, q))
    return (base - removed + s) * (base + added)


def g2(n: int, k: int, t: int, q: int) -> int:
    c = qbinom(n - t - 1, k - t - 1, q)
    return q ** (k - t) * _line(t + 1, q) * c * qbinom(n - t - 1, k - t, q) + c * c


def g3(n: int, k: int, t: int, s: int, q: int) -> int:
    return (
        _line(k - t + 1, q) * qbinom(n - t + 1, k - t + 1, q)
        - q ** ((k - t - 1) * (k - t - 2) + 1) * qbinom(n - t - 1, k - t - 2, q) * qbinom(k + 1 - t, 2, q)
        + s
    )


_F = {"f1": f1, "f2": f2, "f3": f3}


def f_eval(which: str, point: ParamPoint) -> int:
    if which not in _F:
        raise ValueError(f"unknown function {which!r}")
    if point.x is None:
        raise MissingX(which)
    p = point
    return _F[which](p.n, p.k, p.t, p.s, p.x, p.q)


def g_eval(which: str, point: ParamPoint) -> int:
    p = point
    if which == "g1":
        return g1(p.n, p.k, p.t, p.s, p.q)
    if which == "g2":
        return g2(p.n, p.k, p.t, p.q)
    if which == "g3":
        return g3(p.n, p.k, p.t, p.s, p.q)
    raise ValueError(f"unknown function {which!r}")


# --- the alternating-sum identity ---------------------------------------------

@dataclass(frozen=True)
class AltSum:
    lhs: int
    rhs: int
    terms: tuple[int, ...]
    ratios_below_one: bool

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def alt_sum_terms(n: int, k: int, t: int, q: int) -> tuple[int, ...]:
    """a_i = q^C(i,2) [k-t+1 i] [n-t-i k-t-i] for i = 1..k-t."""
    return tuple(
        q ** comb(i, 2) * qbinom(k - t + 1, i, q) * qbinom(n - t - i, k - t - i, q)
        for i in range(1, k - t + 1)
    )


def alt_sum_identity(n: int, k: int, t: int, q: int) -> AltSum:
    """Both sides of the inclusion-exclusion identity for
    [n-t k-t] - q^((k-t)(k+1-t)) [n-k-1 k-t]."""
    if not (t <= k <= n):
        raise HypothesisViolated("t <= k <= n")
    lhs = qbinom(n - t, k - t, q) - q ** ((k - t) * (k + 1 - t)) * qbinom(n - k - 1, k - t, q)
    terms = alt_sum_terms(n, k, t, q)
    rhs = sum(a if i % 2 == 0 else -a for i, a in enumerate(terms))
    ratios = all(b < a for a, b in zip(terms, terms[1:]))
    return AltSum(lhs, rhs, terms, ratios)


# --- hypotheses -----------------------------------------------------------------

def power_at_least(q: int, exponent: int, bound: int) -> bool:
    """Exact test of q**exponent >= bound for any integer exponent."""
    if exponent >= 0:
        return q**exponent >= bound
    return bound * q ** (-exponent) <= 1


def min_n(base: int, bound: int, q: int) -> int:
    """Least n with n >= base + log_q(bound)."""
    n = base
    while not power_at_least(q, n - base, bound):
        n += 1
    return n


def _lsl(p: ParamPoint) -> int:
    return p.s * (p.l if p.l is not None else 0)


# Each hypothesis is a list of (description, predicate) pairs.
_HYP: dict[str, list[tuple[str, Callable[[ParamPoint], bool]]]] = {
    "n>k": [("1 <= k < n", lambda p: 1 <= p.k < p.n)],
    "n>=k": [("0 <= k <= n", lambda p: 0 <= p.k <= p.n)],
    "basic-v": [
        ("1 <= t <= k", lambda p: 1 <= p.t <= p.k),
        ("n >= 2k - t + 1", lambda p: p.n >= 2 * p.k - p.t + 1),
    ],
    "f1-lemma": [
        ("k >= t + 1", lambda p: p.k >= p.t + 1),
        ("l >= 1", lambda p: p.l is not None and p.l >= 1),
        ("n >= 2k + 2t + 1 + log_q(7sl)", lambda p: power_at_least(p.q, p.n - (2 * p.k + 2 * p.t + 1), 7 * _lsl(p))),
    ],
    "g1-lemma": [
        ("k >= t + 2", lambda p: p.k >= p.t + 2),
        ("n >= 3k + 3t + 1 + log_q(13s)", lambda p: power_at_least(p.q, p.n - (3 * p.k + 3 * p.t + 1), 13 * p.s)),
    ],
    "g1-g2": [
        ("k >= t + 2", lambda p: p.k >= p.t + 2),
        ("n >= 3k + 3t + 1 + log_q(13s)", lambda p: power_at_least(p.q, p.n - (3 * p.k + 3 * p.t + 1), 13 * p.s)),
        ("k <= 2t", lambda p: p.k <= 2 * p.t),
        ("t != 2", lambda p: p.t != 2),
    ],
    "eq1": [("1 <= t <= k <= n", lambda p: 1 <= p.t <= p.k <= p.n)],
    "max-product-theorem": [
        ("k >= t + 1", lambda p: p.k >= p.t + 1),
        ("n >= 2k + 2t + 1 + log_q(7s)", lambda p: power_at_least(p.q, p.n - (2 * p.k + 2 * p.t + 1), 7 * p.s)),
    ],
    "stability-theorem": [
        ("(k, t) != (4, 2)", lambda p: (p.k, p.t) != (4, 2)),
        ("k >= t + 2", lambda p: p.k >= p.t + 2),
        ("n >= 3k + 3t + 1 + log_q(13s)", lambda p: power_at_least(p.q, p.n - (3 * p.k + 3 * p.t + 1), 13 * p.s)),
    ],
    "non-cross-structure": [
        ("k >= t + 2", lambda p: p.k >= p.t + 2),
        ("n >= 3k + 3t + 1 + log_q(13s)", lambda p: power_at_least(p.q, p.n - (3 * p.k + 3 * p.t + 1), 13 * p.s)),
    ],
    "cover-bound": [
        ("k >= t + 1", lambda p: p.k >= p.t + 1),
        ("n >= 2k", lambda p: p.n >= 2 * p.k),
    ],
    "tau-product-bound": [
        ("k >= t + 1", lambda p: p.k >= p.t + 1),
        ("n >= 2k + 2t + 1 + log_q(7s)", lambda p: power_at_least(p.q, p.n - (2 * p.k + 2 * p.t + 1), 7 * p.s)),
    ],
    "tau-g1-bound": [
        ("k >= t + 2", lambda p: p.k >= p.t + 2),
        ("n >= 2k + 3t + 1 + log_q(13s)", lambda p: power_at_least(p.q, p.n - (2 * p.k + 3 * p.t + 1), 13 * p.s)),
    ],
    "cross-cover": [
        ("k >= t + 1", lambda p: p.k >= p.t + 1),
        ("n >= 2k + s - 1", lambda p: p.n >= 2 * p.k + p.s - 1),
    ],
    "example-almost": [
        ("1 <= t <= k < n", lambda p: 1 <= p.t <= p.k < p.n),
        ("q^((k-t)(k-t+1)) [n-k-1 k-t] > s",
         lambda p: p.q ** ((p.k - p.t) * (p.k - p.t + 1)) * qbinom(p.n - p.k - 1, p.k - p.t, p.q) > p.s),
    ],
    "example-cover": [
        ("t >= 1", lambda p: p.t >= 1),
        ("n >= k + 1 >= t + 2", lambda p: p.n >= p.k + 1 >= p.t + 2),
    ],
}


def failed_hypotheses(key: str, point: ParamPoint) -> list[str]:
    """Descriptions of the hypothesis inequalities that fail at ``point``."""
    return [text for text, pred in _HYP[key] if not pred(point)]


# --- lemma claims ---------------------------------------------------------------

@dataclass(frozen=True)
class LemmaVerdict:
    lemma_id: str
    point: ParamPoint
    hypothesis_met: bool
    claim_holds: bool
    lhs: int | None
    rhs: int | None
    x: int | None = None
    detail: str = ""

    def csv_row(self) -> list[str]:
        p = self.point
        x = self.x if self.x is not None else p.x

        def s(v):
            return "" if v is None else str(v)

        return [self.lemma_id, s(p.n), s(p.k), s(p.t), s(p.s), s(p.q), s(x),
                str(self.hypothesis_met).lower(), str(self.claim_holds).lower(), s(self.lhs), s(self.rhs)]


CSV_HEADER = ["lemma_id", "n", "k", "t", "s", "q", "x", "hypothesis_met", "claim_holds", "lhs", "rhs"]

# Claims return (holds, lhs, rhs, x, detail).


def _claim_ii_lower(p):
    lhs = p.q ** (p.n - p.k) * (p.q**p.k - 1)
    rhs = p.q**p.n - 1
    return lhs < rhs, lhs, rhs, None, "q^(n-k)(q^k-1) < q^n-1"


def _claim_ii_upper(p):
    lhs = p.q**p.n - 1
    rhs = p.q ** (p.n - p.k + 1) * (p.q**p.k - 1)
    return lhs < rhs, lhs, rhs, None, "q^n-1 < q^(n-k+1)(q^k-1)"


def _claim_i(p):
    lhs, rhs = _line(p.k, p.q), 2 * p.q ** (p.k - 1)
    return lhs <= rhs, lhs, rhs, None, "[k 1] <= 2q^(k-1)"


def _claim_iii_lower(p):
    lhs, rhs = p.q ** (p.k * (p.n - p.k)), qbinom(p.n, p.k, p.q)
    return lhs < rhs, lhs, rhs, None, "q^(k(n-k)) < [n k]"


def _claim_iii_upper(p):
    lhs, rhs = qbinom(p.n, p.k, p.q), p.q ** (p.k * (p.n - p.k + 1))
    return lhs < rhs, lhs, rhs, None, "[n k] < q^(k(n-k+1))"


def _claim_pascal(p):
    n, k, q = p.n, p.k, p.q
    lhs = qbinom(n, k, q)
    rhs = qbinom(n - 1, k - 1, q) + q**k * qbinom(n - 1, k, q)
    return lhs == rhs, lhs, rhs, None, "[n k] = [n-1 k-1] + q^k [n-1 k]"


def _claim_symmetry(p):
    lhs, rhs = qbinom(p.n, p.k, p.q), qbinom(p.n, p.n - p.k, p.q)
    return lhs == rhs, lhs, rhs, None, "[n k] = [n n-k]"


def _claim_v(p):
    n, k, t, q = p.n, p.k, p.t, p.q
    r = _line(k - t + 1, q)
    best = None
    holds = True
    for i in range(1, k + 1):
        for j in range(i, k + 1):
            lhs = r ** (j - i) * qbinom(n - j, k - j, q)
            rhs = qbinom(n - i, k - i, q)
            if lhs > rhs:
                holds = False
            slack = Fraction(lhs, rhs)
            if best is None or slack > best[0]:
                best = (slack, lhs, rhs, i, j)
    _, lhs, rhs, i, j = best
    return holds, lhs, rhs, None, f"tightest at i={i}, j={j}"


def _claim_seven_halves(p):
    lhs = 2 * qbinom(p.n, p.k, p.q)
    rhs = 7 * p.q ** (p.k * (p.n - p.k))
    return lhs <= rhs, lhs, rhs, None, "2[n k] <= 7q^(k(n-k))"


def _monotone(func, p: ParamPoint, xs: Sequence[int], decreasing: bool, name: str):
    """Check func(x+1) vs func(x) for each x in xs; report the tightest step."""
    if p.x is not None:
        if p.x not in xs:
            raise HypothesisViolated(f"x={p.x} outside {list(xs)}")
        xs = [p.x]
    holds = True
    best = None
    for x in xs:
        cur = func(p.n, p.k, p.t, p.s, x, p.q)
        nxt = func(p.n, p.k, p.t, p.s, x + 1, p.q)
        ok = nxt < cur if decreasing else nxt > cur
        holds = holds and ok
        # tightest = ratio closest to (or past) 1
        ratio = Fraction(nxt, cur) if decreasing else Fraction(cur, nxt)
        if best is None or ratio > best[0]:
            best = (ratio, nxt, cur, x)
    if best is None:
        return True, None, None, None, f"{name}: empty range"
    _, nxt, cur, x = best
    return holds, nxt, cur, x, f"{name}({x + 1}) vs {name}({x})"


def _claim_f1_decreasing(p):
    return _monotone(f1, p, range(p.t, p.k), True, "f1")


def _claim_f1_floor(p):
    n, k, t, s, q = p.n, p.k, p.t, p.s, p.q
    lhs = 6 * f1(n, k, t, s, k - 1, q)
    rhs = 7 * p.l * s * qbinom(k, t, q) * comb(2 * k - 2 * t + 2, k - t + 1)
    return lhs > rhs, lhs, rhs, k - 1, "6 f1(k-1) > 7 l s [k t] C(2k-2t+2, k-t+1)"


def _core(p):
    # [k-t+1 1][n-t-1 k-t-1]
    return _line(p.k - p.t + 1, p.q) * qbinom(p.n - p.t - 1, p.k - p.t - 1, p.q)


def _claim_g1_25_26(p):
    lhs = 26 * g1(p.n, p.k, p.t, p.s, p.q)
    rhs = 25 * _core(p) * qbinom(p.n - p.t, p.k - p.t, p.q)
    return lhs > rhs, lhs, rhs, None, "26 g1 > 25 [k-t+1 1][n-t-1 k-t-1][n-t k-t]"


def _claim_g1_squared(p):
    lhs = g1(p.n, p.k, p.t, p.s, p.q)
    rhs = (_core(p) + p.s) ** 2
    return lhs > rhs, lhs, rhs, None, "g1 > ([k-t+1 1][n-t-1 k-t-1] + s)^2"


def _claim_f3_decreasing(p):
    return _monotone(f3, p, range(p.t + 1, p.k), True, "f3")


def _claim_f2_increasing(p):
    return _monotone(f2, p, range(p.t + 1, p.k), False, "f2")


def _claim_f2_f3_product(p):
    n, k, t, s, q = p.n, p.k, p.t, p.s, p.q
    second = qbinom(n - t, k - t, q) + q**2 * _line(k - t, q) * _line(t, q) * qbinom(n - t - 1, k - t - 1, q) + s
    lhs = f2(n, k, t, s, k, q) * second
    rhs = g1(n, k, t, s, q)
    return lhs < rhs, lhs, rhs, k, "f2(k) ([n-t k-t] + q^2[k-t 1][t 1][n-t-1 k-t-1] + s) < g1"


def _claim_g1_product_lower(p):
    n, k, t, q = p.n, p.k, p.t, p.q
    base = qbinom(n - t, k - t, q)
    lhs = g1(n, k, t, p.s, q)
    rhs = (base - q ** ((k - t) * (k + 1 - t)) * qbinom(n - k - 1, k - t, q)) * (base + q ** (k - t + 1) * _line(t, q))
    return lhs > rhs, lhs, rhs, None, "g1 > (...)([n-t k-t] + q^(k-t+1)[t 1])"


def _claim_g1_lt_g2(p):
    lhs, rhs = g1(p.n, p.k, p.t, p.s, p.q), g2(p.n, p.k, p.t, p.q)
    return lhs < rhs, lhs, rhs, None, "g1 < g2"


def _claim_eq1(p):
    r = alt_sum_identity(p.n, p.k, p.t, p.q)
    return r.holds, r.lhs, r.rhs, None, "alternating sum identity"


def _claim_alt_ratio(p):
    terms = alt_sum_terms(p.n, p.k, p.t, p.q)
    holds = all(b < a for a, b in zip(terms, terms[1:]))
    if len(terms) < 2:
        return True, None, None, None, "fewer than two terms"
    i = max(range(len(terms) - 1), key=lambda j: Fraction(terms[j + 1], terms[j]))
    return holds, terms[i + 1], terms[i], None, f"a_{i + 2} vs a_{i + 1}"


# lemma id -> (hypothesis key, claim)
_LEMMAS: dict[str, tuple[str, Callable[[ParamPoint], tuple]]] = {
    "basic-bounds.i": ("n>k", _claim_i),
    "basic-bounds.ii-lower": ("n>k", _claim_ii_lower),
    "basic-bounds.ii-upper": ("n>k", _claim_ii_upper),
    "basic-bounds.iii-lower": ("n>k", _claim_iii_lower),
    "basic-bounds.iii-upper": ("n>k", _claim_iii_upper),
    "basic-bounds.iv": ("n>k", _claim_pascal),
    "basic-bounds.v": ("basic-v", _claim_v),
    "qbinom-symmetry": ("n>=k", _claim_symmetry),
    "seven-halves": ("n>=k", _claim_seven_halves),
    "f1-decreasing": ("f1-lemma", _claim_f1_decreasing),
    "f1-floor": ("f1-lemma", _claim_f1_floor),
    "g1-25-26": ("g1-lemma", _claim_g1_25_26),
    "g1-squared-sum": ("g1-lemma", _claim_g1_squared),
    "f3-decreasing": ("g1-lemma", _claim_f3_decreasing),
    "f2-increasing": ("g1-lemma", _claim_f2_increasing),
    "f2-f3-product": ("g1-lemma", _claim_f2_f3_product),
    "g1-product-lower": ("g1-lemma", _claim_g1_product_lower),
    "g1-lt-g2": ("g1-g2", _claim_g1_lt_g2),
    "eq1": ("eq1", _claim_eq1),
    "alt-sum-ratio": ("g1-lemma", _claim_alt_ratio),
}

LEMMA_IDS = tuple(_LEMMAS)
HYPOTHESIS_IDS = tuple(sorted(set(_HYP) | set(_LEMMAS)))


def _hyp_key(lemma_id: str) -> str:
    if lemma_id in _LEMMAS:
        return _LEMMAS[lemma_id][0]
    if lemma_id in _HYP:
        return lemma_id
    raise UnknownLemma(lemma_id)


def hypothesis_check(lemma_id: str, point: ParamPoint) -> bool:
    """Evaluate the hypotheses of a lemma (or a named hypothesis set)."""
    return not failed_hypotheses(_hyp_key(lemma_id), point)


def check_point(lemma_id: str, point: ParamPoint) -> LemmaVerdict:
    if lemma_id not in _LEMMAS:
        raise UnknownLemma(lemma_id)
    met = hypothesis_check(lemma_id, point)
    try:
        holds, lhs, rhs, x, detail = _LEMMAS[lemma_id][1](point)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        if met:
            raise
        return LemmaVerdict(lemma_id, point, False, False, None, None, None, f"not evaluable: {exc}")
    return LemmaVerdict(lemma_id, point, met, holds, lhs, rhs, x, detail)


def _check_args(args):
    return check_point(*args)


def lemma_grid_check(lemma_id: str, grid: Iterable[ParamPoint], jobs: int = 1) -> list[LemmaVerdict]:
    """Verdicts for every grid point, in grid order."""
    if lemma_id not in _LEMMAS:
        raise UnknownLemma(lemma_id)
    points = list(grid)
    if jobs > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_check_args, [(lemma_id, p) for p in points], chunksize=8))
    return [check_point(lemma_id, p) for p in points]


# --- default grids ------------------------------------------------------------------

def _n_values(n0: int) -> list[int]:
    return [n0, n0 + 1, n0 + 3]


def default_lemma_grid(lemma_id: str) -> list[ParamPoint]:
    """Grid of hypothesis-satisfying points with n set minimally (plus two larger n)."""
    if lemma_id not in _LEMMAS:
        raise UnknownLemma(lemma_id)
    key = _LEMMAS[lemma_id][0]
    pts: list[ParamPoint] = []
    if key in ("n>k", "n>=k"):
        for q in (2, 3, 4, 5):
            for n in range(2, 13):
                for k in range(1, n):
                    pts.append(ParamPoint(n=n, k=k, t=1, s=1, q=q))
    elif key == "basic-v":
        for q in (2, 3):
            for t in (1, 2, 3):
                for k in range(t, t + 4):
                    for n in _n_values(2 * k - t + 1):
                        pts.append(ParamPoint(n=n, k=k, t=t, s=1, q=q))
    elif key == "eq1":
        for q in (2, 3):
            for t in (1, 2, 3):
                for k in range(t, t + 6):
                    for n in range(k + 1, 21):
                        pts.append(ParamPoint(n=n, k=k, t=t, s=1, q=q))
    elif key == "f1-lemma":
        for q in (2, 3):
            for s in (1, 2):
                for t in (1, 2, 3):
                    for k in range(t + 1, t + 4):
                        for l in (1, 2):
                            n0 = min_n(2 * k + 2 * t + 1, 7 * s * l, q)
                            for n in _n_values(n0):
                                pts.append(ParamPoint(n=n, k=k, t=t, s=s, q=q, l=l))
    elif key == "g1-lemma":
        for q in (2, 3):
            for s in (1, 2):
                for t in (1, 2, 3):
                    for k in range(t + 2, t + 5):
                        n0 = min_n(3 * k + 3 * t + 1, 13 * s, q)
                        for n in _n_values(n0):
                            pts.append(ParamPoint(n=n, k=k, t=t, s=s, q=q))
    elif key == "g1-g2":
        for q in (2, 3):
            for s in (1, 2):
                for t in (3, 4):
                    for k in range(t + 2, 2 * t + 1):
                        n0 = min_n(3 * k + 3 * t + 1, 13 * s, q)
                        for n in _n_values(n0):
                            pts.append(ParamPoint(n=n, k=k, t=t, s=s, q=q))
    return pts

