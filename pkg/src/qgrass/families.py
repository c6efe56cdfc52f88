"""Families of k-subspaces: intersection predicates, t-covers and constructions."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .errors import (
    AmbientMismatch,
    ChoiceOutOfRange,
    DimensionMismatch,
    DimensionOrder,
    EmptyFamily,
    HypothesisViolated,
    NotContained,
)
from .qcalc import LemmaVerdict, ParamPoint, failed_hypotheses, qbinom
from .subspace import (
    Ambient,
    Subspace,
    contains,
    enumerate_between,
    enumerate_containing,
    enumerate_type,
    grassmannian_enumerate,
    intersect_dim,
    meet_dim,
    unit_span,
)

__all__ = [
    "Family",
    "PairPredicate",
    "CoverResult",
    "SequenceTrace",
    "disjoint_set",
    "pair_predicate",
    "tau_and_covers",
    "build_h1",
    "build_h2",
    "build_m",
    "build_example_pair",
    "maximal_closure",
    "is_maximal",
    "disjointness_sequence",
    "cover_bound_check",
    "common_meet",
]


class Family:
    """A deduplicated set of k-subspaces kept in canonical order."""

    __slots__ = ("ambient", "k", "members", "_set")

    def __init__(self, ambient: Ambient, k: int, members: Iterable[Subspace] = ()):
        uniq = set(members)
        for m in uniq:
            if m.ambient != ambient:
                raise AmbientMismatch(f"member in {m.ambient}, family in {ambient}")
            if m.dim != k:
                raise DimensionMismatch(f"member of dimension {m.dim} in a family of {k}-subspaces")
        self.ambient = ambient
        self.k = k
        self.members: tuple[Subspace, ...] = tuple(sorted(uniq))
        self._set = frozenset(uniq)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, s):
        return s in self._set

    def __eq__(self, other):
        if not isinstance(other, Family):
            return NotImplemented
        return (self.ambient, self.k, self._set) == (other.ambient, other.k, other._set)

    def __hash__(self):
        return hash((self.ambient, self.k, self._set))

    def __repr__(self):
        return f"Family(q={self.ambient.q}, n={self.ambient.n}, k={self.k}, size={len(self)})"

    def index(self, s: Subspace) -> int:
        return self.members.index(s)

    def union(self, other: Iterable[Subspace]) -> "Family":
        return Family(self.ambient, self.k, self._set.union(other))

    def difference(self, other: Iterable[Subspace]) -> "Family":
        return Family(self.ambient, self.k, self._set.difference(other))

    def containing(self, h: Subspace) -> "Family":
        """The subfamily of members that contain h."""
        return Family(self.ambient, self.k, [m for m in self.members if contains(m, h)])


def _same_ambient(*objs):
    amb = objs[0].ambient
    for o in objs[1:]:
        if o.ambient != amb:
            raise AmbientMismatch(f"{o.ambient} vs {amb}")


def _same_pair(f: Family, g: Family):
    _same_ambient(f, g)
    if f.k != g.k:
        raise DimensionMismatch(f"families of {f.k}- and {g.k}-subspaces")


def disjoint_set(g: Family, f: Subspace, t: int) -> Family:
    """Members G of g with dim(G & f) < t."""
    _same_ambient(g, f)
    return Family(g.ambient, g.k, [G for G in g if meet_dim(G, f) < t])


@dataclass(frozen=True)
class PairPredicate:
    cross_t: bool
    s_almost: bool
    max_violations: int
    max_from_f: int  # max over F of |D_G(F; t)|
    max_from_g: int  # max over G of |D_F(G; t)|


def _violation_counts(f: Family, g: Family, t: int) -> tuple[list[int], list[int]]:
    cf = [0] * len(f)
    cg = [0] * len(g)
    for i, F in enumerate(f.members):
        for j, G in enumerate(g.members):
            if meet_dim(F, G) < t:
                cf[i] += 1
                cg[j] += 1
    return cf, cg


def pair_predicate(fam_f: Family, fam_g: Family, t: int, s: int) -> PairPredicate:
    _same_pair(fam_f, fam_g)
    cf, cg = _violation_counts(fam_f, fam_g, t)
    mf = max(cf, default=0)
    mg = max(cg, default=0)
    worst = max(mf, mg)
    return PairPredicate(cross_t=worst == 0, s_almost=worst <= s, max_violations=worst,
                         max_from_f=mf, max_from_g=mg)


@dataclass(frozen=True)
class CoverResult:
    tau: int
    minimal_covers: tuple[Subspace, ...]
    t: int


def is_t_cover(T: Subspace, fam: Iterable[Subspace], t: int) -> bool:
    return all(meet_dim(T, F) >= t for F in fam)


def tau_and_covers(fam: Family, t: int, budget: int | None = None) -> CoverResult:
    """t-covering number by ascending exhaustive search, with every minimum cover.

    The whole ambient space is always a t-cover when t <= k, so the search
    terminates by d = n at the latest.
    """
    if not len(fam):
        raise EmptyFamily("t-covering number of an empty family")
    amb = fam.ambient
    if t > fam.k:
        raise DimensionOrder(f"no t-cover exists for t={t} > k={fam.k}")
    for d in range(max(t, 0), amb.n + 1):
        covers = tuple(T for T in grassmannian_enumerate(amb, d, budget) if is_t_cover(T, fam.members, t))
        if covers:
            return CoverResult(tau=d, minimal_covers=covers, t=t)
    raise AssertionError("the ambient space is always a t-cover")  # pragma: no cover


def build_h1(x: Subspace, e: Subspace, k: int, budget: int | None = None) -> Family:
    """k-subspaces of x that contain e."""
    _same_ambient(x, e)
    if not contains(x, e):
        raise NotContained("E is not a subspace of X")
    if not e.dim <= k <= x.dim:
        raise DimensionOrder(f"need dim E <= k <= dim X, got {e.dim}, {k}, {x.dim}")
    return Family(x.ambient, k, enumerate_between(e, x, k, budget))


def build_h2(x: Subspace, e: Subspace, k: int, budget: int | None = None) -> Family:
    """k-subspaces F of the ambient with F & x = e exactly."""
    _same_ambient(x, e)
    if not contains(x, e):
        raise NotContained("E is not a subspace of X")
    amb = x.ambient
    if not e.dim <= k <= amb.n:
        return Family(amb, k)
    return Family(amb, k, [F for F in enumerate_containing(e, k, budget) if meet_dim(F, x) == e.dim])


def build_m(l: Subspace, k: int, t: int, budget: int | None = None) -> Family:
    """k-subspaces meeting l in dimension at least t."""
    amb = l.ambient
    if not 0 <= t <= min(k, l.dim):
        raise DimensionOrder(f"need 0 <= t <= min(k, dim L), got t={t}")
    members: list[Subspace] = []
    for h in range(t, min(k, l.dim) + 1):
        if k - h <= amb.n - l.dim:
            members.extend(enumerate_type(l, k, h, budget))
    return Family(amb, k, members)


def common_meet(families: Sequence[Family]) -> tuple[Subspace, bool]:
    """Intersection of every member of every family.

    Returns ``(meet, empty)``; an empty union folds to the whole space and
    ``empty`` is then True so callers can flag it.
    """
    amb = families[0].ambient
    acc = amb.full()
    empty = True
    for fam in families:
        for m in fam:
            empty = False
            _, acc = intersect_dim(acc, m)
            if acc.dim == 0:
                return acc, False
    return acc, empty


def _pick(candidates: Sequence[Subspace], size: int, indices: Sequence[int] | None, name: str) -> list[Subspace]:
    if indices is None:
        if size > len(candidates):
            raise ChoiceOutOfRange(f"{name}: need {size} of {len(candidates)} candidates")
        return list(candidates[:size])
    idx = list(indices)
    if len(idx) != size or len(set(idx)) != size:
        raise ChoiceOutOfRange(f"{name}: need {size} distinct indices, got {idx}")
    for i in idx:
        if not 0 <= i < len(candidates):
            raise ChoiceOutOfRange(f"{name}: index {i} outside 0..{len(candidates) - 1}")
    return [candidates[i] for i in idx]


@dataclass
class ExampleChoices:
    """Subspace choices for the two example constructions.

    Unset subspaces default to spans of leading unit vectors; unset subset
    indices default to the first candidates in canonical order.
    """

    x: Subspace | None = None
    e: Subspace | None = None
    l: Subspace | None = None
    a_indices: Sequence[int] | None = None
    b_indices: Sequence[int] | None = None
    used: dict = field(default_factory=dict)


def build_example_pair(which: str, q: int, n: int, k: int, t: int, s: int = 1,
                       choices: ExampleChoices | None = None,
                       budget: int | None = None) -> tuple[Family, Family]:
    """Build the 'almost' pair (H1(V,E;k) minus A, H1(V,E;k) plus B) or the
    'cover' pair (H1(V,L;k), M(L;k,t)).

    The subspaces actually used are recorded in ``choices.used``.
    """
    choices = choices or ExampleChoices()
    amb = Ambient(q, n)
    point = ParamPoint(n=n, k=k, t=t, s=s, q=q)
    if which == "almost":
        failed = failed_hypotheses("example-almost", point)
        if failed:
            raise HypothesisViolated(failed[0])
        X = choices.x if choices.x is not None else unit_span(amb, range(k + 1))
        E = choices.e if choices.e is not None else unit_span(amb, range(t))
        if X.dim != k + 1 or E.dim != t:
            raise DimensionMismatch("X must be a (k+1)-space and E a t-space")
        if not contains(X, E):
            raise NotContained("E is not a subspace of X")
        h1 = build_h1(amb.full(), E, k, budget)
        h2x = build_h2(X, E, k, budget)
        a = _pick(h2x.members, len(h2x) - s, choices.a_indices, "A")
        outside = [F for F in enumerate_between(amb.zero(), X, k, budget) if not contains(F, E)]
        outside.sort()
        b_size = min(s, q ** (k - t + 1) * qbinom(t, 1, q))
        b = _pick(outside, b_size, choices.b_indices, "B")
        choices.used = {"X": X, "E": E, "A": a, "B": b}
        return h1.difference(a), h1.union(b)
    if which == "cover":
        failed = failed_hypotheses("example-cover", point)
        if failed:
            raise HypothesisViolated(failed[0])
        L = choices.l if choices.l is not None else unit_span(amb, range(t + 1))
        if L.dim != t + 1:
            raise DimensionMismatch("L must be a (t+1)-space")
        choices.used = {"L": L}
        return build_h1(amb.full(), L, k, budget), build_m(L, k, t, budget)
    raise ValueError(f"unknown example {which!r}")


class _PairState:
    """Violation counters over the whole Grassmannian, for incremental closure."""

    def __init__(self, fam_f: Family, fam_g: Family, t: int, s: int, budget):
        amb, k = fam_f.ambient, fam_f.k
        self.universe = list(grassmannian_enumerate(amb, k, budget))
        index = {u: i for i, u in enumerate(self.universe)}
        size = len(self.universe)
        self.nbrs: list[list[int]] = [[] for _ in range(size)]
        for i in range(size):
            ui = self.universe[i]
            for j in range(i, size):
                if meet_dim(ui, self.universe[j]) < t:
                    self.nbrs[i].append(j)
                    if j != i:
                        self.nbrs[j].append(i)
        self.s = s
        self.side = [[False] * size, [False] * size]   # membership in F, G
        self.count = [[0] * size, [0] * size]         # count[0][i]: members of G disjoint from u_i
        for side, fam in enumerate((fam_f, fam_g)):
            for m in fam:
                self.add(side, index[m])

    def add(self, side: int, i: int):
        self.side[side][i] = True
        for j in self.nbrs[i]:
            self.count[1 - side][j] += 1

    def can_add(self, side: int, i: int) -> bool:
        if self.side[side][i] or self.count[side][i] > self.s:
            return False
        other = self.side[1 - side]
        cnt = self.count[1 - side]
        return all(cnt[j] + 1 <= self.s for j in self.nbrs[i] if other[j])

    def family(self, side: int, amb: Ambient, k: int) -> Family:
        return Family(amb, k, [u for u, on in zip(self.universe, self.side[side]) if on])


def maximal_closure(fam_f: Family, fam_g: Family, t: int, s: int,
                    budget: int | None = None) -> tuple[Family, Family]:
    """Greedily extend an s-almost cross-t-intersecting pair until maximal.

    Rounds alternate F then G; each turn adds the first subspace (canonical
    order) that keeps the pair s-almost cross-t-intersecting.
    """
    _same_pair(fam_f, fam_g)
    if not pair_predicate(fam_f, fam_g, t, s).s_almost:
        raise HypothesisViolated("input pair is not s-almost cross-t-intersecting")
    state = _PairState(fam_f, fam_g, t, s, budget)
    size = len(state.universe)
    while True:
        progress = False
        for side in (0, 1):
            i = next((i for i in range(size) if state.can_add(side, i)), None)
            if i is not None:
                state.add(side, i)
                progress = True
        if not progress:
            break
    amb, k = fam_f.ambient, fam_f.k
    return state.family(0, amb, k), state.family(1, amb, k)


def is_maximal(fam_f: Family, fam_g: Family, t: int, s: int, budget: int | None = None) -> bool:
    """True iff adding any absent k-subspace to either side breaks the property."""
    for u in grassmannian_enumerate(fam_f.ambient, fam_f.k, budget):
        if u not in fam_f and pair_predicate(fam_f.union([u]), fam_g, t, s).s_almost:
            return False
        if u not in fam_g and pair_predicate(fam_f, fam_g.union([u]), t, s).s_almost:
            return False
    return True


@dataclass(frozen=True)
class SequenceTrace:
    t: int
    f_seq: tuple[Subspace, ...]
    g_seq: tuple[Subspace, ...]
    survivors: tuple[int, ...]  # |V_1|, |V_2|, ..., |V_{m+1}|
    cover_witness: Subspace | None = None

    @property
    def m(self) -> int:
        return len(self.f_seq)

    def validate(self, fam_f: Family, fam_g: Family) -> dict[str, bool]:
        """Re-check the three sequence properties directly from the trace.

        With a cover witness the run stopped early, so the covering property
        is replaced by checking that the witness really is a t-cover of G.
        """
        t = self.t
        out = {
            "i": all(meet_dim(F, G) < t for F, G in zip(self.f_seq, self.g_seq)),
            "ii": all(meet_dim(self.f_seq[i], self.g_seq[j]) >= t
                      for i in range(self.m) for j in range(i)),
        }
        if self.cover_witness is None:
            covered = set()
            for G in self.g_seq:
                covered.update(disjoint_set(fam_f, G, t))
            out["iii"] = covered == set(fam_f.members)
        else:
            out["iii"] = self.cover_witness in fam_f and is_t_cover(self.cover_witness, fam_g, t)
        return out


def sequence_length_bound(k: int, t: int) -> int:
    return comb(2 * k - 2 * t + 2, k - t + 1)


def disjointness_sequence(fam_f: Family, fam_g: Family, t: int) -> SequenceTrace:
    """Run the F_i / G_i / V_i peeling procedure with least-element picks."""
    _same_pair(fam_f, fam_g)
    remaining = list(fam_f.members)
    f_seq: list[Subspace] = []
    g_seq: list[Subspace] = []
    survivors = [len(remaining)]
    while remaining:
        F = remaining[0]
        dg = disjoint_set(fam_g, F, t)
        if not len(dg):
            return SequenceTrace(t, tuple(f_seq), tuple(g_seq), tuple(survivors), cover_witness=F)
        G = dg.members[0]
        f_seq.append(F)
        g_seq.append(G)
        remaining = [X for X in remaining if meet_dim(X, G) >= t]
        survivors.append(len(remaining))
    return SequenceTrace(t, tuple(f_seq), tuple(g_seq), tuple(survivors))


def cover_bound_rhs(n: int, k: int, t: int, s: int, q: int, tau: int, dim_h: int) -> int:
    r = qbinom(k - t + 1, 1, q)
    return r ** (tau - dim_h) * qbinom(n - tau, k - tau, q) + s * sum(r**i for i in range(tau - dim_h))


def cover_bound_check(fam_f: Family, fam_g: Family, h: Subspace, t: int, s: int,
                      budget: int | None = None, tau_g: int | None = None) -> LemmaVerdict:
    """Compare |F_H| with the covering-number bound for one probe subspace H."""
    _same_pair(fam_f, fam_g)
    _same_ambient(fam_f, h)
    amb, k = fam_f.ambient, fam_f.k
    point = ParamPoint(n=amb.n, k=k, t=t, s=s, q=amb.q, x=h.dim)
    failed = failed_hypotheses("cover-bound", point)
    if failed:
        raise HypothesisViolated(failed[0])
    if not pair_predicate(fam_f, fam_g, t, s).s_almost:
        raise HypothesisViolated("pair is not s-almost cross-t-intersecting")
    if tau_g is None:
        tau_g = tau_and_covers(fam_g, t, budget).tau
    if tau_g > k:
        raise HypothesisViolated("tau_t(G) <= k")
    if not 1 <= h.dim <= tau_g:
        raise HypothesisViolated("1 <= dim H <= tau_t(G)")
    lhs = len(fam_f.containing(h))
    rhs = cover_bound_rhs(amb.n, k, t, s, amb.q, tau_g, h.dim)
    return LemmaVerdict("cover-bound", point, True, lhs <= rhs, lhs, rhs, h.dim, f"tau_t(G)={tau_g}")
