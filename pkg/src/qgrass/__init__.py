"""Exact verification toolkit for intersecting families of subspaces over finite fields."""

from .errors import *  # noqa: F401,F403
from .field import FieldTable, build_field_table, field_eval
from .subspace import (
    Ambient,
    Subspace,
    canonicalize,
    contains,
    enumerate_between,
    enumerate_containing,
    enumerate_type,
    grassmannian_enumerate,
    intersect_dim,
    meet_dim,
    sum_span,
    unit_span,
)
from .qcalc import (
    ParamPoint,
    LemmaVerdict,
    alt_sum_identity,
    f_eval,
    g_eval,
    hypothesis_check,
    lemma_grid_check,
    nprime_count,
    qbinom,
)
from .families import (
    Family,
    build_example_pair,
    build_h1,
    build_h2,
    build_m,
    cover_bound_check,
    disjointness_sequence,
    maximal_closure,
    pair_predicate,
    tau_and_covers,
)
from .verifier import Certificate, certify_pair, count_vs_formula, grid_report, verify_construction

__version__ = "0.1.0"
