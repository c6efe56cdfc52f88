"""Command-line front end.

Exit codes: 0 when every verdict passes, 1 when some claim fails, 2 for
usage errors and violated hypotheses.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io as qio
from .config import load_config
from .errors import QGrassError
from .families import (
    ExampleChoices,
    Family,
    build_example_pair,
    build_h1,
    disjointness_sequence,
    maximal_closure,
    tau_and_covers,
)
from .qcalc import (
    LEMMA_IDS,
    ParamPoint,
    alt_sum_identity,
    default_lemma_grid,
    f_eval,
    g_eval,
    lemma_grid_check,
    nprime_count,
    qbinom,
)
from .subspace import Ambient, enumerate_containing, grassmannian_enumerate, unit_span
from .verifier import (
    CONSTRUCTIONS,
    COUNT_KINDS,
    SUITES,
    certify_pair,
    count_vs_formula,
    grid_report,
    render_results,
    verify_construction,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _require(a, *names):
    for name in names:
        if getattr(a, name) is None:
            raise SystemExit(f"error: --{name} is required for {a.command}")


def _point(a) -> ParamPoint:
    _require(a, "n", "k", "t", "q")
    return ParamPoint(n=a.n, k=a.k, t=a.t, s=a.s, q=a.q, x=a.x, l=a.l)


def _cert_exit(cert, out):
    _emit(cert.to_json(), out)
    return EXIT_OK if cert.passed else EXIT_FAIL


# --- subcommands -----------------------------------------------------------------

def cmd_qbinom(a, cfg):
    _require(a, "q")
    print(qbinom(a.a, a.b, a.q))
    return EXIT_OK


def cmd_nprime(a, cfg):
    _require(a, "l", "q")
    print(nprime_count(a.m1, a.h1, a.m, a.h, a.e, a.l, a.q))
    return EXIT_OK


def cmd_f_eval(a, cfg):
    print(f_eval(a.which, _point(a)))
    return EXIT_OK


def cmd_g_eval(a, cfg):
    print(g_eval(a.which, _point(a)))
    return EXIT_OK


def cmd_identity(a, cfg):
    p = _point(a)
    if a.enumerate:
        kind = "eq1" if a.which == "eq1" else "eq66-upper"
        return _cert_exit(count_vs_formula(kind, p.as_dict(), cfg.enumeration_budget), a.out)
    alt = alt_sum_identity(p.n, p.k, p.t, p.q)
    if a.which == "eq1":
        res = {"lhs": str(alt.lhs), "rhs": str(alt.rhs), "terms": [str(x) for x in alt.terms],
               "ratios_below_one": alt.ratios_below_one, "holds": alt.holds}
    else:
        bound = qbinom(p.k + 1 - p.t, 1, p.q) * qbinom(p.n - p.t - 1, p.k - p.t - 1, p.q)
        res = {"count": str(alt.lhs), "bound": str(bound), "holds": alt.lhs <= bound}
    _emit(json.dumps(res, indent=2) + "\n", a.out)
    return EXIT_OK if res["holds"] else EXIT_FAIL


def _read_grid(spec: str) -> list[dict]:
    text = spec if spec.lstrip().startswith(("[", "{")) else Path(spec).read_text()
    data = json.loads(text)
    return [data] if isinstance(data, dict) else data


def cmd_lemma_check(a, cfg):
    if a.grid and a.grid != "default":
        grid = [ParamPoint(**{k: v for k, v in d.items() if k != "lemma_id"}) for d in _read_grid(a.grid)]
    elif a.n is not None:
        grid = [_point(a)]
    else:
        grid = default_lemma_grid(a.id)
    verdicts = lemma_grid_check(a.id, grid, jobs=a.jobs or cfg.jobs)
    _emit(render_results(verdicts, a.format or "csv"), a.out)
    failed = [v for v in verdicts if v.hypothesis_met and not v.claim_holds]
    return EXIT_FAIL if failed else EXIT_OK


def cmd_count(a, cfg):
    params = {k: getattr(a, k) for k in ("q", "n", "k", "t", "s", "x", "l", "e", "m", "h", "m1", "h1")
              if getattr(a, k) is not None}
    return _cert_exit(count_vs_formula(a.kind, params, cfg.enumeration_budget), a.out)


def cmd_enumerate(a, cfg):
    _require(a, "q", "n", "k")
    amb = Ambient(a.q, a.n)
    if a.t:
        subs = enumerate_containing(unit_span(amb, range(a.t)), a.k, cfg.enumeration_budget)
    else:
        subs = grassmannian_enumerate(amb, a.k, cfg.enumeration_budget)
    fam = Family(amb, a.k, subs)
    if a.count:
        print(len(fam))
    else:
        _emit(qio.dumps(qio.family_to_dict(fam)), a.out)
    return EXIT_OK


def cmd_construct(a, cfg):
    _require(a, "q", "n", "k", "t")
    params = {"q": a.q, "n": a.n, "k": a.k, "t": a.t, "s": a.s}
    choices = ExampleChoices()
    cert = verify_construction(a.which, params, cfg.enumeration_budget, choices)
    if a.out_f or a.out_g:
        if a.which == "theorem-extremal":
            amb = Ambient(a.q, a.n)
            fam_f = fam_g = build_h1(amb.full(), unit_span(amb, range(a.t)), a.k, cfg.enumeration_budget)
        else:
            fam_f, fam_g = build_example_pair(a.which, a.q, a.n, a.k, a.t, a.s, choices, cfg.enumeration_budget)
        if a.out_f:
            qio.dump_family(fam_f, a.out_f)
        if a.out_g:
            qio.dump_family(fam_g, a.out_g)
    return _cert_exit(cert, a.out)


def cmd_certify_pair(a, cfg):
    fam_f, fam_g = qio.load_family(a.F), qio.load_family(a.G)
    return _cert_exit(certify_pair(fam_f, fam_g, a.t, a.s, cfg.enumeration_budget), a.out)


def cmd_tau(a, cfg):
    fam = qio.load_family(a.F)
    res = tau_and_covers(fam, a.t, cfg.enumeration_budget)
    out = {"t": res.t, "tau": res.tau, "minimal_covers": [c.rows() for c in res.minimal_covers]}
    _emit(qio.dumps(out), a.out)
    return EXIT_OK


def cmd_closure(a, cfg):
    fam_f, fam_g = qio.load_family(a.F), qio.load_family(a.G)
    cf, cg = maximal_closure(fam_f, fam_g, a.t, a.s, cfg.enumeration_budget)
    if a.out_f:
        qio.dump_family(cf, a.out_f)
    if a.out_g:
        qio.dump_family(cg, a.out_g)
    _emit(qio.dumps({"size_f": len(cf), "size_g": len(cg)}), a.out)
    return EXIT_OK


def cmd_sequence(a, cfg):
    fam_f, f_list = qio.load_family_listing(a.F)
    fam_g, g_list = qio.load_family_listing(a.G)
    trace = disjointness_sequence(fam_f, fam_g, a.t)
    checks = trace.validate(fam_f, fam_g)
    _emit(qio.dumps(qio.trace_to_dict(trace, f_list, g_list, checks)), a.out)
    return EXIT_OK if all(checks.values()) else EXIT_FAIL


def cmd_suite(a, cfg):
    out = a.out
    if out is None:
        out = str(Path(cfg.output_dir) / f"{a.name}.{a.format or 'json'}")
    summary = grid_report(a.name, out, cfg, fmt=a.format, jobs=a.jobs)
    print(json.dumps({**summary.as_dict(), "report": out}))
    return EXIT_OK if summary.ok else EXIT_FAIL


# --- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    for name in ("q", "n", "k", "t", "x", "l"):
        common.add_argument(f"--{name}", type=int)
    common.add_argument("--s", type=int, default=0)
    common.add_argument("--out", help="output file (stdout if omitted)")
    common.add_argument("--budget", type=int, help="enumeration budget")
    common.add_argument("--jobs", type=int)
    common.add_argument("--format", choices=("json", "csv"))

    parser = argparse.ArgumentParser(prog="qgrass", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="JSON config (default: $QGRASS_CONFIG)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("qbinom", cmd_qbinom, "Gaussian binomial [a b]_q")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = add("nprime", cmd_nprime, "type-(m,h) subspaces above a fixed type-(m1,h1) one")
    for name in ("m1", "h1", "m", "h", "e"):
        p.add_argument(f"--{name}", type=int, required=True)

    p = add("f-eval", cmd_f_eval, "evaluate f1, f2 or f3")
    p.add_argument("--which", choices=("f1", "f2", "f3"), required=True)
    p = add("g-eval", cmd_g_eval, "evaluate g1, g2 or g3")
    p.add_argument("--which", choices=("g1", "g2", "g3"), required=True)

    p = add("identity", cmd_identity, "alternating-sum identity or its one-term upper bound")
    p.add_argument("--which", choices=("eq1", "eq66"), default="eq1")
    p.add_argument("--enumerate", action="store_true", help="also count by enumeration")

    p = add("lemma-check", cmd_lemma_check, "check a lemma on a grid")
    p.add_argument("--id", choices=LEMMA_IDS, required=True)
    p.add_argument("--grid", help="JSON file, inline JSON, or 'default'")

    p = add("count", cmd_count, "enumerated count against its closed form")
    p.add_argument("--kind", choices=tuple(COUNT_KINDS), required=True)
    for name in ("e", "m", "h", "m1", "h1"):
        p.add_argument(f"--{name}", type=int)

    p = add("enumerate", cmd_enumerate, "list k-subspaces (containing the first t units if --t)")
    p.add_argument("--count", action="store_true", help="print only the count")

    p = add("construct", cmd_construct, "build and certify an extremal construction")
    p.add_argument("--which", choices=CONSTRUCTIONS, required=True)
    p.add_argument("--out-f")
    p.add_argument("--out-g")

    p = add("certify-pair", cmd_certify_pair, "certify a pair of family files")
    p.add_argument("--F", required=True)
    p.add_argument("--G", required=True)

    p = add("tau", cmd_tau, "t-covering number of a family file")
    p.add_argument("--F", required=True)

    p = add("closure", cmd_closure, "greedy maximal closure of a pair")
    p.add_argument("--F", required=True)
    p.add_argument("--G", required=True)
    p.add_argument("--out-f")
    p.add_argument("--out-g")

    p = add("sequence", cmd_sequence, "run and validate the disjointness sequence")
    p.add_argument("--F", required=True)
    p.add_argument("--G", required=True)

    p = add("suite", cmd_suite, "run a named report suite")
    p.add_argument("--name", required=True, help=f"one of {', '.join(SUITES)} or a config grid")
    return parser


def run_command(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = load_config(a.config)
        if a.budget is not None:
            cfg.enumeration_budget = a.budget
        if a.jobs is not None:
            cfg.jobs = a.jobs
        if a.command in ("certify-pair", "tau", "closure", "sequence") and a.t is None:
            parser.error(f"--t is required for {a.command}")
        return a.func(a, cfg)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
        return EXIT_USAGE if exc.code else EXIT_OK
    except (QGrassError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
