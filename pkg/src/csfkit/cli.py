"""Command-line front end: expansions, oracle checks, verification sweeps,
and fiber inspection.

Exit codes: 0 success/verified, 1 mathematical violation found, 2 usage or
parameter error, 3 resource budget exceeded.  The degree budget defaults to
20 and can be overridden through the environment variable ``CSFKIT_MAX_N``;
the oracle is additionally capped at 26 edges.  All output ordering is
deterministic regardless of the worker count.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .compositions import format_parts, parse_composition
from .coefficients import (
    WClass,
    classify,
    coeff_c_doubleprime,
    coeff_D,
    fiber,
    psi,
    solve_psqt,
)
from .errors import ResourceLimitError
from .graphs import (
    FAMILIES,
    build_family_graph,
    closed_form_cycle_chord,
    closed_form_theta,
    expansion_closed_form,
    family_degree,
    csf_pbasis,
)
from .symfunc import evector_to_p, first_difference
from .verify import SUITES, SweepConfig, run_suite

DEFAULT_MAX_N = 20
CLI_ORACLE_EDGE_BUDGET = 26

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _n_budget() -> int:
    raw = os.environ.get("CSFKIT_MAX_N", "").strip()
    if not raw:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"CSFKIT_MAX_N must be an integer, got {raw!r}") from None


def _family_params(args: argparse.Namespace) -> dict:
    return {key: getattr(args, key, None) for key in ("n", "l", "a", "b", "c")}


def _emit_grouped(grouped, fmt: str, out) -> None:
    if fmt == "json":
        print(grouped.to_json(indent=2), file=out)
        return
    rows = [(format_parts(lam), str(coef)) for lam, coef in grouped.items_sorted()]
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(("partition", "coefficient"))
        writer.writerows(rows)
        return
    width = max((len(name) for name, _ in rows), default=9)
    print(f"{'partition'.ljust(width)}  coefficient", file=out)
    for name, coef in rows:
        print(f"{name.ljust(width)}  {coef}", file=out)


def cmd_expand(args: argparse.Namespace) -> int:
    params = _family_params(args)
    n = family_degree(args.family, **params)
    budget = _n_budget()
    if n > budget:
        raise ResourceLimitError(f"degree {n} exceeds the budget {budget}")
    expansion = expansion_closed_form(
        args.family, variant=args.variant, form=args.form, **params
    )
    _emit_grouped(expansion.grouped_by_rho(), args.format, sys.stdout)
    return EXIT_OK


def cmd_oracle_check(args: argparse.Namespace) -> int:
    params = _family_params(args)
    n = family_degree(args.family, **params)
    budget = _n_budget()
    if n > budget:
        raise ResourceLimitError(f"degree {n} exceeds the budget {budget}")
    graph = build_family_graph(args.family, **params)
    if graph.edge_count > CLI_ORACLE_EDGE_BUDGET:
        raise ResourceLimitError(
            f"{graph.edge_count} edges exceed the oracle budget {CLI_ORACLE_EDGE_BUDGET}"
        )
    oracle = csf_pbasis(graph)
    # check every displayed form of the family's closed formula
    candidates = {}
    if args.family == "theta":
        a, b, c = params["a"], params["b"], params["c"]
        candidates["c"] = closed_form_theta(a, b, c, variant="c")
        candidates["c-prime"] = closed_form_theta(a, b, c, variant="c-prime")
    elif args.family == "cycle-chord":
        a, b = params["a"], params["b"]
        candidates["delta"] = closed_form_cycle_chord(a, b, form="delta")
        candidates["theta-sum"] = closed_form_cycle_chord(a, b, form="theta-sum")
    else:
        candidates["closed-form"] = expansion_closed_form(args.family, **params)
    for label, expansion in candidates.items():
        converted = evector_to_p(expansion.grouped_by_rho())
        diff = first_difference(converted, oracle)
        if diff is not None:
            lam, ours, theirs = diff
            print(
                f"MISMATCH {label} at partition {format_parts(lam)}: "
                f"closed form {ours}, oracle {theirs}"
            )
            return EXIT_VIOLATION
    print(
        f"OK {args.family} {tuple(v for v in params.values() if v is not None)}:"
        f" {len(candidates)} form(s) match the oracle exactly (n={n})"
    )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    budget = _n_budget()
    requested = [x for x in (args.n, args.n_max) if x is not None]
    if args.a is not None and args.b is not None:
        requested.append(args.a + args.b + 1)
    if requested and max(requested) > budget:
        raise ResourceLimitError(
            f"requested n {max(requested)} exceeds the budget {budget}"
        )
    config = SweepConfig(
        suite=args.suite,
        n=args.n,
        n_max=args.n_max,
        a=args.a,
        b=args.b,
        a_max=args.a_max,
        b_max=args.b_max,
        count=args.count,
        seed=args.seed,
        workers=args.workers,
    )
    result = run_suite(config, n_budget=budget)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "suite": result.name,
                    "checked": result.checked,
                    "violations": result.violations,
                    "notes": result.notes,
                },
                indent=2,
            )
        )
    else:
        for note in result.notes:
            print(f"note: {note}")
        for violation in result.violations:
            print(f"VIOLATION: {violation}")
    print(f"SUITE {result.name} CHECKED {result.checked} VIOLATIONS {len(result.violations)}")
    return EXIT_OK if result.ok else EXIT_VIOLATION


def cmd_fibers(args: argparse.Namespace) -> int:
    I = parse_composition(args.I)
    a, b = args.a, args.b
    if I.modulus != a + b + 1:
        raise ValueError(
            f"composition {I} has modulus {I.modulus}, expected a+b+1 = {a + b + 1}"
        )
    kind = classify(I, a)
    sol = solve_psqt(I, b)
    print(f"I = {I}   n = {I.modulus}   (a, b) = ({a}, {b})")
    print(f"class = {kind.wclass.value}   in_A = {'yes' if kind.in_A else 'no'}")
    print(f"p = {sol.p}  s = {sol.s}  q = {sol.q}  t = {sol.t}   q - p = {sol.q - sol.p}")
    print(f"w_I = {I.weight}   D_I = {coeff_D(I, a, b)}")
    if kind.wclass is WClass.W_GT:
        for r, H in enumerate(fiber(I, a, b), start=1):
            print(f"H_{r} = {H}   w = {H.weight}   D = {coeff_D(H, a, b)}")
        print(f"c'' = {coeff_c_doubleprime(I, a, b)}")
    elif kind.wclass is WClass.W_LE:
        print(f"psi(I) = {psi(I, a)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csfkit",
        description=(
            "Exact e-expansions of chromatic symmetric functions for paths, "
            "cycles, tadpoles, cycle-chords, theta graphs and clocks, with "
            "brute-force oracle checks and exhaustive verification sweeps."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    expand = sub.add_parser("expand", help="emit a grouped e-expansion")
    expand.add_argument("--family", required=True, choices=FAMILIES)
    for flag in ("n", "l", "a", "b", "c"):
        expand.add_argument(f"--{flag}", type=int)
    expand.add_argument("--format", choices=("text", "csv", "json"), default="text")
    expand.add_argument("--variant", choices=("c", "c-prime"), default="c",
                        help="theta coefficient variant")
    expand.add_argument("--form", choices=("delta", "theta-sum"), default="delta",
                        help="cycle-chord display form")
    expand.set_defaults(handler=cmd_expand)

    oracle = sub.add_parser(
        "oracle-check", help="compare a closed form with the edge-subset oracle"
    )
    oracle.add_argument("--family", required=True, choices=FAMILIES)
    for flag in ("n", "l", "a", "b", "c"):
        oracle.add_argument(f"--{flag}", type=int)
    oracle.set_defaults(handler=cmd_oracle_check)

    verify = sub.add_parser("verify", help="run a verification sweep")
    verify.add_argument("--suite", required=True, choices=SUITES)
    verify.add_argument("--n", type=int)
    verify.add_argument("--n-max", dest="n_max", type=int)
    verify.add_argument("--a", type=int)
    verify.add_argument("--b", type=int)
    verify.add_argument("--a-max", dest="a_max", type=int)
    verify.add_argument("--b-max", dest="b_max", type=int)
    verify.add_argument("--count", type=int, default=25,
                        help="random instances for triple-deletion")
    verify.add_argument("--seed", type=int, default=2024)
    verify.add_argument("--workers", type=int, default=1,
                        help="processes for parameter sweeps")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(handler=cmd_verify)

    fibers = sub.add_parser(
        "fibers", help="inspect one composition: class, solver indices, fiber"
    )
    fibers.add_argument("--I", required=True, help="comma-separated parts, e.g. 7,2,2")
    fibers.add_argument("--a", type=int, required=True)
    fibers.add_argument("--b", type=int, required=True)
    fibers.set_defaults(handler=cmd_fibers)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ResourceLimitError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
