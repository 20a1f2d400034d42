"""Command-line interface.

Three subcommands: `check` runs a theorem check and emits TheoremCheck
reports, `section5` reproduces one of the worked comparison examples, and
`enumerate` streams isomorphism-class representatives as graph6 lines.

Report artifacts are timestamp-free so identical runs produce identical
bytes; the generation time is printed separately (to stderr when the
artifact itself goes to stdout).

Exit codes: 0 all verdicts Pass; 1 any Fail; 2 any Unknown without a Fail
(also used for usage and parameter errors).
"""

from __future__ import annotations

import argparse
import os
import sys
from datetime import datetime, timezone

from .checks import (
    CHECK_IDS,
    DEFAULT_RESTARTS,
    DEFAULT_SEED,
    DEFAULT_STEP_BUDGET,
    check_graph_class,
    check_objective,
    reproduce_section5,
    run_check,
)
from .enumeration import GraphClass, Objective, enumerate_graphs
from .errors import (
    FamilyParameterError,
    InfeasibleParameterError,
    SizeCapError,
    UnsupportedCaseError,
)
from .forests import LinearForestSpec, is_forest_free
from .graph6 import encode_graph6
from .reports import emit_report

_USAGE_EXIT = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectral-turan",
        description="Extremal edge counts and spectral radii of graphs "
        "avoiding a linear forest: theorem checks, worked-example "
        "reproduction, and graph enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser(
        "check", help="run one theorem check over an n value or range"
    )
    check.add_argument("theorem_id", choices=CHECK_IDS, metavar="theorem_id")
    check.add_argument(
        "--n", required=True,
        help="order, a single integer or an inclusive range like 3..9",
    )
    check.add_argument(
        "--spec", help="forbidden linear forest, comma-separated path orders"
    )
    check.add_argument("--k", type=int, help="number of P3 parts (k.P3 checks)")
    check.add_argument(
        "--class", dest="graph_class", choices=["all", "bipartite"],
        help="graph class; fixed per check id, flag must agree",
    )
    check.add_argument(
        "--objective", choices=["edges", "rho"],
        help="objective; fixed per check id, flag must agree",
    )
    check.add_argument("--seed", type=int, default=DEFAULT_SEED)
    check.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    check.add_argument(
        "--budget", type=int, default=DEFAULT_STEP_BUDGET,
        help="stochastic search step budget per restart",
    )
    check.add_argument("--format", choices=["json", "csv"], default="json")
    check.add_argument("--out", help="artifact path (default: stdout)")
    check.add_argument(
        "--revalidate", action="store_true",
        help="decode every witness and reconfirm its value before Pass",
    )
    check.add_argument(
        "--cache-dir",
        help="witness cache directory (default: $SPECTRAL_TURAN_CACHE)",
    )

    section5 = sub.add_parser(
        "section5", help="reproduce a worked comparison example"
    )
    section5.add_argument(
        "example_id", choices=["1", "2", "3", "4", "prop5"],
        metavar="example_id",
    )
    section5.add_argument("--h", type=int, help="clique side (examples 1, 2)")
    section5.add_argument("--k", type=int, help="P3 count (examples 3, 4, prop5)")
    section5.add_argument("--n", type=int, required=True)
    section5.add_argument("--samples", type=int, default=200)
    section5.add_argument("--seed", type=int, default=0)
    section5.add_argument("--format", choices=["json", "csv"], default="json")
    section5.add_argument("--out")

    enum = sub.add_parser(
        "enumerate",
        help="stream one graph6 line per isomorphism class of order n",
    )
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument(
        "--filter", dest="filter_spec",
        help="only graphs avoiding this linear forest, e.g. 3,3",
    )
    enum.add_argument("--out")

    return parser


def _validate_check_flags(parser, args) -> None:
    fixed_obj = check_objective(args.theorem_id)
    fixed_class = check_graph_class(args.theorem_id)
    if args.objective is not None:
        if fixed_obj is None:
            parser.error(f"{args.theorem_id} does not take --objective")
        if Objective(args.objective) is not fixed_obj:
            parser.error(
                f"{args.theorem_id} is an {fixed_obj.value} check; "
                f"--objective {args.objective} contradicts it"
            )
    if args.graph_class is not None:
        if fixed_class is None:
            parser.error(f"{args.theorem_id} does not take --class")
        if GraphClass(args.graph_class) is not fixed_class:
            parser.error(
                f"{args.theorem_id} runs on class {fixed_class.value}; "
                f"--class {args.graph_class} contradicts it"
            )


def _emit(report, fmt: str, out_path) -> None:
    """Write the artifact and print the timestamp next to it, never into it."""
    stamp = datetime.now(timezone.utc).isoformat()
    if out_path is None:
        sys.stdout.write(emit_report(report, fmt))
        print(f"generated_at {stamp}", file=sys.stderr)
    else:
        emit_report(report, fmt, out_path)
        print(f"wrote {out_path}")
        print(f"generated_at {stamp}")


def _verdict_exit(verdicts) -> int:
    if any(v == "Fail" for v in verdicts):
        return 1
    if any(v.startswith("Unknown") for v in verdicts):
        return 2
    return 0


def _run_check_command(args) -> int:
    params = {"n": args.n}
    if args.spec is not None:
        params["spec"] = args.spec
    if args.k is not None:
        params["k"] = args.k
    cache_dir = args.cache_dir or os.environ.get("SPECTRAL_TURAN_CACHE")
    checks = run_check(
        args.theorem_id,
        params,
        seed=args.seed,
        restarts=args.restarts,
        step_budget=args.budget,
        cache_dir=cache_dir,
        revalidate=args.revalidate,
    )
    report = checks[0] if len(checks) == 1 else checks
    _emit(report, args.format, args.out)
    for c in checks:
        print(
            f"{c.theorem_id} n={c.params.get('n', args.n)}: {c.verdict}",
            file=sys.stderr,
        )
    return _verdict_exit([c.verdict for c in checks])


def _run_section5_command(args) -> int:
    params = {"n": args.n}
    if args.h is not None:
        params["h"] = args.h
    if args.k is not None:
        params["k"] = args.k
    if args.example_id == "prop5":
        params["samples"] = args.samples
        params["seed"] = args.seed
    report = reproduce_section5(args.example_id, params)
    _emit(report, args.format, args.out)
    print(f"example {report.example_id}: {report.verdict}", file=sys.stderr)
    return _verdict_exit([report.verdict])


def _run_enumerate_command(args) -> int:
    predicate = None
    if args.filter_spec is not None:
        spec = LinearForestSpec.parse(args.filter_spec)
        predicate = lambda g: is_forest_free(g, spec)
    lines = (
        encode_graph6(g).decode("ascii")
        for g in enumerate_graphs(args.n, predicate)
    )
    if args.out is None:
        for line in lines:
            print(line)
    else:
        count = 0
        with open(args.out, "w", encoding="ascii") as fh:
            for line in lines:
                fh.write(line + "\n")
                count += 1
        print(f"wrote {count} graphs to {args.out}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check":
            _validate_check_flags(parser, args)
            return _run_check_command(args)
        if args.command == "section5":
            return _run_section5_command(args)
        return _run_enumerate_command(args)
    except (
        ValueError,
        KeyError,
        FamilyParameterError,
        InfeasibleParameterError,
        SizeCapError,
        UnsupportedCaseError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
