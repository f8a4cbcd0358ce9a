"""Command line interface: ``accs list|run|summarize|rank|compare|trace``."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .benchmarks import catalog
from .core import AccsError, ConfigurationError
from .harness import (
    compare_to_fixture,
    load_config,
    load_fixture,
    load_policy,
    rank_algorithms,
    read_runs,
    read_trace,
    run_experiment,
    summarize,
    trace_csv,
    write_experiment,
)
from .harness.runner import config_as_json

EXIT_OK, EXIT_CONFIG, EXIT_FAILED = 0, 1, 2


def _cmd_list(args):
    rows = catalog()
    if args.format == "json":
        print(json.dumps(rows, indent=2))
        return EXIT_OK
    print(f"{'id':<6} {'dim':>3}  {'lower':>10} {'upper':>10}  {'fmin':>12}  name")
    for r in rows:
        fmin = "?" if r["fmin"] is None else f"{r['fmin']:g}"
        print(f"{r['id']:<6} {r['dim']:>3}  {r['lower']:>10g} {r['upper']:>10g}  {fmin:>12}  {r['name']}")
    return EXIT_OK


def _cmd_run(args):
    config = load_config(
        args.config,
        algorithms=args.algo,
        functions=args.fn,
        runs=args.runs,
        iterations=args.iters,
        pop_size=args.pop,
        root_seed=args.seed,
        workers=args.workers,
        record_wall_time=True if args.timing else None,
        out=args.out,
    )
    if not config.out:
        raise ConfigurationError("an output directory is required (--out or 'out' in the config)")
    records = run_experiment(config)
    out = write_experiment(records, config.out, config_as_json(config), traces=not args.no_traces)
    print(f"wrote {len(records)} runs to {out}", file=sys.stderr)
    return EXIT_OK


def _cmd_summarize(args):
    table = summarize(read_runs(args.input))
    sys.stdout.write(table.to_csv() if args.format == "csv" else table.to_json() + "\n")
    return EXIT_OK


def _cmd_rank(args):
    if args.fixture:
        table = load_fixture(args.fixture)
    else:
        table = summarize(read_runs(args.input))
    functions = args.functions.split(",") if args.functions else None
    sys.stdout.write(rank_algorithms(table, functions).render())
    return EXIT_OK


def _cmd_compare(args):
    measured = summarize(read_runs(args.input))
    report = compare_to_fixture(measured, load_fixture(args.fixture), load_policy(args.policy))
    sys.stdout.write(report.render())
    if not report.rows:
        print("no overlapping cells to compare", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK if report.passed else EXIT_FAILED


def _parse_triple(text):
    parts = text.replace("/", ":").split(":")
    if len(parts) != 3:
        raise ConfigurationError(f"run must look like ALGO:FN:RUN, got {text!r}")
    algo, fn, run = parts
    return algo, fn.upper(), int(run)


def _cmd_trace(args):
    rows = read_trace(args.input, *_parse_triple(args.run))
    sys.stdout.write(trace_csv(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="accs", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("list", help="print the function catalog")
    s.add_argument("--format", choices=("table", "json"), default="table")
    s.set_defaults(func=_cmd_list)

    s = sub.add_parser("run", help="run an experiment and write runs.csv plus traces")
    s.add_argument("--config", help="flat JSON config; flags override its values")
    s.add_argument("--algo", help="accs, pso, random (comma separated)")
    s.add_argument("--fn", help="function ids, 'all', 'classical' or 'cec2019'")
    s.add_argument("--runs", type=int)
    s.add_argument("--iters", type=int)
    s.add_argument("--pop", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--workers", type=int)
    s.add_argument("--out")
    s.add_argument("--timing", action="store_true", help="record wall time (output is then not byte-reproducible)")
    s.add_argument("--no-traces", action="store_true")
    s.set_defaults(func=_cmd_run)

    s = sub.add_parser("summarize", help="mean/std table from a result directory")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.set_defaults(func=_cmd_summarize)

    s = sub.add_parser("rank", help="rank algorithms per function")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--in", dest="input")
    src.add_argument("--fixture", help="'classical', 'cec2019' or a fixture CSV path")
    s.add_argument("--functions", help="comma separated subset")
    s.set_defaults(func=_cmd_rank)

    s = sub.add_parser("compare", help="check measured means against literature bands")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--fixture", default="classical")
    s.add_argument("--policy", help="JSON tolerance policy (defaults to the bundled acceptance bands)")
    s.set_defaults(func=_cmd_compare)

    s = sub.add_parser("trace", help="convergence CSV of one run")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--run", required=True, help="ALGO:FN:RUN, e.g. accs:F1:0")
    s.set_defaults(func=_cmd_trace)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (AccsError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
