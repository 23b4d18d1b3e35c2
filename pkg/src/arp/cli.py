"""Command line interface.

Subcommands: generate, classify, solve, count, estimate, report.
Exit codes: 0 success; 2 usage or file-format problems; 3 a size guard
refused a factorial-time method; 4 an instance failed an estimator's
structural preconditions.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from typing import Optional

from .complexity import (
    Regime,
    estimate_m,
    heuristic_m,
    q_m_bound,
    q_m_exact,
    q_star,
)
from .core import (
    AssumptionError,
    AssumptionParams,
    classify,
    relabel_by_design_ratio,
)
from .formats import (
    FormatError,
    atomic_write_text,
    big_count_to_dict,
    complexity_to_dict,
    instance_to_csv,
    instance_to_dict,
    read_instance,
    render_complexity_text,
    render_solution_text,
    render_table_text,
    solution_to_dict,
    write_instance,
)
from .generator import (
    GeneratorParams,
    benchmark_family,
    random_crossing,
    random_general,
    random_subset,
)
from .solvers import (
    GuardError,
    SearchMode,
    SearchOptions,
    brute_force,
    greedy_sequential,
    sequential_search,
)

_RANDOM_KINDS = ("crossing", "general", "subset")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arp",
        description="Exact solvers and complexity diagnostics for the airplane refueling problem.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write an instance file")
    gen.add_argument(
        "kind",
        choices=("benchmark",) + _RANDOM_KINDS,
        help="benchmark: fixed family; crossing: random crossing-regime fleet; "
        "general: unstructured random fleet; subset: random sub-fleet of --input",
    )
    gen.add_argument("--n", type=int, help="number of airplanes")
    gen.add_argument("--seed", type=int, help="PRNG seed (required for random kinds)")
    gen.add_argument("--unrounded", action="store_true", help="benchmark: keep exact volumes")
    gen.add_argument("--input", help="subset: source instance file")
    gen.add_argument("--k", type=int, help="subset: number of airplanes to keep")
    gen.add_argument("--c-target", default="2000", help="crossing: crossing-load anchor")
    gen.add_argument("--min-ratio-gap", default=None, help="crossing: least v/c gap")
    gen.add_argument("--max-ratio", default=None, help="crossing: largest allowed v/c")
    gen.add_argument("--max-rate", default=None, help="crossing: largest allowed burn rate")
    gen.add_argument("-o", "--output", help="output path (default: stdout)")
    gen.add_argument("--format", choices=("json", "csv"), default="json")

    cls = sub.add_parser("classify", help="report the ratio-structure class of an instance")
    cls.add_argument("--input", required=True)
    cls.add_argument("-o", "--output", help="output path (default: stdout)")
    cls.add_argument("--format", choices=("json", "text"), default="text")

    sol = sub.add_parser("solve", help="find an optimal drop order")
    sol.add_argument("--input", required=True)
    sol.add_argument(
        "--method", choices=("sequential", "brute", "greedy"), default="sequential"
    )
    sol.add_argument(
        "--force",
        action="store_true",
        help="lift the factorial-time size guard for brute force",
    )
    sol.add_argument("-o", "--output", help="output path (default: stdout)")
    sol.add_argument("--format", choices=("json", "text"), default="text")

    cnt = sub.add_parser("count", help="count the exchange-stable drop orders")
    cnt.add_argument("--input", required=True)
    cnt.add_argument("-o", "--output", help="output path (default: stdout)")
    cnt.add_argument("--format", choices=("json", "text"), default="text")

    est = sub.add_parser("estimate", help="estimate the stability index and count bounds")
    est.add_argument("--input", required=True)
    est.add_argument("--mode", choices=("exact", "heuristic"), default="exact")
    est.add_argument("-o", "--output", help="output path (default: stdout)")
    est.add_argument("--format", choices=("json", "text"), default="text")

    rep = sub.add_parser("report", help="tabulate growth bounds over the benchmark family")
    rep.add_argument(
        "kind",
        choices=("counts", "bounds", "heuristic"),
        help="counts: n! vs the worst-case count; bounds: index-capped bounds "
        "at the exact index; heuristic: same with the sweep index per row",
    )
    rep.add_argument("--n", type=int, default=1000, help="family size anchoring the table")
    rep.add_argument("-o", "--output", help="output path (default: stdout)")
    rep.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        atomic_write_text(path, text)


def _emit_payload(payload: dict, text: str, args) -> None:
    if args.format == "json":
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        _emit(text, args.output)


def _cmd_generate(args, parser: argparse.ArgumentParser) -> int:
    if args.kind in _RANDOM_KINDS and args.seed is None:
        parser.error("--seed is required for kind %r" % args.kind)
    if args.kind == "benchmark":
        if args.n is None:
            parser.error("--n is required for kind 'benchmark'")
        instance = benchmark_family(args.n, rounded=not args.unrounded)
    elif args.kind == "crossing":
        if args.n is None:
            parser.error("--n is required for kind 'crossing'")
        overrides = {}
        if args.min_ratio_gap is not None:
            overrides["min_ratio_gap"] = args.min_ratio_gap
        if args.max_ratio is not None:
            overrides["max_ratio"] = args.max_ratio
        if args.max_rate is not None:
            overrides["max_rate"] = args.max_rate
        params = GeneratorParams(
            n=args.n,
            seed=args.seed,
            c_target=args.c_target,
            assumptions=AssumptionParams(**overrides),
        )
        instance = random_crossing(params)
    elif args.kind == "general":
        if args.n is None:
            parser.error("--n is required for kind 'general'")
        instance = random_general(args.n, args.seed)
    else:
        if args.input is None or args.k is None:
            parser.error("--input and --k are required for kind 'subset'")
        instance = random_subset(read_instance(args.input), args.k, args.seed)
    if args.output is None:
        if args.format == "csv":
            sys.stdout.write(instance_to_csv(instance))
        else:
            sys.stdout.write(json.dumps(instance_to_dict(instance), indent=2) + "\n")
    else:
        write_instance(instance, args.output, fmt=args.format)
    return 0


def _cmd_classify(args) -> int:
    instance = read_instance(args.input)
    kind, ties = classify(instance)
    payload = {"n": instance.n, "class": kind.value, "ties": ties}
    text = "n: %d\nclass: %s\nties: %s\n" % (
        instance.n,
        kind.value,
        "yes" if ties else "no",
    )
    _emit_payload(payload, text, args)
    return 0


def _cmd_solve(args) -> int:
    instance = read_instance(args.input)
    started = time.monotonic()
    if args.method == "brute":
        guard = instance.n if args.force else 10
        solution = brute_force(instance, SearchOptions(max_bruteforce_n=guard))
    elif args.method == "greedy":
        solution = greedy_sequential(instance)
    else:
        solution = sequential_search(
            instance, SearchOptions(mode=SearchMode.OPTIMIZE_AND_COUNT)
        )
    elapsed_ms = (time.monotonic() - started) * 1000.0
    _emit_payload(
        solution_to_dict(solution, elapsed_ms),
        render_solution_text(solution, elapsed_ms),
        args,
    )
    return 0


def _cmd_count(args) -> int:
    instance = read_instance(args.input)
    started = time.monotonic()
    solution = sequential_search(instance, SearchOptions(mode=SearchMode.COUNT_ONLY))
    elapsed_ms = (time.monotonic() - started) * 1000.0
    payload = {
        "n": instance.n,
        "q_count": solution.q_count,
        "visited_nodes": solution.visited_nodes,
        "elapsed_ms": round(elapsed_ms, 3),
    }
    text = "n: %d\nstable orders: %d\nvisited nodes: %d\nelapsed: %.1f ms\n" % (
        instance.n,
        solution.q_count,
        solution.visited_nodes,
        elapsed_ms,
    )
    _emit_payload(payload, text, args)
    return 0


def _cmd_estimate(args) -> int:
    instance = read_instance(args.input)
    started = time.monotonic()
    if args.mode == "exact":
        report = estimate_m(instance)
    else:
        report = heuristic_m(relabel_by_design_ratio(instance))
    elapsed_ms = (time.monotonic() - started) * 1000.0
    payload = complexity_to_dict(report, elapsed_ms)
    payload["mode"] = args.mode
    _emit_payload(payload, render_complexity_text(report, elapsed_ms), args)
    return 0


def _report_rows_counts(n_cap: int) -> tuple[list[dict], list[list[str]]]:
    rows_json = []
    rows_text = []
    for n in range(2, min(n_cap, 16) + 1):
        fact = math.factorial(n)
        star = q_star(n)
        rows_json.append(
            {"n": n, "factorial": str(fact), "q_star": big_count_to_dict(star)}
        )
        rows_text.append([str(n), str(fact), star.scientific, star.exact_text()])
    return rows_json, rows_text


def _bound_row_sizes(n: int, m: int) -> list[int]:
    sizes = {2 * m, 2 * m + 1}
    sizes.update(k * m for k in range(3, 16))
    sizes.add(n)
    return sorted(s for s in sizes if 2 <= s <= n)


def _report_rows_bounds(n: int) -> tuple[int, list[dict], list[list[str]]]:
    family = benchmark_family(n)
    m = estimate_m(family).m
    rows_json = []
    rows_text = []
    for size in _bound_row_sizes(n, m):
        idx = min(m, size - 1)
        exact = q_m_exact(size, idx)
        cap = q_m_bound(size, idx)
        regime = Regime.POLYNOMIAL if size > 2 * idx else Regime.EXPONENTIAL
        rows_json.append(
            {
                "n": size,
                "m": idx,
                "q_star": big_count_to_dict(q_star(size)),
                "q_m_exact": big_count_to_dict(exact),
                "q_m_bound": big_count_to_dict(cap),
                "regime": regime.value,
            }
        )
        rows_text.append(
            [
                str(size),
                str(idx),
                q_star(size).scientific,
                exact.scientific,
                cap.scientific,
                regime.value,
            ]
        )
    return m, rows_json, rows_text


def _report_rows_heuristic(n: int) -> tuple[int, list[dict], list[list[str]]]:
    family = benchmark_family(n)
    m = estimate_m(family).m
    rows_json = []
    rows_text = []
    for size in sorted({k * m for k in range(2, 16) if k * m <= n} | {n}):
        if size < 2:
            continue
        report = heuristic_m(benchmark_family(size))
        rows_json.append(complexity_to_dict(report))
        rows_text.append(
            [
                str(size),
                str(report.m_prime),
                report.q_star.scientific,
                report.q_m_exact.scientific,
                report.q_m_bound.scientific,
                report.regime.value,
            ]
        )
    return m, rows_json, rows_text


def _cmd_report(args) -> int:
    if args.kind == "counts":
        rows_json, rows_text = _report_rows_counts(args.n)
        payload = {"kind": "counts", "rows": rows_json}
        text = render_table_text(
            ["n", "n!", "q_star", "q_star_exact"], rows_text
        )
    elif args.kind == "bounds":
        m, rows_json, rows_text = _report_rows_bounds(args.n)
        payload = {"kind": "bounds", "base_n": args.n, "m": m, "rows": rows_json}
        text = render_table_text(
            ["n", "m", "q_star", "q_m_exact", "q_m_bound", "regime"], rows_text
        )
    else:
        m, rows_json, rows_text = _report_rows_heuristic(args.n)
        payload = {"kind": "heuristic", "base_n": args.n, "m": m, "rows": rows_json}
        text = render_table_text(
            ["n", "m'", "q_star", "q_m_exact", "q_m_bound", "regime"], rows_text
        )
    _emit_payload(payload, text, args)
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "generate":
            return _cmd_generate(args, parser)
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "count":
            return _cmd_count(args)
        if args.command == "estimate":
            return _cmd_estimate(args)
        if args.command == "report":
            return _cmd_report(args)
        parser.error("unknown command %r" % (args.command,))
    except GuardError as exc:
        print("refused: %s" % exc, file=sys.stderr)
        return 3
    except AssumptionError as exc:
        print("precondition failed: %s" % exc, file=sys.stderr)
        return 4
    except (FormatError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
