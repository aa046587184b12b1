"""Command-line benchmark harness.

Subcommands: ``run`` executes seeded optimizer runs and writes front,
trace, pooled-front and summary files; ``front`` samples an analytic
reference front; ``bench`` sweeps a problem suite and tabulates results
next to published literature values.

Exit codes: 0 success, 1 usage error, 2 runtime failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import statistics
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from .engine import InitializationError, MofaConfig, RunResult, run
from .pareto import ReferenceFrontMetrics, non_dominated_filter, select_by_crowding
from .problems import available_problems, get_problem, sample_reference_front

# published generational-distance and front-error figures for this
# algorithm on the standard suite (n=50, t=500 runs; front errors at
# iterations 1000 and 2500)
LITERATURE_DG = {
    "sch": 4.55e-6,
    "zdt1": 1.90e-4,
    "zdt2": 1.52e-4,
    "zdt3": 1.97e-4,
    "lz": 8.70e-4,
}
LITERATURE_EF = {
    "sch": (5.5e-9, 4.0e-22),
    "zdt1": (2.3e-6, 5.4e-19),
    "zdt2": (8.9e-6, 1.7e-14),
    "zdt3": (3.7e-5, 2.5e-11),
    "lz": (2.0e-6, 7.7e-12),
}

_BENCH_SUITE = ("sch", "zdt1", "zdt2", "zdt3", "lz")


def _g17(v: float) -> str:
    return format(float(v), ".17g")


def _sort_front(F: np.ndarray) -> np.ndarray:
    order = np.lexsort((F[:, 1], F[:, 0]))
    return F[order]


def _write_front(path: Path, F: np.ndarray, fmt: str) -> None:
    F = _sort_front(F)
    if fmt == "csv":
        with path.open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["f1", "f2"])
            for row in F:
                w.writerow([_g17(row[0]), _g17(row[1])])
    else:
        with path.open("w") as fh:
            json.dump({"points": [[float(a), float(b)] for a, b in F]}, fh, indent=2)
            fh.write("\n")


def _write_trace(path: Path, result: RunResult, fmt: str) -> None:
    if result.trace_kind == "metrics":
        header = ["iter", "dg", "ef"]
    else:
        header = ["iter", "best_psi"]
    if fmt == "csv":
        with path.open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(header)
            for row in result.trace:
                w.writerow([str(row[0])] + [_g17(v) for v in row[1:]])
    else:
        with path.open("w") as fh:
            rows = [[row[0]] + [float(v) for v in row[1:]] for row in result.trace]
            json.dump({"columns": header, "rows": rows}, fh, indent=2)
            fh.write("\n")


def _trace_value(result: RunResult, iteration: int) -> float | None:
    if result.trace_kind != "metrics":
        return None
    for row in result.trace:
        if row[0] == iteration:
            return float(row[2])
    return None


def _median(values: list[float]) -> float | None:
    vals = [v for v in values if v is not None]
    return statistics.median(vals) if vals else None


def _execute(problem, args) -> tuple[list[RunResult], list[float | None]]:
    results = []
    base = MofaConfig(
        population_size=args.pop,
        iterations=args.iters,
        alpha0=args.alpha0,
        beta0=args.beta0,
        gamma_base=args.gamma,
        archive_capacity=args.archive_max,
        seed=args.seed,
    )
    for k in range(args.runs):
        config = replace(base, seed=args.seed + k)
        results.append(run(problem, config,
                           reference_samples=args.samples,
                           collect_trace=args.trace))
    dgs: list[float | None] = [None] * len(results)
    if problem.reference_front is not None:
        metrics = ReferenceFrontMetrics(sample_reference_front(problem, args.samples))
        dgs = [metrics.generational_distance(r.archive_objectives) for r in results]
    return results, dgs


def _pooled_front(results: list[RunResult], cap: int) -> np.ndarray:
    union = np.vstack([r.archive_objectives for r in results])
    front = union[non_dominated_filter(union)]
    if front.shape[0] > cap:
        front = front[select_by_crowding(front, cap)]
    return front


def _summary_record(problem, args, results, dgs) -> dict:
    wall = [r.wall_seconds for r in results]
    record = {
        "problem": problem.name,
        "n": args.pop,
        "iters": args.iters,
        "runs": args.runs,
        "dg_median": _median(dgs),
        "dg_best": min((d for d in dgs if d is not None), default=None),
        "ef_1000_median": _median([_trace_value(r, 1000) for r in results]),
        "ef_2500_median": _median([_trace_value(r, 2500) for r in results]),
        "wall_seconds": 0.0 if args.no_timing else sum(wall),
        "per_run": [
            {
                "seed": r.config.seed,
                "dg": dgs[i],
                "ef_1000": _trace_value(r, 1000),
                "ef_2500": _trace_value(r, 2500),
                "archive_size": int(r.archive_objectives.shape[0]),
                "evaluations": r.diagnostics.evaluations,
                "wall_seconds": 0.0 if args.no_timing else r.wall_seconds,
            }
            for i, r in enumerate(results)
        ],
    }
    return record


def _run_problem(problem, args, out: Path) -> dict:
    results, dgs = _execute(problem, args)
    for r in results:
        stem = f"{problem.name}_seed{r.config.seed}"
        _write_front(out / f"{stem}_front.{args.format}", r.archive_objectives, args.format)
        if args.trace:
            _write_trace(out / f"{stem}_trace.{args.format}", r, args.format)
    pooled = _pooled_front(results, args.runs * args.pop)
    _write_front(out / f"{problem.name}_pooled_front.{args.format}", pooled, args.format)
    record = _summary_record(problem, args, results, dgs)
    with (out / f"{problem.name}_summary.json").open("w") as fh:
        json.dump(record, fh, indent=2)
        fh.write("\n")
    return record


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_run(args) -> int:
    try:
        problem = get_problem(args.problem)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out = _out_dir(args)
    record = _run_problem(problem, args, out)
    dg = record["dg_median"]
    shown = _g17(dg) if dg is not None else "n/a"
    print(f"{problem.name}: {args.runs} run(s) x {args.iters} iterations, "
          f"median dg {shown}, files in {out}")
    return 0


def cmd_front(args) -> int:
    try:
        problem = get_problem(args.problem)
        front = sample_reference_front(problem, args.samples)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out = _out_dir(args)
    path = out / f"{problem.name}_front.{args.format}"
    _write_front(path, front, args.format)
    print(f"{problem.name}: wrote {front.shape[0]} reference points to {path}")
    return 0


def cmd_bench(args) -> int:
    names = [p for p in (s.strip() for s in args.problems.split(",")) if p]
    if not names:
        print("error: empty problem suite", file=sys.stderr)
        return 1
    try:
        problems = [get_problem(n) for n in names]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out = _out_dir(args)
    rows = []
    for problem in problems:
        record = _run_problem(problem, args, out)
        dgs = [r["dg"] for r in record["per_run"]]
        lit_ef = LITERATURE_EF.get(problem.name)
        rows.append({
            "problem": problem.name,
            "dg_median": record["dg_median"],
            "dg_best": record["dg_best"],
            "dg_worst": max((d for d in dgs if d is not None), default=None),
            "ef_1000_median": record["ef_1000_median"],
            "ef_2500_median": record["ef_2500_median"],
            "dg_literature": LITERATURE_DG.get(problem.name),
            "ef_1000_literature": lit_ef[0] if lit_ef else None,
            "ef_2500_literature": lit_ef[1] if lit_ef else None,
        })
        print(f"{problem.name}: done")
    table = out / "bench_summary.csv"
    fields = list(rows[0])
    with table.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=fields)
        w.writeheader()
        for row in rows:
            w.writerow({k: ("" if v is None else _g17(v) if isinstance(v, float) else v)
                        for k, v in row.items()})
    print(f"wrote {table}")
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_common(p: argparse.ArgumentParser, with_engine: bool) -> None:
    p.add_argument("--samples", type=int, default=1000,
                   help="reference front sample count")
    p.add_argument("--out", default="mofa_out", help="output directory")
    p.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="front/trace file format")
    if not with_engine:
        return
    p.add_argument("--pop", type=int, default=50, help="fireflies per run")
    p.add_argument("--iters", type=int, default=2500, help="iterations per run")
    p.add_argument("--runs", type=int, default=1, help="independent seeded runs")
    p.add_argument("--seed", type=int, default=0, help="base seed; run k uses seed+k")
    p.add_argument("--alpha0", type=float, default=0.25)
    p.add_argument("--beta0", type=float, default=1.0)
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--archive-max", type=int, default=100)
    p.add_argument("--trace", action=argparse.BooleanOptionalAction, default=True,
                   help="write per-iteration trace files")
    p.add_argument("--no-timing", action="store_true",
                   help="report wall_seconds as 0.0 for byte-reproducible summaries")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mofa", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="optimize one problem over seeded runs")
    p_run.add_argument("--problem", required=True,
                       help=f"one of: {', '.join(available_problems())}")
    _add_common(p_run, with_engine=True)
    p_run.set_defaults(func=cmd_run)

    p_front = sub.add_parser("front", help="sample an analytic reference front")
    p_front.add_argument("--problem", required=True)
    _add_common(p_front, with_engine=False)
    p_front.set_defaults(func=cmd_front)

    p_bench = sub.add_parser("bench", help="run a suite and tabulate results")
    p_bench.add_argument("--problems", default=",".join(_BENCH_SUITE),
                         help="comma-separated problem names")
    _add_common(p_bench, with_engine=True)
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        return args.func(args)
    except InitializationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
