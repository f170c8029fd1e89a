"""Command-line front end.

Subcommands: `mine` (run one algorithm over one file), `stats` (structure
cardinality report), `gen` (synthetic dataset writer), and `bench`
(multi-threshold sweep with a built-in cross-algorithm correctness gate).

Exit codes: 0 success, 2 usage or input error, 3 cross-algorithm result
mismatch during bench. Output is plain text with no decoration, so NO_COLOR
needs no special handling.
"""

import argparse
import csv
import json
import sys
import time
from pathlib import Path

from .dataset import (
    ALGORITHMS,
    GenConfig,
    MiningConfig,
    generate_synthetic,
    load_transactions,
    serialize_transactions,
)
from .miner import mine
from .stats import compute_stats

BENCH_COLUMNS = (
    "dataset",
    "minsup",
    "algo",
    "repeat",
    "total_ms",
    "phase1_ms",
    "phase2_ms",
    "phase3_ms",
    "itemset_count",
    "nodes_visited",
    "promotions",
)


class CliError(Exception):
    """Usage or input problem; rendered to stderr with exit code 2."""


def _load_db(path: str):
    p = Path(path)
    if not p.is_file():
        raise CliError(f"input file not found: {path}")
    try:
        return load_transactions(p)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _mining_config(args, algo: str) -> MiningConfig:
    try:
        return MiningConfig(minsup=args.minsup, minsup_abs=args.minsup_abs, algo=algo)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _write_output(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _add_input_minsup_flags(sub) -> None:
    sub.add_argument("--input", required=True, help="transaction file, one transaction per line")
    sub.add_argument("--minsup", type=float, help="relative minimum support in [0, 1]")
    sub.add_argument("--minsup-abs", type=int, help="absolute minimum support count")


def _render_mine_text(result) -> str:
    return "".join(
        f"{' '.join(itemset)} (#SUP: {support})\n"
        for itemset, support in result.sorted_itemsets()
    )


def _render_mine_json(result) -> str:
    payload = {
        "algo": result.algo,
        "threshold": result.threshold,
        "itemset_count": len(result.itemsets),
        "itemsets": [
            {"items": list(itemset), "support": support}
            for itemset, support in result.sorted_itemsets()
        ],
        "counters": result.counters,
        "timings_ms": {k: v * 1000.0 for k, v in result.timings.items()},
    }
    return json.dumps(payload, indent=2) + "\n"


def _render_mine_csv(result) -> str:
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["itemset", "support"])
    for itemset, support in result.sorted_itemsets():
        writer.writerow([" ".join(itemset), support])
    return buf.getvalue()


def _cmd_mine(args) -> int:
    db = _load_db(args.input)
    cfg = _mining_config(args, args.algo)
    try:
        result = mine(db, cfg)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    renderers = {
        "text": _render_mine_text,
        "json": _render_mine_json,
        "csv": _render_mine_csv,
    }
    _write_output(args.output, renderers[args.format](result))
    return 0


def _render_stats_text(report) -> str:
    ratio = "n/a" if report.reduction_ratio is None else f"{report.reduction_ratio:.4f}"
    lines = [
        f"threshold: {report.threshold}",
        f"itemsets measured (k>=2): {report.itemset_count}",
        f"avg diffnodeset len: {report.avg_diffnodeset_len:.4f}",
        f"avg nodeset len: {report.avg_nodeset_len:.4f}",
        f"reduction ratio: {ratio}",
        "per length:",
    ]
    for k, bucket in report.per_length.items():
        lines.append(
            f"  k={k}: diffnodeset={bucket.avg_diffnodeset_len:.4f} "
            f"nodeset={bucket.avg_nodeset_len:.4f} itemsets={bucket.count}"
        )
    return "\n".join(lines) + "\n"


def _render_stats_json(report) -> str:
    payload = {
        "threshold": report.threshold,
        "itemset_count": report.itemset_count,
        "avg_diffnodeset_len": report.avg_diffnodeset_len,
        "avg_nodeset_len": report.avg_nodeset_len,
        "reduction_ratio": report.reduction_ratio,
        "per_length": {
            str(k): {
                "avg_diffnodeset_len": bucket.avg_diffnodeset_len,
                "avg_nodeset_len": bucket.avg_nodeset_len,
                "count": bucket.count,
            }
            for k, bucket in report.per_length.items()
        },
    }
    return json.dumps(payload, indent=2) + "\n"


def _cmd_stats(args) -> int:
    db = _load_db(args.input)
    cfg = _mining_config(args, "dfin")
    report = compute_stats(db, cfg)
    renderer = _render_stats_json if args.format == "json" else _render_stats_text
    _write_output(args.output, renderer(report))
    return 0


def _cmd_gen(args) -> int:
    try:
        cfg = GenConfig(
            num_transactions=args.transactions,
            num_items=args.items,
            avg_len=args.avg_len,
            num_patterns=args.patterns,
            seed=args.seed,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    db = generate_synthetic(cfg)
    _write_output(args.output, serialize_transactions(db))
    return 0


def _cmd_bench(args) -> int:
    db = _load_db(args.input)
    try:
        minsups = [float(v) for v in args.minsup_list.split(",") if v.strip()]
    except ValueError as exc:
        raise CliError(f"bad --minsup-list: {exc}") from exc
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    unknown = [a for a in algos if a not in ALGORITHMS]
    if unknown or not algos:
        raise CliError(f"--algos must name a subset of {ALGORITHMS}")
    if not minsups:
        raise CliError("--minsup-list is empty")
    if args.repeats < 0:
        raise CliError("--repeats must be >= 0")

    dataset = Path(args.input).name
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    for minsup in minsups:
        expected_count = None
        for algo in algos:
            try:
                cfg = MiningConfig(minsup=minsup, algo=algo)
            except ValueError as exc:
                raise CliError(str(exc)) from exc
            for repeat in range(1, args.repeats + 1):
                start = time.perf_counter()
                try:
                    result = mine(db, cfg)
                except ValueError as exc:
                    raise CliError(str(exc)) from exc
                total_ms = (time.perf_counter() - start) * 1000.0
                count = len(result.itemsets)
                writer.writerow(
                    [
                        dataset,
                        minsup,
                        algo,
                        repeat,
                        f"{total_ms:.3f}",
                        f"{result.timings.get('phase1', 0.0) * 1000.0:.3f}",
                        f"{result.timings.get('phase2', 0.0) * 1000.0:.3f}",
                        f"{result.timings.get('phase3', 0.0) * 1000.0:.3f}",
                        count,
                        result.counters["nodes_visited"],
                        result.counters["promotions"],
                    ]
                )
                if expected_count is None:
                    expected_count = count
                elif count != expected_count:
                    sys.stdout.flush()
                    print(
                        f"result mismatch at minsup={minsup}: {algo} found {count} "
                        f"itemsets, expected {expected_count}",
                        file=sys.stderr,
                    )
                    return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dfin",
        description="Frequent itemset mining over a coded prefix tree.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mine = sub.add_parser("mine", help="mine one file at one threshold")
    _add_input_minsup_flags(p_mine)
    p_mine.add_argument("--algo", choices=ALGORITHMS, default="dfin")
    p_mine.add_argument("--output", default=None, help="output path (default stdout)")
    p_mine.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_mine.set_defaults(func=_cmd_mine)

    p_stats = sub.add_parser("stats", help="structure cardinality report")
    _add_input_minsup_flags(p_stats)
    p_stats.add_argument("--output", default=None, help="output path (default stdout)")
    p_stats.add_argument("--format", choices=("text", "json"), default="text")
    p_stats.set_defaults(func=_cmd_stats)

    p_gen = sub.add_parser("gen", help="write a synthetic dataset")
    p_gen.add_argument("--transactions", type=int, required=True)
    p_gen.add_argument("--items", type=int, required=True)
    p_gen.add_argument("--avg-len", type=float, required=True)
    p_gen.add_argument("--patterns", type=int, default=5)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--output", required=True)
    p_gen.set_defaults(func=_cmd_gen)

    p_bench = sub.add_parser("bench", help="timed sweep with correctness gate")
    p_bench.add_argument("--input", required=True)
    p_bench.add_argument("--minsup-list", required=True, help="comma-separated fractions")
    p_bench.add_argument("--algos", default="dfin,fin", help="comma-separated algorithms")
    p_bench.add_argument("--repeats", type=int, default=3)
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
