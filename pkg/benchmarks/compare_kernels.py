"""Compare the compiled merge kernels against the pure-Python fallback.

Generates a dense synthetic dataset, then runs the CLI bench subcommand in
two subprocesses, one per kernel backend (selected with DFIN_KERNELS), and
reports best-of-N wall times. The search phase (phase3) is where the merge
kernels live; tree construction is interpreted Python under both backends.

Usage: python benchmarks/compare_kernels.py [--transactions N] [--items N]
       [--avg-len L] [--minsup F] [--repeats N] [--algos dfin,fin]
"""

import argparse
import csv
import io
import os
import subprocess
import sys
import tempfile
from pathlib import Path


def run_bench(dataset, minsup, algos, repeats, backend):
    env = dict(os.environ, DFIN_KERNELS=backend)
    proc = subprocess.run(
        [
            sys.executable, "-m", "dfin", "bench",
            "--input", str(dataset),
            "--minsup-list", str(minsup),
            "--algos", algos,
            "--repeats", str(repeats),
        ],
        capture_output=True,
        text=True,
        env=env,
    )
    if proc.returncode != 0:
        raise RuntimeError(f"bench failed ({backend}): {proc.stderr}")
    best = {}
    for row in csv.DictReader(io.StringIO(proc.stdout)):
        algo = row["algo"]
        entry = best.setdefault(
            algo, {"total_ms": float("inf"), "phase3_ms": float("inf"), "itemsets": 0}
        )
        entry["total_ms"] = min(entry["total_ms"], float(row["total_ms"]))
        entry["phase3_ms"] = min(entry["phase3_ms"], float(row["phase3_ms"]))
        entry["itemsets"] = int(row["itemset_count"])
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--transactions", type=int, default=4000)
    parser.add_argument("--items", type=int, default=80)
    parser.add_argument("--avg-len", type=float, default=40)
    parser.add_argument("--patterns", type=int, default=8)
    parser.add_argument("--seed", type=int, default=3)
    parser.add_argument("--minsup", type=float, default=0.35)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--algos", default="dfin,fin")
    args = parser.parse_args()

    with tempfile.TemporaryDirectory() as tmp:
        dataset = Path(tmp) / "bench.dat"
        subprocess.run(
            [
                sys.executable, "-m", "dfin", "gen",
                "--transactions", str(args.transactions),
                "--items", str(args.items),
                "--avg-len", str(args.avg_len),
                "--patterns", str(args.patterns),
                "--seed", str(args.seed),
                "--output", str(dataset),
            ],
            check=True,
        )
        print(
            f"dataset: {args.transactions} transactions, {args.items} items, "
            f"avg len {args.avg_len}, minsup {args.minsup}, "
            f"best of {args.repeats} repeats"
        )
        results = {}
        for backend in ("c", "py"):
            try:
                results[backend] = run_bench(
                    dataset, args.minsup, args.algos, args.repeats, backend
                )
            except RuntimeError as exc:
                print(f"skipping backend {backend}: {exc}", file=sys.stderr)
        if "c" not in results:
            print("compiled backend unavailable; nothing to compare")
            return 1

        header = f"{'algo':<6} {'backend':<8} {'total_ms':>10} {'search_ms':>10} {'itemsets':>9}"
        print(header)
        print("-" * len(header))
        for algo in args.algos.split(","):
            for backend in ("c", "py"):
                if backend not in results:
                    continue
                entry = results[backend][algo]
                print(
                    f"{algo:<6} {backend:<8} {entry['total_ms']:>10.1f} "
                    f"{entry['phase3_ms']:>10.1f} {entry['itemsets']:>9}"
                )
            if "py" in results:
                total_speedup = results["py"][algo]["total_ms"] / results["c"][algo]["total_ms"]
                phase_speedup = (
                    results["py"][algo]["phase3_ms"] / results["c"][algo]["phase3_ms"]
                    if results["c"][algo]["phase3_ms"] > 0
                    else float("inf")
                )
                print(
                    f"{algo:<6} speedup: {total_speedup:.1f}x total, "
                    f"{phase_speedup:.1f}x search phase"
                )
        return 0


if __name__ == "__main__":
    raise SystemExit(main())
