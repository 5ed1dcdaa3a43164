#!/usr/bin/env python3
"""Benchmark the naive O(a) Dedekind-sum evaluator against the O(log a) one.

Typical runs:

    python scripts/bench_dedekind.py --pairs 20 --max-a 100000
    python scripts/bench_dedekind.py --pairs 50 --max-a 1000000 --seed 7
    python scripts/bench_dedekind.py --scaling       # depth growth, no naive
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from totdk import dedekind_fast_with_depth  # noqa: E402
from totdk.bench import (  # noqa: E402
    depth_ceiling,
    format_table,
    generate_pairs,
    run_bench,
)


@dataclass(frozen=True)
class BenchConfig:
    pairs: int = 20
    max_a: int = 100_000
    seed: int = 1
    scaling: bool = False


def parse_config(argv: list[str] | None = None) -> BenchConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pairs", type=int, default=20)
    parser.add_argument("--max-a", dest="max_a", type=int, default=100_000)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--scaling", action="store_true",
                        help="time only the fast path at growing magnitudes")
    ns = parser.parse_args(argv)
    return BenchConfig(ns.pairs, ns.max_a, ns.seed, ns.scaling)


def scaling_sweep(pairs: int, seed: int) -> None:
    """Fast path only: per-call time and depth as max_a grows to 10^15."""
    header = f"{'max_a':>16} {'mean_us':>10} {'max_depth':>9} {'ceiling':>8}"
    print(header)
    print("-" * len(header))
    for exponent in range(4, 16):
        max_a = 10**exponent
        total = 0.0
        worst_depth = 0
        for b, a in generate_pairs(pairs, max_a, seed):
            t0 = time.perf_counter()
            _, depth = dedekind_fast_with_depth(b, a)
            total += time.perf_counter() - t0
            worst_depth = max(worst_depth, depth)
        print(
            f"{max_a:>16} {total / pairs * 1e6:>10.1f} "
            f"{worst_depth:>9} {depth_ceiling(max_a):>8}"
        )


def main(argv: list[str] | None = None) -> int:
    cfg = parse_config(argv)
    if cfg.scaling:
        scaling_sweep(cfg.pairs, cfg.seed)
        return 0
    rows = run_bench(cfg.pairs, cfg.max_a, cfg.seed)
    sys.stdout.write(format_table(rows, cfg.max_a))
    return 0 if all(r.equal for r in rows) else 4


if __name__ == "__main__":
    sys.exit(main())
