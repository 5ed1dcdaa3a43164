#!/usr/bin/env python3
"""Sweep the totative-sum formula (or the whole proof chain) over a range of n.

Typical runs:

    python scripts/spence_sweep.py --to 1000
    python scripts/spence_sweep.py --to 100000 --suite spence --workers 4
    python scripts/spence_sweep.py --to 5000 --suite chain --json out.json
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from totdk import run_suite  # noqa: E402
from totdk.verify import SUITES  # noqa: E402


@dataclass(frozen=True)
class SweepConfig:
    start: int = 2
    end: int = 1000
    suite: str = "spence"
    workers: int = 1
    json_path: Path | None = None


def parse_config(argv: list[str] | None = None) -> SweepConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--from", dest="start", type=int, default=2)
    parser.add_argument("--to", dest="end", type=int, default=1000)
    parser.add_argument("--suite", choices=SUITES, default="spence")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--json", dest="json_path", type=Path, default=None,
                        help="also write the machine-readable report here")
    ns = parser.parse_args(argv)
    return SweepConfig(ns.start, ns.end, ns.suite, ns.workers, ns.json_path)


def main(argv: list[str] | None = None) -> int:
    cfg = parse_config(argv)
    report = run_suite(cfg.suite, cfg.start, cfg.end, workers=cfg.workers)
    sys.stdout.write(report.to_human())
    rate = report.checked / (report.elapsed_ms / 1000.0) if report.elapsed_ms else 0.0
    print(f"  throughput: {rate:,.0f} n/s with {cfg.workers} worker(s)")
    if cfg.json_path is not None:
        cfg.json_path.write_text(report.to_json())
        print(f"  report written to {cfg.json_path}")
    return 0 if report.ok else 4


if __name__ == "__main__":
    sys.exit(main())
