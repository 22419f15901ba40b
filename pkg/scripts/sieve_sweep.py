"""Check both square-free shadow inequalities over growing ranges and report timings."""

import argparse
import sys
from dataclasses import dataclass, field
from time import perf_counter

from shadowcalc.sqfree import build_sieve, verify_range


@dataclass
class Config:
    limits: list[int] = field(default_factory=lambda: [10**4, 10**5, 10**6])
    stride: int = 1


def run(cfg: Config) -> int:
    failed = 0
    print(f"{'limit':>10} {'checks':>10} {'failures':>8} {'sieve s':>8} {'verify s':>8}")
    for limit in cfg.limits:
        t0 = perf_counter()
        table = build_sieve(limit)
        t1 = perf_counter()
        report = verify_range(table, stride=cfg.stride)
        t2 = perf_counter()
        failed += len(report.failures)
        print(f"{limit:>10} {report.checks:>10} {len(report.failures):>8} {t1 - t0:>8.2f} {t2 - t1:>8.2f}")
    return 1 if failed else 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limits", type=int, nargs="+", default=Config().limits)
    parser.add_argument("--stride", type=int, default=1)
    return run(Config(**vars(parser.parse_args())))


if __name__ == "__main__":
    sys.exit(main())
