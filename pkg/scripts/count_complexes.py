"""Count labeled complexes on exactly n vertices; six vertices takes a while."""

import argparse
import sys
from dataclasses import dataclass
from time import perf_counter

from shadowcalc.oracle import MAX_ENUM_VERTICES, count_complexes


@dataclass
class Config:
    max_vertices: int = 5


def run(cfg: Config) -> int:
    for n in range(1, cfg.max_vertices + 1):
        start = perf_counter()
        print(f"{n}: {count_complexes(n)}  ({perf_counter() - start:.1f}s)", flush=True)
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-vertices", type=int, default=Config.max_vertices, choices=range(1, MAX_ENUM_VERTICES + 1))
    return run(Config(**vars(parser.parse_args())))


if __name__ == "__main__":
    sys.exit(main())
