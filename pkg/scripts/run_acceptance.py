"""Run the acceptance suite and print its per-criterion summary."""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]


@dataclass
class Config:
    keyword: str = ""
    verbose: bool = False


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-k", dest="keyword", default="", help="pytest -k expression to select criteria")
    parser.add_argument("-v", dest="verbose", action="store_true")
    cfg = Config(**vars(parser.parse_args()))
    args = [str(ROOT / "tests" / "test_acceptance.py"), "-p", "no:cacheprovider", "-q"]
    if cfg.keyword:
        args += ["-k", cfg.keyword]
    if cfg.verbose:
        args.append("-v")
    return pytest.main(args)


if __name__ == "__main__":
    sys.exit(main())
