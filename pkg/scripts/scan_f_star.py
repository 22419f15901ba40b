"""Tabulate phi(psi(f)) against f - delta(f) - delta_plus(f) for every f-vector on few vertices.

Writes one JSON line per f-vector and a short summary to stderr.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from shadowcalc.extremal import scan_f_star
from shadowcalc.oracle import survey


@dataclass
class Config:
    max_vertices: int = 5
    only_anomalous: bool = False


def run(cfg: Config) -> int:
    f_vectors = sorted({e.f for n in range(1, cfg.max_vertices + 1) for e in survey(n)}, key=lambda f: f.entries)
    cases = scan_f_star(f_vectors)
    for case in cases:
        if case.anomalous or not cfg.only_anomalous:
            print(json.dumps(case.to_json(), sort_keys=True))
    anomalous = sum(c.anomalous for c in cases)
    broken = sum(not (c.shifted_identity and c.below_bound) for c in cases)
    print(f"{len(cases)} f-vectors, {anomalous} equality cases with delta != 0, {broken} failures", file=sys.stderr)
    return 1 if broken else 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-vertices", type=int, default=Config.max_vertices)
    parser.add_argument("--only-anomalous", action="store_true")
    return run(Config(**vars(parser.parse_args())))


if __name__ == "__main__":
    sys.exit(main())
