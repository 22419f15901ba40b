"""Command-line front end.

Exit codes: 0 success (or everything verified), 1 a verification failed,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .compat import check_compatible, is_f_vector, parse_seq
from .extremal import (
    InconsistentCharacterization,
    is_maximal_pair,
    is_minimal_pair,
    phi,
    psi,
    scan_f_star,
)
from .macaulay import expand
from .oracle import MAX_ENUM_VERTICES, count_complexes, from_facets, parse_facets, reduced_betti, survey
from .shadow import error_fn, exchange_report, lower_shadow, shift_up, upper_shadow
from .sqfree import SieveBudgetError, build_sieve, sigma, sigma_odd, verify_inequalities, verify_range
from .verify import oracle_suite

OPS = {"lower": lower_shadow, "upper": upper_shadow, "shift": shift_up, "delta": error_fn}


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(text)


def _seq(text: str, name: str):
    try:
        return parse_seq(text)
    except ValueError as exc:
        raise UsageError(f"--{name}: {exc}") from None


def cmd_expand(args) -> int:
    rep = expand(args.n, args.dim)
    text = " + ".join(f"C({a},{t})" for a, t in rep.terms) or "0"
    _emit(args, {"n": args.n, "dim": args.dim, "terms": [list(t) for t in rep.terms]}, text)
    return 0


def cmd_op(args) -> int:
    value = OPS[args.kind](args.n, args.k)
    _emit(args, {"kind": args.kind, "n": args.n, "k": args.k, "value": value}, str(value))
    return 0


def cmd_exchange(args) -> int:
    try:
        report = exchange_report(args.n, args.m, args.k, args.eps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"({part}) {lhs} <=> {rhs}" for part, (lhs, rhs) in zip("abc", (report.a, report.b, report.c))]
    lines.append("consistent" if report.consistent else "INCONSISTENT")
    _emit(args, report.to_json(), "\n".join(lines))
    return 0 if report.consistent else 1


def cmd_compat(args) -> int:
    f, beta = _seq(args.f, "f"), _seq(args.beta, "beta")
    eps = _seq(args.eps, "eps") if args.eps is not None else None
    if eps is not None and args.mode != "relaxed":
        raise UsageError("--eps requires --mode relaxed")
    try:
        report = check_compatible(f, beta, args.mode, eps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = report.to_json()
    payload.update(f=list(f), beta=list(beta))
    text = "true" if report.ok else f"false: {report.reason}"
    _emit(args, payload, text)
    return 0


def cmd_fvec(args) -> int:
    f = _seq(args.f, "f")
    verdict = is_f_vector(f)
    first = next((k for k in range(1, len(f)) if lower_shadow(f[k], k) > f[k - 1]), None)
    payload = {"f": list(f), "is_f_vector": verdict, "violated_k": first}
    text = "true" if verdict else f"false: lower_shadow(f_{first}, {first}) = {lower_shadow(f[first], first)} > f_{first - 1} = {f[first - 1]}"
    _emit(args, payload, text)
    return 0


def cmd_psi(args) -> int:
    f = _seq(args.f, "f")
    try:
        value = psi(f)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"f": list(f), "psi": list(value)}, str(value))
    return 0


def cmd_phi(args) -> int:
    beta = _seq(args.beta, "beta")
    value = phi(beta)
    _emit(args, {"beta": list(beta), "phi": list(value)}, str(value))
    return 0


def cmd_extreme(args, check, key: str) -> int:
    f, beta = _seq(args.f, "f"), _seq(args.beta, "beta")
    try:
        verdict = check(f, beta)
    except InconsistentCharacterization as exc:
        _emit(args, {"f": list(f), "beta": list(beta), "error": str(exc)}, f"INCONSISTENT: {exc}")
        return 1
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"f": list(f), "beta": list(beta), key: verdict}, str(verdict).lower())
    return 0


def cmd_betti(args) -> int:
    try:
        c = from_facets(args.vertices, parse_facets(args.facets))
        field = "Q" if args.field.lower() == "q" else args.field
        profile = reduced_betti(c, field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = f"f = {profile.f}  betti = {profile.betti}  cycle_dims = {list(profile.cycle_dims)}  over {profile.field_tag}"
    _emit(args, profile.to_json(), text)
    return 0


def cmd_enumerate(args) -> int:
    n = args.max_vertices
    if not 1 <= n <= MAX_ENUM_VERTICES:
        raise UsageError(f"--max-vertices must be in 1..{MAX_ENUM_VERTICES}")
    if not args.verify:
        counts = {str(v): count_complexes(v) for v in range(1, n + 1)}
        total = sum(counts.values())
        _emit(args, {"complexes": counts, "total": total}, "\n".join(f"{v}: {c}" for v, c in counts.items()) + f"\ntotal: {total}")
        return 0
    if n > 5:
        raise UsageError("--verify keeps every complex in memory; use --max-vertices <= 5")
    report = oracle_suite(n)
    payload = report.to_json()
    lines = [f"complexes per vertex count: {report.complexes} (total {sum(report.complexes.values())})"]
    lines.append(f"distinct f-vectors {report.f_vectors}, distinct (f, betti) pairs {report.pairs}")
    lines.append(f"candidates {report.candidates}, compatible {report.compatible_candidates}")
    for name in ("unsound", "identity_failures", "unrealized", "equivalence_failures", "psi_failures", "phi_failures", "field_discrepancies"):
        items = payload[name]
        lines.append(f"{name}: {len(items)}")
        lines.extend(f"  {item}" for item in items[:10])
    lines.append("all verified" if report.ok else "VERIFICATION FAILED")
    _emit(args, payload, "\n".join(lines))
    return 0 if report.ok else 1


def cmd_sieve(args) -> int:
    if args.n is not None and args.verify:
        raise UsageError("--n queries one n; drop it to --verify the whole range")
    if args.stride < 1:
        raise UsageError("--stride must be positive")
    try:
        table = build_sieve(args.limit)
    except (ValueError, SieveBudgetError) as exc:
        raise UsageError(str(exc)) from None
    if args.n is not None:
        if not 0 <= args.n <= args.limit:
            raise UsageError(f"--n must lie in [0, {args.limit}]")
        ks = [args.k] if args.k is not None else list(range(0, table.max_omega + 1))
        inequalities = verify_inequalities(table, args.n)
        records = []
        for k in ks:
            records.append(
                {
                    "n": args.n,
                    "k": k,
                    "sigma": sigma(table, k, args.n),
                    "sigma_odd": sigma_odd(table, k, args.n),
                    "bjorner_ok": inequalities.bjorner[k][0] if k in inequalities.bjorner else None,
                    "corollary_ok": inequalities.corollary[k][0] if k in inequalities.corollary else None,
                }
            )
        payload = records[0] if len(records) == 1 else {"records": records}
        text = "\n".join(
            f"k={r['k']}: sigma={r['sigma']} sigma_odd={r['sigma_odd']} bjorner_ok={r['bjorner_ok']} corollary_ok={r['corollary_ok']}"
            for r in records
        )
        _emit(args, payload, text)
        return 0 if inequalities.ok else 1
    if not args.verify:
        squarefree = int(table.squarefree.sum())
        _emit(args, {"limit": args.limit, "squarefree": squarefree, "max_omega": table.max_omega}, f"square-free integers <= {args.limit}: {squarefree}")
        return 0
    report = verify_range(table, stride=args.stride)
    text = f"checked {report.checks} inequalities for n <= {args.limit} (stride {args.stride}): " + (
        "all hold" if report.ok else f"{len(report.failures)} FAILURES, first {report.failures[0]}"
    )
    _emit(args, report.to_json(), text)
    return 0 if report.ok else 1


def cmd_scan_f_star(args) -> int:
    n = args.max_vertices
    if not 1 <= n <= 5:
        raise UsageError("--max-vertices must be in 1..5")
    f_vectors = sorted({e.f for v in range(1, n + 1) for e in survey(v)}, key=lambda f: f.entries)
    cases = scan_f_star(f_vectors)
    anomalies = [c for c in cases if c.anomalous]
    broken = [c for c in cases if not (c.shifted_identity and c.below_bound)]
    payload = {
        "max_vertices": n,
        "f_vectors": len(cases),
        "delta_nonzero": sum(1 for c in cases if not c.delta.is_zero()),
        "equality_with_delta_nonzero": [c.to_json() for c in anomalies],
        "identity_or_bound_failures": [c.to_json() for c in broken],
    }
    lines = [
        f"{len(cases)} f-vectors, {payload['delta_nonzero']} with nonzero delta",
        f"equality phi(psi(f)) = f - delta(f) - delta_plus(f) with delta(f) != 0: {len(anomalies)}",
    ]
    lines += [f"  f={c.f} delta={c.delta} delta_plus={c.delta_plus} phi(psi(f))={c.phi_psi}" for c in anomalies]
    lines.append(f"shifted identity or bound failures: {len(broken)}")
    _emit(args, payload, "\n".join(lines))
    return 0 if not broken else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="shadowcalc", description="Shadow calculus for f-vectors and Betti sequences.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="Macaulay expansion of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("op", parents=[common], help="evaluate one shadow operator")
    p.add_argument("--kind", choices=sorted(OPS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("exchange", parents=[common], help="both sides of the exchange equivalences")
    for name in ("n", "m", "k"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--eps", type=int, default=0)
    p.set_defaults(func=cmd_exchange)

    p = sub.add_parser("compat", parents=[common], help="is (f, beta) a compatible pair")
    p.add_argument("--f", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--mode", choices=["bk", "upper", "relaxed"], default="bk")
    p.add_argument("--eps")
    p.set_defaults(func=cmd_compat)

    p = sub.add_parser("fvec", parents=[common], help="Kruskal-Katona test")
    p.add_argument("--f", required=True)
    p.set_defaults(func=cmd_fvec)

    p = sub.add_parser("psi", parents=[common], help="maximal Betti sequence of an f-vector")
    p.add_argument("--f", required=True)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("phi", parents=[common], help="minimal f-vector of a Betti sequence")
    p.add_argument("--beta", required=True)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("maximal", parents=[common], help="is beta = psi(f)")
    p.add_argument("--f", required=True)
    p.add_argument("--beta", required=True)
    p.set_defaults(func=lambda a: cmd_extreme(a, is_maximal_pair, "maximal"))

    p = sub.add_parser("minimal", parents=[common], help="is f = phi(beta)")
    p.add_argument("--f", required=True)
    p.add_argument("--beta", required=True)
    p.set_defaults(func=lambda a: cmd_extreme(a, is_minimal_pair, "minimal"))

    p = sub.add_parser("betti", parents=[common], help="reduced Betti numbers of a facet list")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--facets", required=True, help='e.g. "0 1 2; 2 3"')
    p.add_argument("--field", default="q", help="q for the rationals or a prime such as 2")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate complexes, optionally run the oracle suites")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sieve", parents=[common], help="square-free sieve and shadow inequalities")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--stride", type=int, default=1)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("scan-f-star", parents=[common], help="equality cases of phi(psi(f)) <= f - delta - delta_plus")
    p.add_argument("--max-vertices", type=int, required=True)
    p.set_defaults(func=cmd_scan_f_star)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"shadowcalc {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
