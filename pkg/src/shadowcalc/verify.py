"""Exhaustive cross-checks of the closed formulas against enumerated complexes."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Iterator

from .compat import (
    IntSeq,
    chi_table,
    is_compatible,
    is_compatible_relaxed,
    is_compatible_upper,
    is_f_vector,
)
from .extremal import delta_seq, phi, psi
from .oracle import survey
from .shadow import upper_shadow

__all__ = ["OracleReport", "oracle_suite", "candidate_pairs", "realized_pairs", "relaxed_slacks"]


def realized_pairs(max_vertices: int, field="Q") -> set[tuple[IntSeq, IntSeq]]:
    return {(e.f, e.betti) for n in range(1, max_vertices + 1) for e in survey(n, field)}


def relaxed_slacks(f: IntSeq) -> Iterator[IntSeq]:
    """Every slack sequence ``0 <= eps <= delta(f)``."""
    bound = delta_seq(f)
    for eps in product(*(range(b + 1) for b in bound)):
        yield IntSeq(eps)


def candidate_pairs(max_vertices: int) -> Iterator[tuple[IntSeq, IntSeq]]:
    """Pairs ``(f, beta)`` with ``f`` below the full simplex on ``max_vertices`` vertices.

    ``beta_0`` is solved from ``chi(-1) = 1`` (pairs violating it are
    incompatible outright), the other entries range over ``0 .. f_k``.  No
    compatible pair is skipped: the predicate itself forces
    ``beta_k <= f_k - chi_{k-1} <= f_k`` with ``chi_{k-1} >= 0``.
    """
    caps = [comb(max_vertices, k + 1) for k in range(max_vertices)]
    for f0 in range(1, caps[0] + 1):
        for rest in product(*(range(c + 1) for c in caps[1:])):
            f = (f0,) + rest
            for tail in product(*(range(v + 1) for v in rest)):
                beta = [0] + list(tail)
                # chi(-1) = sum (-1)^j (f_j - beta_j) = 1
                beta[0] = sum((-1) ** j * (f[j] - beta[j]) for j in range(len(f))) - 1
                if 0 <= beta[0] <= f0:
                    yield IntSeq(f), IntSeq(beta)


@dataclass
class OracleReport:
    max_vertices: int
    complexes: dict[int, int] = field(default_factory=dict)
    f_vectors: int = 0
    pairs: int = 0
    unsound: list = field(default_factory=list)
    identity_failures: list = field(default_factory=list)
    field_discrepancies: list = field(default_factory=list)
    candidates: int = 0
    compatible_candidates: int = 0
    unrealized: list = field(default_factory=list)
    equivalence_failures: list = field(default_factory=list)
    psi_failures: list = field(default_factory=list)
    phi_failures: list = field(default_factory=list)
    phi_checked: int = 0

    @property
    def ok(self) -> bool:
        # field discrepancies are reported, not failures, as long as both profiles stay compatible
        return not (
            self.unsound
            or self.identity_failures
            or self.unrealized
            or self.equivalence_failures
            or self.psi_failures
            or self.phi_failures
        )

    def to_json(self) -> dict:
        return {
            "max_vertices": self.max_vertices,
            "complexes": {str(n): c for n, c in self.complexes.items()},
            "total_complexes": sum(self.complexes.values()),
            "distinct_f_vectors": self.f_vectors,
            "distinct_pairs": self.pairs,
            "unsound": self.unsound,
            "identity_failures": self.identity_failures,
            "field_discrepancies": self.field_discrepancies,
            "candidates": self.candidates,
            "compatible_candidates": self.compatible_candidates,
            "unrealized": self.unrealized,
            "equivalence_failures": self.equivalence_failures,
            "psi_failures": self.psi_failures,
            "phi_checked": self.phi_checked,
            "phi_failures": self.phi_failures,
            "ok": self.ok,
        }


def _three_way(f: IntSeq, beta: IntSeq) -> list[str]:
    verdict = is_compatible(f, beta)
    problems = []
    if is_compatible_upper(f, beta) != verdict:
        problems.append("upper")
    for eps in relaxed_slacks(f):
        if is_compatible_relaxed(f, beta, eps) != verdict:
            problems.append(f"relaxed eps={list(eps)}")
    return problems


def oracle_suite(max_vertices: int = 5, completeness: bool = True) -> OracleReport:
    """Soundness, completeness and extremal tightness over all complexes on <= max_vertices."""
    if not 1 <= max_vertices <= 5:
        raise ValueError("the oracle suite keeps every complex in memory and runs for 1..5 vertices")
    report = OracleReport(max_vertices)
    by_f: dict[IntSeq, set[IntSeq]] = {}
    by_beta: dict[IntSeq, set[IntSeq]] = {}

    for n in range(1, max_vertices + 1):
        entries = survey(n)
        mod2 = survey(n, 2)
        report.complexes[n] = len(entries)
        for entry, entry2 in zip(entries, mod2):
            f, beta = entry.f, entry.betti
            by_f.setdefault(f, set()).add(beta)
            by_beta.setdefault(beta, set()).add(f)
            facets = [list(face) for face in entry.complex.facets()]
            if not is_compatible(f, beta):
                report.unsound.append({"facets": facets, "f": list(f), "betti": list(beta)})
            table = chi_table(f, beta)
            if table[-1] != 1:
                report.identity_failures.append({"facets": facets, "check": "euler", "chi": table[-1]})
            for k, z in enumerate(entry.cycle_dims):
                if z != f[k] - table[k - 1]:
                    report.identity_failures.append({"facets": facets, "check": "cycle_dim", "k": k})
                if k >= 1 and z > upper_shadow(f[k], k):
                    report.identity_failures.append({"facets": facets, "check": "cycle_bound", "k": k})
            if entry2.betti != beta:
                report.field_discrepancies.append(
                    {"facets": facets, "betti_Q": list(beta), "betti_F2": list(entry2.betti)}
                )
                if not is_compatible(f, entry2.betti):
                    report.unsound.append({"facets": facets, "f": list(f), "betti_F2": list(entry2.betti)})

    report.f_vectors = len(by_f)
    pairs = {(f, b) for f, bs in by_f.items() for b in bs}
    report.pairs = len(pairs)

    for f, beta in sorted(pairs, key=lambda p: (p[0].entries, p[1].entries)):
        problems = _three_way(f, beta)
        if problems:
            report.equivalence_failures.append({"f": list(f), "beta": list(beta), "forms": problems})

    if completeness:
        for f, beta in candidate_pairs(max_vertices):
            report.candidates += 1
            problems = _three_way(f, beta)
            if problems:
                report.equivalence_failures.append({"f": list(f), "beta": list(beta), "forms": problems})
            if not is_compatible(f, beta):
                continue
            report.compatible_candidates += 1
            if not is_f_vector(f):
                report.unsound.append({"f": list(f), "beta": list(beta), "check": "compatible non-f-vector"})
            if (f, beta) not in pairs:
                report.unrealized.append({"f": list(f), "beta": list(beta)})

    for f, betas in sorted(by_f.items(), key=lambda item: item[0].entries):
        top = IntSeq(max(b[i] for b in betas) for i in range(max(len(b) for b in betas) + 1))
        expected = psi(f)
        if top != expected or expected not in betas:
            report.psi_failures.append(
                {"f": list(f), "max_realized": list(top), "psi": list(expected), "psi_realized": expected in betas}
            )

    for beta, fs in sorted(by_beta.items(), key=lambda item: item[0].entries):
        expected = phi(beta)
        if expected[0] > max_vertices:
            continue
        report.phi_checked += 1
        bottom = IntSeq(min(f[i] for f in fs) for i in range(max(len(f) for f in fs) + 1))
        if bottom != expected or expected not in fs:
            report.phi_failures.append(
                {"beta": list(beta), "min_realized": list(bottom), "phi": list(expected), "phi_realized": expected in fs}
            )
    return report
