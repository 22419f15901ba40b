"""Extremal Betti sequences and f-vectors.

``psi(f)`` is the componentwise largest Betti sequence among complexes with
f-vector ``f``; ``phi(beta)`` is the componentwise smallest f-vector among
complexes with Betti sequence ``beta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .compat import IntSeq, _coerce, chi_table, is_compatible, is_f_vector
from .shadow import error_fn, lower_shadow, upper_shadow

__all__ = [
    "delta_seq",
    "delta_plus",
    "psi",
    "phi",
    "is_maximal_pair",
    "is_minimal_pair",
    "InconsistentCharacterization",
    "FStarCase",
    "scan_f_star",
]


class InconsistentCharacterization(AssertionError):
    """Two characterizations that must agree gave different verdicts."""


def delta_seq(f: Sequence[int]) -> IntSeq:
    """``(0, error_fn(f_1, 1), error_fn(f_2, 2), ...)``."""
    f = _coerce(f)
    return IntSeq([0] + [error_fn(f[k], k) for k in range(1, len(f))])


def delta_plus(f: Sequence[int]) -> IntSeq:
    """``delta_seq(f)`` shifted left by one: entry k is ``error_fn(f_{k+1}, k+1)``."""
    f = _coerce(f)
    return IntSeq(error_fn(f[k + 1], k + 1) for k in range(len(f) - 1))


def _require_f_vector(f: IntSeq) -> None:
    if f.is_zero():
        raise ValueError("the zero sequence is not the f-vector of a nonempty complex")
    if not is_f_vector(f):
        raise ValueError(f"{f} is not an f-vector (Kruskal-Katona condition fails)")


def psi(f: Sequence[int]) -> IntSeq:
    """Maximal Betti sequence: ``upper(f_i, i) + upper(f_{i+1}, i+1) - f_{i+1}``."""
    f = _coerce(f)
    _require_f_vector(f)
    return IntSeq(
        upper_shadow(f[i], i) + upper_shadow(f[i + 1], i + 1) - f[i + 1] for i in range(len(f))
    )


def phi(beta: Sequence[int]) -> IntSeq:
    """Minimal f-vector, built top-down with ``chi_{k-1} = lower_shadow(chi_k + beta_k, k)``."""
    beta = _coerce(beta)
    top = len(beta) - 1
    if top < 0:
        return IntSeq([1])
    chis = {top: 0}
    for k in range(top, 0, -1):
        chis[k - 1] = lower_shadow(chis[k] + beta[k], k)
    f = [chis[0] + beta[0] + 1]
    f += [chis[k] + beta[k] + chis[k - 1] for k in range(1, top + 1)]
    return IntSeq(f)


def _maximal_forms(f: IntSeq, beta: IntSeq) -> tuple[bool, bool]:
    table = chi_table(f, beta)
    if table[-1] != 1:
        return False, False
    shadow_form = upper_form = True
    for k in range(1, max(len(f), len(beta)) + 1):
        below = table[k - 1]
        cycles = f[k] - below
        if cycles < 0 or lower_shadow(cycles, k) + error_fn(f[k], k) != below:
            shadow_form = False
        if cycles != upper_shadow(f[k], k):
            upper_form = False
    return shadow_form, upper_form


def is_maximal_pair(f: Sequence[int], beta: Sequence[int]) -> bool:
    """True iff ``beta == psi(f)``, decided by both maximality characterizations.

    Raises :class:`InconsistentCharacterization` if the shadow form, the
    upper-shadow form and the closed form of ``psi`` disagree.
    """
    f, beta = _coerce(f), _coerce(beta)
    _require_f_vector(f)
    shadow_form, upper_form = _maximal_forms(f, beta)
    closed = beta == psi(f)
    if not shadow_form == upper_form == closed:
        raise InconsistentCharacterization(
            f"maximality of ({f}; {beta}): shadow={shadow_form} upper={upper_form} psi={closed}"
        )
    return closed


def _minimal_forms(f: IntSeq, beta: IntSeq) -> tuple[bool, bool]:
    table = chi_table(f, beta)
    shadow_form = upper_form = True
    for k in range(1, max(len(f), len(beta)) + 1):
        below = table[k - 1]
        cycles = f[k] - below
        if cycles < 0 or lower_shadow(cycles, k) != below:
            shadow_form = False
        if cycles != upper_shadow(f[k], k):
            upper_form = False
    upper_form = upper_form and delta_seq(f).is_zero()
    return shadow_form, upper_form


def is_minimal_pair(f: Sequence[int], beta: Sequence[int]) -> bool:
    """True iff ``f == phi(beta)`` for a compatible pair, checked three ways."""
    f, beta = _coerce(f), _coerce(beta)
    if not is_compatible(f, beta):
        raise ValueError(f"({f}; {beta}) is not a compatible pair")
    shadow_form, upper_form = _minimal_forms(f, beta)
    closed = f == phi(beta)
    if not shadow_form == upper_form == closed:
        raise InconsistentCharacterization(
            f"minimality of ({f}; {beta}): shadow={shadow_form} upper={upper_form} phi={closed}"
        )
    return closed


@dataclass(frozen=True)
class FStarCase:
    """One f-vector checked against ``phi(psi(f)) <= f - delta(f) - delta_plus(f)``."""

    f: IntSeq
    delta: IntSeq
    delta_plus: IntSeq
    phi_psi: IntSeq
    bound: tuple[int, ...]
    shifted_identity: bool  # phi(psi(f) + delta_plus(f)) == f - delta(f)
    below_bound: bool
    equality: bool

    @property
    def anomalous(self) -> bool:
        """Equality in the final inequality although ``delta(f) != 0``."""
        return self.equality and not self.delta.is_zero()

    def to_json(self) -> dict:
        return {
            "f": list(self.f),
            "delta": list(self.delta),
            "delta_plus": list(self.delta_plus),
            "phi_psi": list(self.phi_psi),
            "bound": list(self.bound),
            "shifted_identity": self.shifted_identity,
            "below_bound": self.below_bound,
            "equality": self.equality,
            "delta_nonzero": not self.delta.is_zero(),
        }


def _signed_trim(values: list[int]) -> tuple[int, ...]:
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def f_star_case(f: Sequence[int]) -> FStarCase:
    f = _coerce(f)
    d, dp = delta_seq(f), delta_plus(f)
    pp = phi(psi(f))
    size = max(len(f), len(pp))
    bound = _signed_trim([f[i] - d[i] - dp[i] for i in range(size)])
    padded = list(bound) + [0] * (size - len(bound))
    below = all(pp[i] <= padded[i] for i in range(size))
    return FStarCase(
        f=f,
        delta=d,
        delta_plus=dp,
        phi_psi=pp,
        bound=bound,
        shifted_identity=phi(psi(f) + dp) == f - d,
        below_bound=below,
        equality=tuple(pp) == bound,
    )


def scan_f_star(f_vectors: Iterable[Sequence[int]]) -> list[FStarCase]:
    """Evaluate every f-vector; callers filter ``anomalous`` cases for the report."""
    return [f_star_case(f) for f in f_vectors]
