"""Integer sequences, partial Euler characteristics and compatibility tests.

A pair ``(f, beta)`` is *compatible* when some simplicial complex has
f-vector ``f`` and reduced Betti sequence ``beta``.  Three equivalent
predicates are exposed: the shadow form (:func:`is_compatible`), the
upper-shadow form (:func:`is_compatible_upper`) and the slackened shadow
form (:func:`is_compatible_relaxed`).

Index convention: ``chi(f, beta, k)`` is the alternating tail sum starting
at ``j = k + 1``, so ``chi(f, beta, -1)`` is the full Euler-Poincare sum,
which equals 1 for every nonempty complex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .shadow import error_fn, lower_shadow, upper_shadow

__all__ = [
    "IntSeq",
    "parse_seq",
    "chi",
    "chi_table",
    "is_f_vector",
    "CompatReport",
    "check_compatible",
    "is_compatible",
    "is_compatible_upper",
    "is_compatible_relaxed",
]


class IntSeq(Sequence[int]):
    """Ultimately vanishing sequence of naturals, stored without trailing zeros.

    Indexing past the stored entries yields 0.  ``<=`` is the componentwise
    partial order, so ``not x <= y`` does not imply ``y <= x``.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[int] = ()):
        values = [int(v) for v in entries]
        for v in values:
            if v < 0:
                raise ValueError(f"sequence entries must be natural numbers, got {v}")
        while values and values[-1] == 0:
            values.pop()
        self._entries = tuple(values)

    @property
    def entries(self) -> tuple[int, ...]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return self._entries[i]
        if i < 0:
            raise IndexError("IntSeq is indexed from 0")
        return self._entries[i] if i < len(self._entries) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntSeq):
            return self._entries == other._entries
        if isinstance(other, (tuple, list)):
            return self == IntSeq(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._entries)

    def __le__(self, other) -> bool:
        other = _coerce(other)
        size = max(len(self), len(other))
        return all(self[i] <= other[i] for i in range(size))

    def __ge__(self, other) -> bool:
        return _coerce(other) <= self

    def __lt__(self, other) -> bool:
        return self <= other and self != _coerce(other)

    def __gt__(self, other) -> bool:
        return _coerce(other) < self

    def __add__(self, other) -> IntSeq:
        other = _coerce(other)
        size = max(len(self), len(other))
        return IntSeq(self[i] + other[i] for i in range(size))

    def __sub__(self, other) -> IntSeq:
        other = _coerce(other)
        size = max(len(self), len(other))
        diff = [self[i] - other[i] for i in range(size)]
        if any(v < 0 for v in diff):
            raise ValueError(f"{self} - {other} leaves negative entries")
        return IntSeq(diff)

    def is_zero(self) -> bool:
        return not self._entries

    def __repr__(self) -> str:
        return f"IntSeq({list(self._entries)})"

    def __str__(self) -> str:
        return ",".join(str(v) for v in self._entries) if self._entries else "0"


def _coerce(x) -> IntSeq:
    return x if isinstance(x, IntSeq) else IntSeq(x)


def parse_seq(text: str) -> IntSeq:
    """Parse ``"3,3,1"``; trailing zeros allowed, empty string or ``"0"`` is the zero sequence."""
    text = text.strip()
    if not text:
        return IntSeq()
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token.isdigit():
            raise ValueError(f"bad sequence entry {token!r} in {text!r}")
        values.append(int(token))
    return IntSeq(values)


def chi_table(f: Sequence[int], beta: Sequence[int]) -> dict[int, int]:
    """``{k: chi(f, beta, k)}`` for ``k = -1 .. L`` where beyond ``L`` all values vanish."""
    f, beta = _coerce(f), _coerce(beta)
    top = max(len(f), len(beta))
    table = {top: 0}
    # chi_{k-1} = (f_k - beta_k) - chi_k
    for k in range(top, -1, -1):
        table[k - 1] = (f[k] - beta[k]) - table[k]
    return table


def chi(f: Sequence[int], beta: Sequence[int], k: int) -> int:
    """Alternating tail sum ``sum_{j >= k+1} (-1)^(j-k-1) (f_j - beta_j)``; may be negative."""
    if k < -1:
        raise ValueError("chi is defined for k >= -1")
    f, beta = _coerce(f), _coerce(beta)
    top = max(len(f), len(beta))
    return sum((-1) ** (j - k - 1) * (f[j] - beta[j]) for j in range(k + 1, top))


def is_f_vector(f: Sequence[int]) -> bool:
    """Kruskal-Katona test: ``lower_shadow(f_k, k) <= f_{k-1}`` for every ``k >= 1``."""
    f = _coerce(f)
    return all(lower_shadow(f[k], k) <= f[k - 1] for k in range(1, len(f)))


@dataclass(frozen=True)
class CompatReport:
    """Verdict of one compatibility test plus the first violated condition."""

    ok: bool
    mode: str
    reason: str = ""
    k: int | None = None
    lhs: int | None = None
    rhs: int | None = None
    chi: dict[int, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "compatible": self.ok,
            "mode": self.mode,
            "reason": self.reason,
            "k": self.k,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "chi": {str(k): v for k, v in sorted(self.chi.items())},
        }


MODES = ("bk", "upper", "relaxed")


def check_compatible(
    f: Sequence[int],
    beta: Sequence[int],
    mode: str = "bk",
    eps: Sequence[int] | None = None,
) -> CompatReport:
    """Run one of the three equivalent compatibility tests and explain the verdict.

    ``mode`` is ``"bk"`` (shadow form), ``"upper"`` (upper-shadow form) or
    ``"relaxed"`` (shadow form with slack ``eps``, where ``eps <= delta(f)``).
    Quantities that must be natural but come out negative make the test
    fail rather than raise.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    f, beta = _coerce(f), _coerce(beta)
    slack = _coerce(eps or ())
    if mode == "relaxed":
        for k in range(len(slack)):
            bound = 0 if k == 0 else error_fn(f[k], k)
            if slack[k] > bound:
                raise ValueError(f"eps_{k} = {slack[k]} exceeds delta_{k}(f_{k}) = {bound}")
    elif slack:
        raise ValueError("eps is only meaningful in relaxed mode")

    table = chi_table(f, beta)
    if table[-1] != 1:
        return CompatReport(False, mode, f"chi(-1) = {table[-1]}", -1, table[-1], 1, table)

    top = max(len(f), len(beta))
    for k in range(1, top + 1):
        below = table[k - 1]
        cycles = f[k] - below  # == chi_k + beta_k
        if mode == "upper":
            up = upper_shadow(f[k], k)
            if cycles < 0:
                return CompatReport(False, mode, f"f_{k} - chi({k - 1}) = {cycles} < 0", k, cycles, 0, table)
            if cycles > up:
                reason = f"f_{k} - chi({k - 1}) = {cycles} > upper_shadow(f_{k}, {k}) = {up}"
                return CompatReport(False, mode, reason, k, cycles, up, table)
            continue
        if cycles < 0:
            reason = f"chi({k}) + beta_{k} = {cycles} < 0"
            return CompatReport(False, mode, reason, k, cycles, 0, table)
        lhs = lower_shadow(cycles, k)
        rhs = below - slack[k]
        if lhs > rhs:
            what = f"chi({k - 1})" if mode == "bk" else f"chi({k - 1}) - eps_{k}"
            reason = f"lower_shadow(chi({k}) + beta_{k}, {k}) = {lhs} > {what} = {rhs}"
            return CompatReport(False, mode, reason, k, lhs, rhs, table)
    return CompatReport(True, mode, "", None, None, None, table)


def is_compatible(f: Sequence[int], beta: Sequence[int]) -> bool:
    return check_compatible(f, beta, "bk").ok


def is_compatible_upper(f: Sequence[int], beta: Sequence[int]) -> bool:
    return check_compatible(f, beta, "upper").ok


def is_compatible_relaxed(f: Sequence[int], beta: Sequence[int], eps: Sequence[int]) -> bool:
    return check_compatible(f, beta, "relaxed", eps).ok
