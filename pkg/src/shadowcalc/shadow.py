"""Shadow operators on naturals.

All four operators read the Macaulay expansion of ``n`` at dimension ``k``
(top lower index ``k + 1``) and map every term ``C(a_t, t)``:

==============  ===================  ==========================
lower_shadow    C(a_t, t - 1)        lower index moves down
upper_shadow    C(a_t - 1, t)        upper index moves down
shift_up        C(a_t + 1, t)        upper index moves up
error_fn        [a_t == t]           counts degenerate terms
==============  ===================  ==========================

Every operator sends 0 to 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .macaulay import terms_of

__all__ = [
    "lower_shadow",
    "upper_shadow",
    "shift_up",
    "error_fn",
    "ExchangeReport",
    "exchange_report",
]


@lru_cache(maxsize=1 << 18)
def lower_shadow(n: int, k: int) -> int:
    return sum(comb(a, t - 1) for a, t in terms_of(n, k))


@lru_cache(maxsize=1 << 18)
def upper_shadow(n: int, k: int) -> int:
    # degenerate terms (a_t == t) contribute C(t - 1, t) = 0
    return sum(comb(a - 1, t) for a, t in terms_of(n, k))


def shift_up(n: int, k: int) -> int:
    return sum(comb(a + 1, t) for a, t in terms_of(n, k))


@lru_cache(maxsize=1 << 18)
def error_fn(n: int, k: int) -> int:
    return sum(1 for a, t in terms_of(n, k) if a == t)


@dataclass(frozen=True)
class ExchangeReport:
    """Both sides of the three exchange equivalences for ``(n, m, k, eps)``.

    a: lower_shadow(n) <= m - eps        vs  n <= upper_shadow(n + m)
    b: n == upper_shadow(n + m)          vs  lower_shadow(n) + error_fn(n + m) == m
    c: lower_shadow(n) == m              vs  n == upper_shadow(n + m) and error_fn(n + m) == 0
    """

    n: int
    m: int
    k: int
    eps: int
    a: tuple[bool, bool]
    b: tuple[bool, bool]
    c: tuple[bool, bool]

    @property
    def consistent(self) -> bool:
        return all(lhs == rhs for lhs, rhs in (self.a, self.b, self.c))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "eps": self.eps,
            "a": list(self.a),
            "b": list(self.b),
            "c": list(self.c),
            "consistent": self.consistent,
        }


def exchange_report(n: int, m: int, k: int, eps: int = 0) -> ExchangeReport:
    """Evaluate both sides of each exchange equivalence without asserting."""
    if n < 0 or m < 0 or k < 0:
        raise ValueError("n, m and k must be natural numbers")
    total = n + m
    err = error_fn(total, k)
    if not 0 <= eps <= err:
        raise ValueError(f"eps={eps} outside [0, error_fn({total}, {k})] = [0, {err}]")
    low = lower_shadow(n, k)
    up = upper_shadow(total, k)
    return ExchangeReport(
        n=n,
        m=m,
        k=k,
        eps=eps,
        a=(low <= m - eps, n <= up),
        b=(n == up, low + err == m),
        c=(low == m, n == up and err == 0),
    )
