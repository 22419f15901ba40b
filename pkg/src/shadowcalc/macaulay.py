"""Macaulay (combinatorial number system) representations.

Every natural ``n`` has a unique expansion at dimension ``k``::

    n = C(a_{k+1}, k+1) + C(a_k, k) + ... + C(a_i, i),
    a_{k+1} > a_k > ... > a_i >= i >= 1.

``expand(n, k)`` returns this expansion.  The operator parameter ``k`` is
always the dimension, so the top binomial has lower index ``k + 1``.  Zero
is the empty term list at every dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, total_ordering
from math import comb, factorial
from typing import Iterable, Sequence

__all__ = ["MacaulayRep", "binomial", "expand", "evaluate", "compare"]

Term = tuple[int, int]


def binomial(a: int, b: int) -> int:
    """Exact binomial coefficient; 0 whenever ``a < b``."""
    if a < 0 or b < 0:
        raise ValueError(f"binomial needs naturals, got ({a}, {b})")
    return comb(a, b)


def check_terms(terms: Sequence[Term], dim: int) -> None:
    """Raise ValueError unless ``terms`` is a valid expansion at ``dim``."""
    expected_t = dim + 1
    prev_a = None
    for a, t in terms:
        if t != expected_t:
            raise ValueError(
                f"lower indices must run {dim + 1}, {dim}, ... without gaps; got {t} where {expected_t} was expected"
            )
        if t < 1:
            raise ValueError("lower index below 1")
        if a < t:
            raise ValueError(f"upper index {a} is smaller than lower index {t}")
        if prev_a is not None and a >= prev_a:
            raise ValueError(f"upper indices must strictly decrease ({prev_a} then {a})")
        prev_a = a
        expected_t -= 1


@total_ordering
@dataclass(frozen=True)
class MacaulayRep:
    """Unique binomial expansion of a natural number at dimension ``dim``.

    ``terms`` holds ``(a_t, t)`` pairs, ``t`` descending from ``dim + 1``.
    Ordering between reps of the same dimension is symbolic (see
    :func:`compare`) and agrees with the numeric order.
    """

    dim: int
    terms: tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError("dimension must be a natural number")
        object.__setattr__(self, "terms", tuple((int(a), int(t)) for a, t in self.terms))
        check_terms(self.terms, self.dim)

    @property
    def value(self) -> int:
        return evaluate(self)

    @property
    def trailing_index(self) -> int | None:
        """Smallest lower index ``i`` used, or None for the zero rep."""
        return self.terms[-1][1] if self.terms else None

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __lt__(self, other: MacaulayRep) -> bool:
        return compare(self, other) < 0

    def to_json(self) -> dict:
        return {"dim": self.dim, "terms": [list(term) for term in self.terms]}


def _max_upper(r: int, t: int) -> int:
    """Largest ``a`` with ``C(a, t) <= r`` (requires ``r >= 1``)."""
    if t == 1:
        return r
    scaled = r * factorial(t)
    if scaled.bit_length() < 1000:
        # C(a, t) ~ (a - (t-1)/2)^t / t!
        guess = max(t, int(scaled ** (1.0 / t) + (t - 1) / 2))
    else:
        guess = t
    # gallop from the guess to a bracket lo <= answer < hi, then bisect
    step = 1
    if comb(guess, t) <= r:
        lo, hi = guess, guess + 1
        while comb(hi, t) <= r:
            lo, hi = hi, hi + step
            step *= 2
    else:
        lo, hi = guess - 1, guess
        while comb(lo, t) > r:
            hi, lo = lo, max(t, lo - step)
            step *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, t) <= r:
            lo = mid
        else:
            hi = mid
    return lo


@lru_cache(maxsize=1 << 16)
def _expand_terms(n: int, dim: int) -> tuple[Term, ...]:
    terms = []
    r = n
    t = dim + 1
    while r > 0:
        a = _max_upper(r, t)
        terms.append((a, t))
        r -= comb(a, t)
        t -= 1
    return tuple(terms)


def expand(n: int, dim: int) -> MacaulayRep:
    """Greedy Macaulay expansion of ``n`` with top lower index ``dim + 1``."""
    if n < 0 or dim < 0:
        raise ValueError(f"expand needs naturals, got n={n}, dim={dim}")
    return MacaulayRep(dim, _expand_terms(n, dim))


def terms_of(n: int, dim: int) -> tuple[Term, ...]:
    """Raw ``(a_t, t)`` pairs of ``expand(n, dim)`` without building a rep."""
    if n < 0 or dim < 0:
        raise ValueError(f"expand needs naturals, got n={n}, dim={dim}")
    return _expand_terms(n, dim)


def evaluate(rep: MacaulayRep | Iterable[Term]) -> int:
    """Sum of ``C(a_t, t)`` over the terms.

    Accepts a :class:`MacaulayRep` or a bare list of ``(a_t, t)`` pairs;
    bare lists are validated (dimension inferred from the top term).
    """
    if not isinstance(rep, MacaulayRep):
        terms = [tuple(term) for term in rep]
        if terms:
            check_terms(terms, terms[0][1] - 1)
        return sum(comb(a, t) for a, t in terms)
    return sum(comb(a, t) for a, t in rep.terms)


def compare(x: MacaulayRep, y: MacaulayRep) -> int:
    """Compare two reps symbolically; returns -1, 0 or 1.

    At the largest lower index where the upper indices differ, the smaller
    upper index wins.  If one term list is a prefix of the other, the
    shorter one (larger trailing index) is the smaller number.
    """
    if x.dim != y.dim:
        raise ValueError(f"cannot compare reps of dimensions {x.dim} and {y.dim}")
    for (a, _), (b, _) in zip(x.terms, y.terms):
        if a != b:
            return -1 if a < b else 1
    if len(x.terms) == len(y.terms):
        return 0
    return -1 if len(x.terms) < len(y.terms) else 1
