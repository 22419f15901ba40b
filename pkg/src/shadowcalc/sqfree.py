"""Square-free integers, their prime-factor counts and the Bjorner complex.

``sigma(t, k, n)`` counts square-free ``m <= n`` with exactly ``k`` distinct
prime factors (``k = 0`` counts only ``m = 1``); ``sigma_odd`` restricts to
odd ``m``.  The Bjorner complex on ``n`` has one face ``P(m)`` per
square-free ``2 <= m <= n``, so its f-vector is ``(sigma_1(n), sigma_2(n), ...)``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from .compat import IntSeq
from .oracle import SimplicialComplex
from .shadow import lower_shadow, upper_shadow

__all__ = [
    "SieveTable",
    "SieveBudgetError",
    "build_sieve",
    "sigma",
    "sigma_odd",
    "bjorner_f_vector",
    "bjorner_complex",
    "InequalityReport",
    "verify_inequalities",
    "RangeReport",
    "verify_range",
    "mem_limit",
]

DEFAULT_MEM_LIMIT = 2 << 30
SEGMENT = 1 << 22
BYTES_PER_ENTRY = 2  # bool flag + uint8 omega; cumulative counts are extra, per k
BJORNER_MAX = 2000


class SieveBudgetError(MemoryError):
    pass


def mem_limit() -> int:
    """Sieve memory budget in bytes from ``SHADOWCALC_MEM_LIMIT`` (suffixes K, M, G allowed)."""
    raw = os.environ.get("SHADOWCALC_MEM_LIMIT", "").strip()
    if not raw:
        return DEFAULT_MEM_LIMIT
    scale = {"K": 1 << 10, "M": 1 << 20, "G": 1 << 30}.get(raw[-1].upper(), 1)
    digits = raw[:-1] if scale != 1 else raw
    if not digits.isdigit():
        raise ValueError(f"cannot parse SHADOWCALC_MEM_LIMIT={raw!r}")
    return int(digits) * scale


def small_primes(limit: int) -> np.ndarray:
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags)


def _sieve_segment(lo: int, hi: int, base: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Square-free flags and omega for ``lo <= m < hi`` using primes up to sqrt(hi)."""
    rem = np.arange(lo, hi, dtype=np.int64)
    omega = np.zeros(hi - lo, dtype=np.uint8)
    squarefree = np.ones(hi - lo, dtype=bool)
    for p in base:
        p = int(p)
        if p >= hi:
            break
        start = (-lo) % p
        if start >= hi - lo:
            continue
        omega[start::p] += 1
        pk = p
        while pk < hi:
            s = (-lo) % pk
            rem[s::pk] //= p
            if pk > p:
                squarefree[s::pk] = False
            pk *= p
    # whatever is left above 1 is a single prime larger than sqrt(hi)
    omega += (rem > 1).astype(np.uint8)
    if lo == 0:
        squarefree[0] = False
    return squarefree, omega


@dataclass
class SieveTable:
    """Per-integer square-free flag and distinct-prime count for ``0 .. limit``."""

    limit: int
    squarefree: np.ndarray
    omega: np.ndarray
    _cum: dict = field(default_factory=dict, repr=False)

    def is_squarefree(self, m: int) -> bool:
        self._check(m)
        return bool(self.squarefree[m])

    def omega_of(self, m: int) -> int:
        self._check(m)
        return int(self.omega[m])

    @staticmethod
    def is_odd(m: int) -> bool:
        return bool(m & 1)

    def _check(self, n: int) -> None:
        if not 0 <= n <= self.limit:
            raise ValueError(f"{n} is outside the sieve range [0, {self.limit}]")

    @property
    def max_omega(self) -> int:
        return int(self.omega[self.squarefree].max()) if self.limit >= 1 else 0

    def cumulative(self, k: int, odd: bool = False) -> np.ndarray:
        """``out[n]`` is ``sigma_k(n)`` (or ``sigma_odd``) for every ``0 <= n <= limit``."""
        key = (k, odd)
        if key not in self._cum:
            hit = self.squarefree & (self.omega == k)
            if odd:
                hit = hit.copy()
                hit[::2] = False
            self._cum[key] = np.cumsum(hit, dtype=np.int64)
        return self._cum[key]


def build_sieve(limit: int, budget: int | None = None) -> SieveTable:
    """Segmented sieve of square-free flags and omega up to ``limit``."""
    if limit < 1:
        raise ValueError("sieve limit must be at least 1")
    budget = mem_limit() if budget is None else budget
    need = (limit + 1) * BYTES_PER_ENTRY
    if need > budget:
        raise SieveBudgetError(
            f"sieve up to {limit} needs about {need} bytes, budget is {budget} (SHADOWCALC_MEM_LIMIT)"
        )
    base = small_primes(isqrt(limit) + 1)
    squarefree = np.empty(limit + 1, dtype=bool)
    omega = np.empty(limit + 1, dtype=np.uint8)
    for lo in range(0, limit + 1, SEGMENT):
        hi = min(lo + SEGMENT, limit + 1)
        squarefree[lo:hi], omega[lo:hi] = _sieve_segment(lo, hi, base)
    squarefree[0], omega[0] = False, 0
    return SieveTable(limit, squarefree, omega)


def sigma(t: SieveTable, k: int, n: int) -> int:
    if k < 0:
        raise ValueError("k must be natural")
    if n == 0:
        return 0
    t._check(n)
    return int(t.cumulative(k)[n])


def sigma_odd(t: SieveTable, k: int, n: int) -> int:
    if k < 0:
        raise ValueError("k must be natural")
    if n == 0:
        return 0
    t._check(n)
    return int(t.cumulative(k, odd=True)[n])


def bjorner_f_vector(t: SieveTable, n: int) -> IntSeq:
    """``f_{k-1} = sigma_k(n)`` for ``k >= 1``."""
    if n < 2:
        raise ValueError("the Bjorner complex needs n >= 2")
    t._check(n)
    return IntSeq(sigma(t, k, n) for k in range(1, t.max_omega + 1))


def _prime_support(m: int) -> list[int]:
    primes = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            primes.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        primes.append(m)
    return primes


def bjorner_complex(n: int) -> SimplicialComplex:
    """Explicit Bjorner complex; primes up to ``n`` become vertices ``0, 1, ...`` in order."""
    if n < 2:
        raise ValueError("the Bjorner complex needs n >= 2")
    if n > BJORNER_MAX:
        raise ValueError(f"explicit Bjorner complexes are capped at n = {BJORNER_MAX}")
    primes = [int(p) for p in small_primes(n)]
    label = {p: i for i, p in enumerate(primes)}
    faces = set()
    for m in range(2, n + 1):
        support = _prime_support(m)
        prod = 1
        for p in support:
            prod *= p
        if prod == m:
            faces.add(tuple(label[p] for p in support))
    return SimplicialComplex(len(primes), frozenset(faces))


@dataclass(frozen=True)
class InequalityReport:
    """Per-k verdicts at one ``n``; each value is ``(ok, lhs, rhs)``."""

    n: int
    bjorner: dict[int, tuple[bool, int, int]]
    corollary: dict[int, tuple[bool, int, int]]

    @property
    def ok(self) -> bool:
        return all(v[0] for v in self.bjorner.values()) and all(v[0] for v in self.corollary.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "bjorner_ok": {str(k): v[0] for k, v in self.bjorner.items()},
            "corollary_ok": {str(k): v[0] for k, v in self.corollary.items()},
            "ok": self.ok,
        }


def verify_inequalities(t: SieveTable, n: int) -> InequalityReport:
    """Check both shadow inequalities at ``n`` for every ``k >= 1`` with ``sigma_{k+1}(n) > 0``.

    bjorner:   lower_shadow(sigma_odd_{k+1}(n), k) <= sigma_odd_k(n // 2)
    corollary: sigma_odd_{k+1}(n) <= upper_shadow(sigma_{k+1}(n), k)
    """
    t._check(n)
    bjorner, corollary = {}, {}
    k = 1
    while n >= 1 and sigma(t, k + 1, n) > 0:
        odd_next = sigma_odd(t, k + 1, n)
        lhs = lower_shadow(odd_next, k)
        rhs = sigma_odd(t, k, n // 2)
        bjorner[k] = (lhs <= rhs, lhs, rhs)
        up = upper_shadow(sigma(t, k + 1, n), k)
        corollary[k] = (odd_next <= up, odd_next, up)
        k += 1
    return InequalityReport(n, bjorner, corollary)


@dataclass
class RangeReport:
    upto: int
    stride: int
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "limit": self.upto,
            "stride": self.stride,
            "checks": self.checks,
            "failures": self.failures[:50],
            "failure_count": len(self.failures),
            "ok": self.ok,
        }


def _apply(fn, values: np.ndarray, k: int) -> np.ndarray:
    uniq, inverse = np.unique(values, return_inverse=True)
    mapped = np.fromiter((fn(int(v), k) for v in uniq), dtype=np.int64, count=len(uniq))
    return mapped[inverse]


def verify_range(t: SieveTable, upto: int | None = None, stride: int = 1) -> RangeReport:
    """Both inequalities for every ``n`` in ``1..upto`` (every ``stride``-th n) and every k."""
    upto = t.limit if upto is None else upto
    t._check(upto)
    if stride < 1:
        raise ValueError("stride must be positive")
    ns = np.arange(1, upto + 1, stride, dtype=np.int64)
    report = RangeReport(upto, stride)
    for k in range(1, t.max_omega):
        total = t.cumulative(k + 1)[ns]
        live = total > 0
        if not live.any():
            continue
        n_live = ns[live]
        total = total[live]
        odd_next = t.cumulative(k + 1, odd=True)[n_live]
        odd_half = t.cumulative(k, odd=True)[n_live // 2]
        low = _apply(lower_shadow, odd_next, k)
        up = _apply(upper_shadow, total, k)
        report.checks += 2 * len(n_live)
        for i in np.flatnonzero(low > odd_half):
            report.failures.append(
                {"n": int(n_live[i]), "k": k, "kind": "bjorner", "lhs": int(low[i]), "rhs": int(odd_half[i])}
            )
        for i in np.flatnonzero(odd_next > up):
            report.failures.append(
                {"n": int(n_live[i]), "k": k, "kind": "corollary", "lhs": int(odd_next[i]), "rhs": int(up[i])}
            )
    return report
