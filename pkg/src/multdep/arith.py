"""Shared exact integer arithmetic.

Factorization (smallest-prime-factor sieve with deterministic trial division
beyond the sieve bound), radicals, smooth-number counting, minimal perfect
power bases, and vector gcds.  Everything here is exact; nothing uses floats
or probabilistic primality.

The sieve is built once, on first use, up to the limit given by the
``MULTDEP_SIEVE_LIMIT`` environment variable (default 10**6) and is then
immutable, so it can be shared freely across threads.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np

DEFAULT_SIEVE_LIMIT = 10**6

_spf_table: np.ndarray | None = None


def sieve_limit() -> int:
    """Configured sieve bound (inclusive); values above it use trial division."""
    raw = os.environ.get("MULTDEP_SIEVE_LIMIT", "")
    try:
        limit = int(raw) if raw else DEFAULT_SIEVE_LIMIT
    except ValueError:
        limit = DEFAULT_SIEVE_LIMIT
    return min(max(limit, 16), 2**31 - 2)


def _spf() -> np.ndarray:
    """Smallest-prime-factor table over [0, sieve_limit()], built once."""
    global _spf_table
    if _spf_table is None:
        n = sieve_limit()
        spf = np.zeros(n + 1, dtype=np.int32)
        for p in range(2, math.isqrt(n) + 1):
            if spf[p] == 0:
                block = spf[p * p :: p]
                block[block == 0] = p
        untouched = np.nonzero(spf == 0)[0]
        spf[untouched] = untouched  # primes, plus the 0 and 1 slots
        spf[1] = 1
        _spf_table = spf
    return _spf_table


@dataclass(frozen=True)
class SignedFactorization:
    """Sign together with the prime-exponent map of a nonzero integer.

    ``1`` maps to ``(+1, {})`` and ``-1`` to ``(-1, {})``.  ``value()``
    reconstructs the original integer exactly.
    """

    sign: int
    exponents: dict[int, int]

    def value(self) -> int:
        m = self.sign
        for p, e in self.exponents.items():
            m *= p**e
        return m


@lru_cache(maxsize=None)
def _abs_exponents(a: int) -> tuple[tuple[int, int], ...]:
    """Prime-exponent pairs of ``a`` ≥ 1, ascending primes."""
    pairs = []
    spf = _spf()
    if a < spf.shape[0]:
        while a > 1:
            p = int(spf[a])
            e = 0
            while a % p == 0:
                a //= p
                e += 1
            pairs.append((p, e))
    else:
        for p in (2, 3, 5):
            if a % p == 0:
                e = 0
                while a % p == 0:
                    a //= p
                    e += 1
                pairs.append((p, e))
        # 2,3,5-wheel trial division; deterministic for any size
        d = 7
        incr = (4, 2, 4, 2, 4, 6, 2, 6)
        i = 0
        while d * d <= a:
            if a % d == 0:
                e = 0
                while a % d == 0:
                    a //= d
                    e += 1
                pairs.append((d, e))
            d += incr[i]
            i = (i + 1) & 7
        if a > 1:
            pairs.append((a, 1))
        pairs.sort()
    return tuple(pairs)


def factorize(m: int) -> SignedFactorization:
    """Exact factorization of a nonzero integer."""
    if m == 0:
        raise ValueError("zero has no factorization")
    sign = 1 if m > 0 else -1
    return SignedFactorization(sign, dict(_abs_exponents(abs(m))))


def radical(m: int) -> int:
    """Product of the distinct primes dividing |m|; radical(±1) = 1."""
    if m == 0:
        raise ValueError("zero has no radical")
    r = 1
    for p, _ in _abs_exponents(abs(m)):
        r *= p
    return r


def psi0(x: int, y: int) -> int:
    """Number of integers in [1, x] whose prime factors all divide y.

    Counts by depth-first search over products of the distinct primes of y,
    so it stays cheap even for x up to ~10**12; 1 always counts.
    """
    if x < 1 or y < 1:
        raise ValueError("psi0 requires x >= 1 and y >= 1")
    primes = [p for p, _ in _abs_exponents(y)]

    def walk(i: int, cur: int) -> int:
        total = 1
        for j in range(i, len(primes)):
            v = cur * primes[j]
            while v <= x:
                total += walk(j + 1, v)
                v *= primes[j]
        return total

    return walk(0, 1)


def f_base(A: int) -> int:
    """Smallest B with A = B**t for some t >= 1; equals A when A is no perfect power."""
    if A <= 1:
        raise ValueError("minimal power base requires A > 1")
    pairs = _abs_exponents(A)
    g = reduce(math.gcd, (e for _, e in pairs), 0)
    b = 1
    for p, e in pairs:
        b *= p ** (e // g)
    return b


def gcd_vec(v) -> int:
    """gcd of absolute values; the all-zero vector has gcd 0."""
    return reduce(math.gcd, (abs(int(x)) for x in v), 0)


# ── lookup tables for the counting kernels ───────────────────────────────

_base_tables: dict[int, np.ndarray] = {}
_radical_tables: dict[int, np.ndarray] = {}


def power_base_table(limit: int) -> np.ndarray:
    """table[m] = f_base(m) for 2 <= m <= limit; table[1] = 1, table[0] = 0.

    Two values above 1 are multiplicatively dependent as a pair exactly when
    their table entries coincide.
    """
    if limit not in _base_tables:
        t = np.zeros(limit + 1, dtype=np.int64)
        if limit >= 1:
            t[1] = 1
        for b in range(2, limit + 1):
            if t[b] == 0:
                v = b
                while v <= limit:
                    t[v] = b
                    v *= b
        _base_tables[limit] = t
    return _base_tables[limit]


def radical_table(limit: int) -> np.ndarray:
    """table[m] = radical(m) for 1 <= m <= limit (table[0] = 0)."""
    if limit not in _radical_tables:
        is_prime = np.ones(limit + 1, dtype=bool)
        is_prime[:2] = False
        for p in range(2, math.isqrt(limit) + 1):
            if is_prime[p]:
                is_prime[p * p :: p] = False
        rad = np.ones(limit + 1, dtype=np.int64)
        rad[0] = 0
        for p in np.nonzero(is_prime)[0]:
            rad[p::p] *= p
        _radical_tables[limit] = rad
    return _radical_tables[limit]
