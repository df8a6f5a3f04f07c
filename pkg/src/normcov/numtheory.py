"""Exact integer arithmetic underpinning every bound in this package.

All counting here is exact. Interval endpoints are rationals, divisibility is
integer divisibility, and no float ever enters a code path that produces a
number used in a bound.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import ceil, floor, gcd

__all__ = [
    "Interval",
    "TotientReport",
    "a_of_n",
    "divisors",
    "euler_phi",
    "factorize",
    "is_prime",
    "moebius",
    "nu",
    "p0_of_n",
    "phi_interval",
    "primes_up_to",
    "squarefree_divisors",
    "totient_report",
]

# Intervals holding at most this many integers are counted by direct scan;
# longer ones go through Moebius inclusion-exclusion.
SCAN_LIMIT = 10**6

# Largest modulus for which a coprimality table is cached for scanning.
_TABLE_LIMIT = 3 * 10**6


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"expected a positive integer, got {n!r}")


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n by trial division, as (prime, exponent) pairs."""
    _check_positive(n)
    out: list[tuple[int, int]] = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, by sieve."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            start = p * p
            sieve[start : limit + 1 : p] = b"\x00" * ((limit - start) // p + 1)
    return [i for i in range(limit + 1) if sieve[i]]


def euler_phi(n: int) -> int:
    """Count of integers in 1..n coprime to n."""
    _check_positive(n)
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def nu(n: int) -> int:
    """Number of distinct prime divisors of n."""
    _check_positive(n)
    return len(factorize(n))


def moebius(n: int) -> int:
    """Moebius function: 0 unless n is squarefree, else (-1)**nu(n)."""
    _check_positive(n)
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    _check_positive(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def squarefree_divisors(n: int) -> list[int]:
    """Squarefree divisors of n, ascending; there are exactly 2**nu(n)."""
    _check_positive(n)
    ps = [p for p, _ in factorize(n)]
    out = []
    for r in range(len(ps) + 1):
        for combo in combinations(ps, r):
            d = 1
            for p in combo:
                d *= p
            out.append(d)
    return sorted(out)


def a_of_n(n: int) -> int:
    """Least positive integer that does not divide n.

    The result is always a prime power p**k with gcd(n, result) == p**(k-1).
    """
    _check_positive(n)
    m = 2
    while n % m == 0:
        m += 1
    return m


def p0_of_n(n: int) -> int:
    """Least prime that does not divide n."""
    _check_positive(n)
    p = 2
    while True:
        if is_prime(p) and n % p != 0:
            return p
        p += 1


@dataclass(frozen=True)
class TotientReport:
    """phi, nu and mu of a single integer, bundled."""

    n: int
    phi: int
    nu: int
    mu: int


def totient_report(n: int) -> TotientReport:
    return TotientReport(n=n, phi=euler_phi(n), nu=nu(n), mu=moebius(n))


_INTERVAL_RE = re.compile(r"^\s*([\[(])\s*([^,\s]+)\s*,\s*([^,\s\])]+)\s*([\])])\s*$")


@dataclass(frozen=True)
class Interval:
    """An interval with exact rational endpoints, each open or closed.

    Defaults describe the half-open interval [lo, hi) which is the common
    shape for the coprime-counting bounds.
    """

    lo: Fraction
    hi: Fraction
    lo_open: bool = False
    hi_open: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo < 0:
            raise ValueError(f"interval endpoints must be nonnegative, got lo={self.lo}")
        if self.lo > self.hi:
            raise ValueError(f"empty orientation: lo={self.lo} > hi={self.hi}")

    @classmethod
    def parse(cls, text: str) -> "Interval":
        """Parse bracket notation such as "[2,11/2)" or "(1,8]"."""
        m = _INTERVAL_RE.match(text)
        if not m:
            raise ValueError(f"cannot parse interval {text!r}")
        lo_b, lo_s, hi_s, hi_b = m.groups()
        return cls(
            lo=Fraction(lo_s),
            hi=Fraction(hi_s),
            lo_open=(lo_b == "("),
            hi_open=(hi_b == ")"),
        )

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def first_integer(self) -> int:
        """Smallest integer inside the interval (may exceed last_integer)."""
        i = ceil(self.lo)
        if self.lo_open and i == self.lo:
            i += 1
        return i

    def last_integer(self) -> int:
        j = floor(self.hi)
        if self.hi_open and j == self.hi:
            j -= 1
        return j

    def contains(self, x: int | Fraction) -> bool:
        if self.lo_open:
            if x <= self.lo:
                return False
        elif x < self.lo:
            return False
        if self.hi_open:
            return x < self.hi
        return x <= self.hi

    def __str__(self) -> str:
        def fmt(f: Fraction) -> str:
            return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"

        return ("(" if self.lo_open else "[") + f"{fmt(self.lo)},{fmt(self.hi)}" + (")" if self.hi_open else "]")


@lru_cache(maxsize=64)
def _coprime_table(n: int) -> bytes:
    # table[i] == 1 iff gcd(i, n) == 1, for 0 <= i <= n
    return bytes(1 if gcd(i, n) == 1 else 0 for i in range(n + 1))


def _phi_interval_scan(iv: Interval, n: int) -> int:
    a = max(iv.first_integer(), 1)
    b = iv.last_integer()
    if b < a:
        return 0
    if n <= _TABLE_LIMIT:
        return sum(_coprime_table(n)[a : b + 1])
    return sum(1 for i in range(a, b + 1) if gcd(i, n) == 1)


def _phi_interval_moebius(iv: Interval, n: int) -> int:
    a = max(iv.first_integer(), 1)
    b = iv.last_integer()
    if b < a:
        return 0
    total = 0
    for d in squarefree_divisors(n):
        total += moebius(d) * (b // d - (a - 1) // d)
    return total


def phi_interval(iv: Interval, n: int) -> int:
    """Exact count of integers i >= 1 in the interval with gcd(i, n) == 1.

    The count always differs from (phi(n)/n) * |interval| by at most
    2**(nu(n)+1); tests exercise that error bound.
    """
    _check_positive(n)
    if iv.lo < 0 or iv.hi > n:
        raise ValueError(f"interval {iv} not contained in [0, {n}]")
    a = max(iv.first_integer(), 1)
    b = iv.last_integer()
    if b - a + 1 <= SCAN_LIMIT:
        return _phi_interval_scan(iv, n)
    return _phi_interval_moebius(iv, n)
