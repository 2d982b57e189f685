"""Factorization helpers, p-parts and primitive prime divisors.

All factorization is plain trial division; inputs are desk scale and a
wrong probabilistic answer would silently poison downstream divisibility
claims, so no shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import PointRangeError


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


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its prime factorization."""

    factors: tuple        # ((p1, f1), (p2, f2), ...) with p1 < p2 < ...
    value: int

    def __post_init__(self):
        v = 1
        last = 1
        for p, f in self.factors:
            if not is_prime(p) or f < 1 or p <= last:
                raise PointRangeError(f"bad factorization entry ({p}, {f})")
            last = p
            v *= p ** f
        if v != self.value:
            raise PointRangeError(
                f"factors multiply to {v}, not {self.value}")

    @classmethod
    def of(cls, n: int) -> "FactoredInteger":
        return factorize(n)

    @classmethod
    def from_factors(cls, factors) -> "FactoredInteger":
        factors = tuple(sorted((int(p), int(f)) for p, f in factors))
        v = 1
        for p, f in factors:
            v *= p ** f
        return cls(factors=factors, value=v)

    def exponent_of(self, p: int) -> int:
        for q, f in self.factors:
            if q == p:
                return f
        return 0

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{f}" if f > 1 else str(p)
                          for p, f in self.factors)


def factorize(n: int) -> FactoredInteger:
    """Exact trial-division factorization of n >= 1."""
    if n < 1:
        raise PointRangeError(f"cannot factorize {n}; need n >= 1")
    value = n
    factors = []
    for p in range(2, isqrt(n) + 1):
        if p * p > n:
            break
        if n % p:
            continue
        f = 0
        while n % p == 0:
            n //= p
            f += 1
        factors.append((p, f))
    if n > 1:
        factors.append((n, 1))
    return FactoredInteger(factors=tuple(factors), value=value)


def prime_divisors(n: int) -> set:
    """pi(n): the set of prime divisors."""
    return {p for p, _ in factorize(n).factors}


def p_part(n: int, p: int) -> int:
    """The p-part |n|_p = p^f with p^f || n."""
    if not is_prime(p):
        raise PointRangeError(f"{p} is not prime")
    if n < 1:
        raise PointRangeError(f"need n >= 1, got {n}")
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def half_exponent_divisor(n) -> int:
    """prod p_i^ceil(f_i/2) over the factorization of n.

    Accepts an int or a FactoredInteger.  Its square is divisible by n
    and it divides n.
    """
    fi = n if isinstance(n, FactoredInteger) else factorize(n)
    out = 1
    for p, f in fi.factors:
        out *= p ** ((f + 1) // 2)
    return out


def _prime_power_split(a: int):
    """(p, f) with a = p^f, or None if a is not a prime power."""
    if a < 2:
        return None
    fact = factorize(a).factors
    if len(fact) != 1:
        return None
    return fact[0]


def primitive_prime_divisors(a: int, m: int) -> set:
    """Primes dividing a^m - 1 but no a^i - 1 for 0 < i < m (direct search)."""
    if a < 2 or m < 1:
        raise PointRangeError("need a >= 2 and m >= 1")
    candidates = prime_divisors(a ** m - 1)
    for i in range(1, m):
        if not candidates:
            break
        lower = a ** i - 1
        candidates = {r for r in candidates if lower % r != 0}
    return candidates


def ppd(a: int, m: int) -> set:
    """The primitive-prime-divisor set of a prime power a = p^f and m >= 2.

    Defined as the primitive prime divisors of (p, f*m), except that the
    pair (p, f*m) = (2, 6) is fixed to {7}.
    """
    split = _prime_power_split(a)
    if split is None:
        raise PointRangeError(f"{a} is not a prime power")
    if m < 2:
        raise PointRangeError("need m >= 2")
    p, f = split
    if (p, f * m) == (2, 6):
        return {7}
    return primitive_prime_divisors(p, f * m)


def zsigmondy_has_ppd(a: int, m: int) -> bool:
    """Whether (a, m) has a primitive prime divisor, for a, m >= 2.

    Existence fails exactly when m = 2 with a + 1 a power of 2, or
    (a, m) = (2, 6); in every other case a primitive prime divisor
    exists.
    """
    if a < 2 or m < 2:
        raise PointRangeError("need a >= 2 and m >= 2")
    if (a, m) == (2, 6):
        return False
    if m == 2:
        s = a + 1
        while s % 2 == 0:
            s //= 2
        return s != 1
    return True
