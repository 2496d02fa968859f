"""Exact integer and rational helpers.

An integer ``m`` is an *n-number* when every prime dividing ``m`` also
divides ``n``; a rational is an n-number when both parts of its reduced
form are.  Rationals are represented by :class:`fractions.Fraction`, which
already keeps the fraction reduced with a positive denominator.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import gcd

from .errors import DomainError

__all__ = [
    "factorize",
    "is_prime",
    "is_n_number_int",
    "is_n_number_ratio",
    "power_ratio_exponent",
    "as_ratio",
]


def factorize(n: int) -> Counter:
    """Prime factorization of ``n >= 1`` by trial division.

    >>> sorted(factorize(18).items())
    [(2, 1), (3, 2)]
    """
    if n < 1:
        raise DomainError(f"factorize needs n >= 1, got {n}")
    factors = Counter()
    while n % 2 == 0:
        factors[2] += 1
        n //= 2
    p = 3
    while p * p <= n:
        while n % p == 0:
            factors[p] += 1
            n //= p
        p += 2
    if n > 1:
        factors[n] += 1
    return factors


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == Counter({n: 1})


def _strip(m: int, n: int) -> int:
    # divide out of |m| every prime that also divides n
    m = abs(m)
    g = gcd(m, n)
    while g > 1:
        m //= g
        g = gcd(m, n)
    return m


def is_n_number_int(m: int, n: int) -> bool:
    """True iff every prime divisor of ``m`` divides ``n``.

    Only ``|n|`` matters; ``1`` is an n-number for every ``n``.
    """
    if n == 0:
        raise DomainError("n-number base must be nonzero")
    if m == 0:
        raise DomainError("0 is not classified as an n-number")
    return _strip(m, abs(n)) == 1


def as_ratio(q) -> Fraction:
    if isinstance(q, tuple):
        return Fraction(*q)
    return Fraction(q)


def is_n_number_ratio(q, n: int) -> bool:
    q = as_ratio(q)
    if q == 0:
        raise DomainError("zero numerator is not an n-number")
    return is_n_number_int(q.numerator, n) and is_n_number_int(q.denominator, n)


def power_ratio_exponent(q, beta) -> tuple[int, int] | None:
    """Find ``(sign, p)`` with ``q == sign * beta**p`` and ``p != 0``.

    Requires ``|beta| > 1``.  Returns ``None`` when ``q`` is no nonzero power
    of ``±beta``.  Since ``beta = L/M`` in lowest terms has ``|L| >= 2``,
    ``|L|**|p|`` must equal a part of ``q``, which bounds ``|p|`` by the bit
    length of that part.
    """
    q, beta = as_ratio(q), as_ratio(beta)
    if abs(beta) <= 1:
        raise DomainError(f"power base must satisfy |beta| > 1, got {beta}")
    if q == 0:
        raise DomainError("zero ratio has no power representation")
    bound = max(abs(q.numerator), q.denominator).bit_length()
    for p in range(1, bound + 1):
        for exp in (p, -p):
            power = beta**exp
            if q == power:
                return 1, exp
            if q == -power:
                return -1, exp
    return None
