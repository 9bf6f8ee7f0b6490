"""Exact integer arithmetic used by the Gauss-sum and Talbot code.

Everything here works on Python ints, so there is no overflow; the
double-precision paths elsewhere assume operands with ``2 * p**2 * q**2``
below ``2**63`` (``p, q <= 10**6`` is safe with room to spare).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ModInverse:
    """The unique ``value`` in ``[1, modulus)`` with ``a * value = 1 (mod modulus)``.

    For ``modulus == 1`` the value is 1 by convention, which keeps
    ``[1/q]_p q + [1/p]_q p = 1 + pq`` true when ``p`` or ``q`` is 1.
    """

    value: int
    modulus: int

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value


@dataclass(frozen=True, init=False)
class FractionalDistance:
    """A propagation distance ``p/q`` in units of the Talbot length.

    The fraction is always stored reduced. ``e`` is the half-period shift
    flag: 1 when ``p*q`` is odd, 0 otherwise.
    """

    p: int
    q: int

    def __init__(self, p: int, q: int = 1):
        p, q = int(p), int(q)
        if p <= 0 or q <= 0:
            raise ValueError(f"distance {p}/{q} must have positive numerator and denominator")
        g = math.gcd(p, q)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)

    @property
    def e(self) -> int:
        return (self.p * self.q) & 1

    @classmethod
    def parse(cls, text: str) -> "FractionalDistance":
        num, _, den = text.strip().partition("/")
        return cls(int(num), int(den) if den else 1)

    def __float__(self) -> float:
        return self.p / self.q

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def gcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def mod_inverse(a: int, m: int) -> ModInverse:
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if m == 1:
        return ModInverse(1, 1)
    if math.gcd(a % m, m) != 1:
        raise ValueError(f"inverse does not exist: gcd({a}, {m}) != 1")
    return ModInverse(pow(a, -1, m), m)


def half_inverse(b: int) -> ModInverse:
    """``[1/2]_b`` for odd ``b``, i.e. ``(1 + b) / 2``."""
    if b % 2 == 0 or b < 1:
        raise ValueError(f"half_inverse needs a positive odd modulus, got {b}")
    if b == 1:
        return ModInverse(1, 1)
    return ModInverse((1 + b) // 2, b)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def legendre_symbol(a: int, s: int) -> int:
    """Legendre symbol ``(a/s)`` for an odd prime ``s``.

    Returns 0 when ``s`` divides ``a``.
    """
    if s == 2 or not is_prime(s):
        raise ValueError(f"legendre_symbol needs an odd prime, got {s}")
    r = pow(a % s, (s - 1) // 2, s)
    return -1 if r == s - 1 else r


def jacobi_symbol(a: int, b: int) -> int:
    """Jacobi symbol ``(a/b)`` for odd positive ``b`` by the reciprocity iteration."""
    if b <= 0 or b % 2 == 0:
        raise ValueError(f"jacobi_symbol needs a positive odd denominator, got {b}")
    a %= b
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if b % 8 in (3, 5):
                result = -result
        a, b = b, a
        if a % 4 == 3 and b % 4 == 3:
            result = -result
        a %= b
    return result if b == 1 else 0


def special_symbols(b: int) -> tuple[int, int]:
    """``((2/b), (-1/b))`` from the supplementary laws."""
    if b <= 0 or b % 2 == 0:
        raise ValueError(f"special_symbols needs a positive odd integer, got {b}")
    two = -1 if ((b * b - 1) // 8) % 2 else 1
    minus_one = -1 if ((b - 1) // 2) % 2 else 1
    return two, minus_one


def bezout_pair(p: int, q: int) -> tuple[ModInverse, ModInverse]:
    """Return ``([1/q]_p, [1/p]_q)``; these satisfy ``[1/q]_p q + [1/p]_q p == 1 + p q``."""
    if p < 1 or q < 1:
        raise ValueError(f"bezout_pair needs positive integers, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise ValueError(f"bezout_pair needs coprime integers, got ({p}, {q})")
    return mod_inverse(q, p), mod_inverse(p, q)
