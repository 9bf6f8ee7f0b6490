import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gauss_talbot.numtheory import (
    FractionalDistance,
    bezout_pair,
    gcd,
    half_inverse,
    is_prime,
    jacobi_symbol,
    legendre_symbol,
    mod_inverse,
    special_symbols,
)

ODD_PRIMES = [s for s in range(3, 200) if all(s % d for d in range(2, int(s**0.5) + 1))]


def residues(s):
    return {(m * m) % s for m in range(s)}


def legendre_brute(a, s):
    a %= s
    if a == 0:
        return 0
    return 1 if a in residues(s) else -1


def factor(n):
    out, d = [], 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def jacobi_brute(a, b):
    """Product of brute-force residue tests over the prime factors of b."""
    return math.prod(legendre_brute(a, s) for s in factor(b))


odd = st.integers(min_value=0, max_value=5000).map(lambda k: 2 * k + 1)


def test_gcd():
    assert gcd(6, 4) == 2
    assert gcd(1, 7) == 1
    common = [d for d in range(1, 16) if 15 % d == 0 and 10 % d == 0]
    assert gcd(15, 10) == max(common) == 5
    assert gcd(9, 0) == 9
    with pytest.raises(ValueError):
        gcd(0, 0)


def test_mod_inverse_examples():
    assert mod_inverse(3, 5).value == 2
    assert mod_inverse(2, 7).value == 4 == half_inverse(7).value
    for m in (2, 9, 100):
        assert mod_inverse(1, m).value == 1
    assert mod_inverse(-2, 7).value == 3
    with pytest.raises(ValueError, match="inverse does not exist"):
        mod_inverse(4, 6)


def test_mod_inverse_modulus_one_convention():
    assert mod_inverse(17, 1).value == 1


@given(st.integers(-10**6, 10**6), st.integers(2, 10**4))
def test_mod_inverse_property(a, m):
    if math.gcd(a % m, m) != 1:
        return
    inv = mod_inverse(a, m)
    assert 1 <= inv.value < m
    assert (a * inv.value) % m == 1


def test_half_inverse():
    assert half_inverse(7).value == 4
    assert half_inverse(3).value == 2
    assert half_inverse(5).value == 3
    for b in range(3, 1000, 2):
        assert half_inverse(b).value == mod_inverse(2, b).value
    with pytest.raises(ValueError):
        half_inverse(8)


def test_legendre_examples():
    assert legendre_symbol(1, 3) == 1
    assert legendre_symbol(2, 3) == -1
    assert legendre_symbol(4, 5) == 1
    assert legendre_symbol(10, 5) == 0


def test_legendre_matches_residue_enumeration():
    for s in ODD_PRIMES:
        for a in range(s):
            assert legendre_symbol(a, s) == legendre_brute(a, s), (a, s)


@pytest.mark.parametrize("s", [2, 9, 15, 1, 0])
def test_legendre_rejects_non_odd_primes(s):
    with pytest.raises(ValueError):
        legendre_symbol(1, s)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_jacobi_examples():
    for a in (-5, 0, 1, 7, 100):
        assert jacobi_symbol(a, 1) == 1
    assert jacobi_symbol(2, 15) == legendre_symbol(2, 3) * legendre_symbol(2, 5) == 1
    assert jacobi_symbol(2, 3) == legendre_symbol(2, 3) == -1
    with pytest.raises(ValueError):
        jacobi_symbol(3, 10)


def test_jacobi_matches_factorization_oracle():
    for b in range(1, 300, 2):
        for a in range(-20, 2 * b):
            assert jacobi_symbol(a, b) == jacobi_brute(a, b), (a, b)


@given(st.integers(-10**6, 10**6), odd)
def test_jacobi_periodic(a, b):
    assert jacobi_symbol(a, b) == jacobi_symbol(a % b, b) == jacobi_symbol(a + 7 * b, b)


@given(st.integers(-10**4, 10**4), st.integers(-10**4, 10**4), odd)
def test_jacobi_multiplicative_in_numerator(a1, a2, b):
    assert jacobi_symbol(a1 * a2, b) == jacobi_symbol(a1, b) * jacobi_symbol(a2, b)


@given(st.integers(-10**4, 10**4), odd, odd)
def test_jacobi_multiplicative_in_denominator(a, b1, b2):
    assert jacobi_symbol(a, b1 * b2) == jacobi_symbol(a, b1) * jacobi_symbol(a, b2)


def test_jacobi_reciprocity_exhaustive():
    for p in range(1, 1000, 2):
        for q in range(1, 200, 2):
            if math.gcd(p, q) != 1:
                continue
            sign = (-1) ** (((p - 1) // 2) * ((q - 1) // 2))
            assert jacobi_symbol(p, q) * jacobi_symbol(q, p) == sign


def test_special_symbols():
    assert special_symbols(7) == (1, -1)
    assert special_symbols(5) == (-1, 1)
    assert special_symbols(1) == (1, 1)
    for b in range(1, 2001, 2):
        assert special_symbols(b) == (jacobi_symbol(2, b), jacobi_symbol(b - 1, b))
    with pytest.raises(ValueError):
        special_symbols(4)


def test_bezout_examples():
    u, v = bezout_pair(5, 3)
    assert (u.value, v.value) == (2, 2) and 2 * 3 + 2 * 5 == 1 + 15
    u, v = bezout_pair(3, 2)
    assert (u.value, v.value) == (2, 1) and 2 * 2 + 1 * 3 == 1 + 6
    u, v = bezout_pair(1, 1)
    assert (u.value, v.value) == (1, 1)
    with pytest.raises(ValueError):
        bezout_pair(4, 6)


def test_bezout_random_pairs():
    rng = random.Random(1234)
    checked = 0
    while checked < 2000:
        p, q = rng.randint(1, 10**4), rng.randint(1, 10**4)
        if math.gcd(p, q) != 1:
            continue
        u, v = bezout_pair(p, q)
        assert u.value * q + v.value * p == 1 + p * q
        checked += 1


def test_bezout_squared_congruence():
    for p in range(1, 501):
        for q in range(1, 501):
            if math.gcd(p, q) != 1:
                continue
            u, v = bezout_pair(p, q)
            assert ((u.value * q) ** 2 + (v.value * p) ** 2 - 1 - (p * q) ** 2) % (2 * p * q) == 0


def test_fractional_distance():
    z = FractionalDistance(4, 6)
    assert (z.p, z.q, z.e) == (2, 3, 0)
    assert FractionalDistance(3, 5).e == 1
    assert FractionalDistance(7).q == 1
    assert FractionalDistance.parse("10/4") == FractionalDistance(5, 2)
    assert str(FractionalDistance(1, 2)) == "1/2"
    for bad in [(0, 1), (1, 0), (-1, 2)]:
        with pytest.raises(ValueError):
            FractionalDistance(*bad)


@settings(max_examples=200)
@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_fractional_distance_invariants(p, q):
    z = FractionalDistance(p, q)
    assert math.gcd(z.p, z.q) == 1
    assert z.p * q == z.q * p
    assert z.e == (1 if (z.p * z.q) % 2 else 0)
