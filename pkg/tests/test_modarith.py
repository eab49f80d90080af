import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bsdisc.modarith import (carmichael_lambda, factorize, first_primes_from, is_prime,
                             lte_valuation, mod_pow, mult_order, mult_order_brute,
                             primes_in_range, primes_up_to, primitive_root, valuation)


@pytest.mark.parametrize("base,exp,m,expected", [(3, 5, 7, 5), (3, 0, 11, 1), (9, 3, 28, 1), (5, 0, 1, 0)])
def test_mod_pow(base, exp, m, expected):
    assert mod_pow(base, exp, m) == expected


def test_mod_pow_rejects_bad_modulus():
    with pytest.raises(ValueError):
        mod_pow(2, 3, 0)


@pytest.mark.parametrize("a,m,expected", [(3, 7, 6), (9, 28, 3), (3, 11, 5), (5, 1, 1)])
def test_mult_order_examples(a, m, expected):
    assert mult_order(a, m) == expected


def test_mult_order_rejects_non_coprime():
    with pytest.raises(ValueError):
        mult_order(3, 12)


def test_mult_order_matches_exhaustion():
    rng = random.Random(1)
    for m in list(range(1, 400)) + rng.sample(range(400, 10_001), 300):
        for a in rng.sample(range(1, m + 1), min(m, 6)):
            if math.gcd(a, m) != 1:
                continue
            k = mult_order(a, m)
            assert pow(a, k, m) == 1 % m
            assert all(pow(a, j, m) != 1 for j in range(1, k))
            assert k == mult_order_brute(a, m)


def test_order_identity_for_9_and_3():
    # 2 ord_{4m}(9) = lcm(2, ord_{4m}(3)) whenever 3 does not divide m
    for m in range(1, 5001):
        if m % 3 == 0:
            continue
        o3 = mult_order(3, 4 * m)
        assert 2 * mult_order(9, 4 * m) == o3 * 2 // math.gcd(2, o3)


def test_carmichael_lambda_small():
    assert [carmichael_lambda(m) for m in (1, 2, 4, 8, 16, 15, 28)] == [1, 1, 2, 2, 4, 4, 6]


@pytest.mark.parametrize("p,n,expected", [(2, 80, 4), (5, 7, 0), (3, -54, 3), (7, 7**5 * 3, 5)])
def test_valuation(p, n, expected):
    assert valuation(p, n) == expected


def test_valuation_rejects_zero():
    with pytest.raises(ValueError):
        valuation(3, 0)


@pytest.mark.parametrize("p,r,n,expected", [(2, 9, 2, 4), (2, 9, 8, 6), (5, 6, 25, 3)])
def test_lte_examples(p, r, n, expected):
    assert lte_valuation(p, r, n) == expected
    assert valuation(p, r**n - 1) == expected


def test_lte_matches_big_integers():
    for p in (2, 3, 5, 7):
        for r in range(2, 101):
            if (r - 1) % p:
                continue
            for n in range(1, 51):
                assert lte_valuation(p, r, n) == valuation(p, r**n - 1), (p, r, n)


def test_lte_rejects_bad_base():
    with pytest.raises(ValueError):
        lte_valuation(5, 7, 3)
    with pytest.raises(ValueError):
        lte_valuation(2, -1, 4)


@pytest.mark.parametrize("n,expected", [(1006003, True), (1, False), (65537, True), (2, True),
                                        (3215031751, False), (2**61 - 1, True), (2**64 - 59, True),
                                        (3825123056546413051, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


@pytest.mark.slow
def test_is_prime_agrees_with_sieve_to_1e7():
    limit = 10**7
    flags = np.zeros(limit + 1, dtype=bool)
    flags[primes_up_to(limit)] = True
    assert [n for n in range(limit + 1) if is_prime(n) != flags[n]] == []


def test_factorize_examples():
    assert factorize(28) == {2: 2, 7: 1}
    assert factorize(65536) == {2: 16}
    f = factorize(1006002)
    assert f == {2: 1, 3: 2, 55889: 1}
    # trial division confirms 55889 is prime
    assert all(55889 % d for d in range(2, math.isqrt(55889) + 1))


@given(st.integers(min_value=2, max_value=2**64 - 1))
@settings(max_examples=200, deadline=None)
def test_factorize_reconstructs(n):
    f = factorize(n)
    assert list(f) == sorted(f)
    assert all(is_prime(p) for p in f)
    assert math.prod(p**e for p, e in f.items()) == n


def test_factorize_semiprime_of_large_primes():
    p, q = 4294967291, 4294967279
    assert factorize(p * q) == {q: 1, p: 1}


def test_segmented_sieve_matches_simple_sieve():
    ps = primes_in_range(2, 50_000, segment=997)
    ref = [n for n in range(2, 50_000) if all(n % d for d in range(2, math.isqrt(n) + 1))]
    assert ps.tolist() == ref
    assert primes_in_range(100, 130).tolist() == [101, 103, 107, 109, 113, 127]


def test_first_primes_from():
    assert first_primes_from(5, 5).tolist() == [5, 7, 11, 13, 17]
    assert int(first_primes_from(2, 10**5)[-1]) == 1299709


def test_primitive_root():
    assert [primitive_root(p) for p in (7, 11, 13, 23, 41)] == [3, 2, 2, 5, 6]
