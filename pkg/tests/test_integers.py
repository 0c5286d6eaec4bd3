import math
import random

import pytest

from primewitness.algebra.integers import (
    MR_DETERMINISTIC_BOUND,
    factor_integer,
    int_is_prime,
    primes,
    smallest_prime_not_dividing,
)


def trial_is_prime(n):
    n = abs(n)
    return n >= 2 and all(n % k for k in range(2, math.isqrt(n) + 1))


def test_prime_examples():
    assert int_is_prime(1019)
    assert not int_is_prime(1)
    assert not int_is_prime(7133)
    assert 7133 == 7 * 1019
    assert not int_is_prime(0)
    assert int_is_prime(-1019)


def test_is_prime_matches_trial_division():
    for n in range(-200, 20000):
        assert int_is_prime(n) == trial_is_prime(n), n


def test_strong_pseudoprimes_rejected():
    # composites that fool several single-base Fermat/MR tests
    for n in (561, 1105, 2047, 3215031751, 3825123056546413051, 318665857834031151167461):
        assert not int_is_prime(n)
    assert MR_DETERMINISTIC_BOUND > 318665857834031151167461


def test_large_known_primes():
    assert int_is_prime(2**61 - 1)
    assert int_is_prime(2**89 - 1)
    assert not int_is_prime((2**61 - 1) * (2**31 - 1))


def test_prime_count_to_1019():
    # sieve of Eratosthenes as the counting oracle
    sieve = [True] * 1020
    sieve[0] = sieve[1] = False
    for i in range(2, 32):
        if sieve[i]:
            for j in range(i * i, 1020, i):
                sieve[j] = False
    expected = sum(sieve)
    assert expected == 171
    it = primes()
    got = [next(it) for _ in range(expected)]
    assert got[-1] == 1019


def test_primes_continue_past_sieve():
    it = primes()
    last = [next(it) for _ in range(78500)][-3:]
    assert all(int_is_prime(p) for p in last) and last[-1] > 10**6


def test_smallest_prime_not_dividing():
    assert smallest_prime_not_dividing(2) == 3
    assert smallest_prime_not_dividing(1) == 2
    assert smallest_prime_not_dividing(-6) == 5
    assert smallest_prime_not_dividing(2 * 3 * 5 * 7 * 11) == 13
    with pytest.raises(ValueError):
        smallest_prime_not_dividing(0)


def test_factor_examples():
    assert factor_integer(-1019) == (-1, [1019])
    assert factor_integer(1) == (1, [])
    assert factor_integer(360) == (1, [2, 2, 2, 3, 3, 5])
    with pytest.raises(ValueError):
        factor_integer(0)


def test_factor_reconstruction():
    rng = random.Random(7)
    for _ in range(2000):
        n = rng.choice([-1, 1]) * rng.randint(1, 10**12)
        unit, fs = factor_integer(n)
        assert unit * math.prod(fs) == n
        assert fs == sorted(fs)
        assert all(int_is_prime(p) for p in fs)


def test_factor_needs_rho():
    # both factors above the trial-division limit
    p, q = 1000003, 998244353
    assert factor_integer(p * q) == (1, [p, q])
    r = 2**61 - 1
    assert factor_integer(-(p**2) * r * 12) == (-1, [2, 2, 3, p, p, r])
