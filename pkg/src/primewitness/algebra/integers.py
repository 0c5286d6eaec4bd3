"""Primality testing and integer factorization."""
from __future__ import annotations

import math
from functools import lru_cache

# Strong-pseudoprime bases; the first 13 primes are deterministic below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
MR_DETERMINISTIC_BOUND = 3317044064679887385961981
# Beyond the bound the test is probabilistic; more bases shrink the error.
_MR_EXTRA_BASES = (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

TRIAL_DIVISION_LIMIT = 10**6


@lru_cache(maxsize=None)
def small_primes(limit: int = TRIAL_DIVISION_LIMIT) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """True iff |n| is prime."""
    n = abs(n)
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES if n < MR_DETERMINISTIC_BOUND else _MR_BASES + _MR_EXTRA_BASES
    return all(_strong_probable_prime(n, a, d, s) for a in bases)


int_is_prime = is_prime


def primes():
    """Yield 2, 3, 5, 7, ... without bound."""
    yield from small_primes()
    n = small_primes()[-1] + 2
    while True:
        if is_prime(n):
            yield n
        n += 2


def smallest_prime_not_dividing(d: int) -> int:
    if d == 0:
        raise ValueError("every prime divides 0")
    d = abs(d)
    for p in primes():
        if d % p:
            return p
    raise AssertionError("unreachable")


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite n."""
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed on {n}")


def _split(n: int, out: list[int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out.append(n)
        return
    f = _pollard_brent(n)
    _split(f, out)
    _split(n // f, out)


def factor_integer(n: int) -> tuple[int, list[int]]:
    """Return (unit, primes) with n == unit * prod(primes), primes ascending."""
    if n == 0:
        raise ValueError("cannot factor 0")
    unit = -1 if n < 0 else 1
    n = abs(n)
    factors: list[int] = []
    if n > 1 and not is_prime(n):
        for p in small_primes():
            if p * p > n:
                break
            if n % p == 0:
                while n % p == 0:
                    factors.append(p)
                    n //= p
                if is_prime(n):
                    break
    _split(n, factors)
    factors.sort()
    return unit, factors
