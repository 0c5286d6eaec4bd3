import random

import pytest

from primewitness.algebra.modpoly import InvalidModulus, ModPoly, mod_reduce, modpoly_divrem, modpoly_ext_gcd
from primewitness.parser import parse_poly as P

from randgen import rand_poly


def test_mod_reduce_examples():
    assert mod_reduce(P("2x^2-1"), 3) == ModPoly(3, (2, 0, 2))
    assert mod_reduce(P("3x"), 3).is_zero()
    assert mod_reduce(P("x"), 1019) == ModPoly(1019, (0, 1))
    with pytest.raises(InvalidModulus):
        mod_reduce(P("x"), 4)


def test_divrem_examples():
    q, r = modpoly_divrem(ModPoly(3, (2, 0, 2)), ModPoly(3, (1, 0, 1)))
    assert (q, r) == (ModPoly(3, (2,)), ModPoly(3))
    assert modpoly_divrem(ModPoly(1019, (0, 1)), ModPoly(1019, (0, 1))) == (ModPoly(1019, (1,)), ModPoly(1019))
    assert modpoly_divrem(ModPoly(5, (1,)), ModPoly(5, (0, 1))) == (ModPoly(5), ModPoly(5, (1,)))
    with pytest.raises(ZeroDivisionError):
        modpoly_divrem(ModPoly(5, (1,)), ModPoly(5))


def test_ext_gcd_examples():
    x, g = ModPoly(3, (0, 1)), ModPoly(3, (1, 0, 1))
    gcd, s, t = modpoly_ext_gcd(x, g)
    assert gcd == ModPoly(3, (1,)) and s == ModPoly(3, (0, 2))
    assert (s * x - ModPoly(3, (1,))) == t.scale(-1) * g

    a = ModPoly(7, (3, 5, 1))
    gcd, s, t = modpoly_ext_gcd(a, a)
    assert gcd == a.monic() and s * a + t * a == gcd

    gcd, s, t = modpoly_ext_gcd(ModPoly(1019, (2,)), ModPoly(1019, (0, 1)))
    assert (gcd, s, t) == (ModPoly(1019, (1,)), ModPoly(1019, (510,)), ModPoly(1019))
    with pytest.raises(ZeroDivisionError):
        modpoly_ext_gcd(ModPoly(5), ModPoly(5))


def test_divrem_identity_random():
    rng = random.Random(3)
    for p in (2, 3, 5, 1019):
        for _ in range(250):
            a = ModPoly(p, rand_poly(rng, 8, 2000).coeffs)
            b = ModPoly(p, rand_poly(rng, 5, 2000).coeffs)
            if b.is_zero():
                continue
            q, r = modpoly_divrem(a, b)
            assert q * b + r == a
            assert r.degree < b.degree


def test_ext_gcd_bezout_random():
    rng = random.Random(4)
    count = 0
    for p in (2, 3, 5, 1019):
        while count < 250 * (1 + (2, 3, 5, 1019).index(p)):
            a = ModPoly(p, rand_poly(rng, 6, 50).coeffs)
            b = ModPoly(p, rand_poly(rng, 6, 50).coeffs)
            if a.is_zero() and b.is_zero():
                continue
            g, s, t = modpoly_ext_gcd(a, b)
            assert (s * a + t * b - g).is_zero()
            assert g.lc == 1
            for x in (a, b):
                assert modpoly_divrem(x, g)[1].is_zero()
            count += 1
    assert count == 1000


def test_reduction_is_ring_homomorphism():
    rng = random.Random(5)
    for _ in range(1000):
        p = rng.choice([2, 3, 5, 1019])
        a, b = rand_poly(rng, 6, 10**6), rand_poly(rng, 6, 10**6)
        assert mod_reduce(a + b, p) == mod_reduce(a, p) + mod_reduce(b, p)
        assert mod_reduce(a * b, p) == mod_reduce(a, p) * mod_reduce(b, p)


def test_lift_uses_least_residues():
    assert ModPoly(7, (-1, 9, -14)).lift() == P("2x + 6")
