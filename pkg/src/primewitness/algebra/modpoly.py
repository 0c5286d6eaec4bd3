"""Polynomials over the prime field F_p."""
from __future__ import annotations

from dataclasses import dataclass

from .integers import is_prime
from .poly import Poly, ZERO_DEGREE


class InvalidModulus(ValueError):
    pass


@dataclass(frozen=True)
class ModPoly:
    p: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        if self.p < 2:
            raise InvalidModulus(f"modulus {self.p} < 2")
        c = [x % self.p for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: ModPoly):
        if other.p != self.p:
            raise InvalidModulus(f"moduli differ: {self.p} vs {other.p}")

    def __add__(self, other: ModPoly) -> ModPoly:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return ModPoly(self.p, tuple(res))

    def __neg__(self) -> ModPoly:
        return ModPoly(self.p, tuple(-c for c in self.coeffs))

    def __sub__(self, other: ModPoly) -> ModPoly:
        return self + (-other)

    def __mul__(self, other: ModPoly) -> ModPoly:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ModPoly(self.p)
        res = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                res[i + j] += ai * bj
        return ModPoly(self.p, tuple(res))

    def scale(self, c: int) -> ModPoly:
        return ModPoly(self.p, tuple(c * x for x in self.coeffs))

    def monic(self) -> ModPoly:
        if not self.coeffs:
            return self
        return self.scale(pow(self.lc, -1, self.p))

    def lift(self) -> Poly:
        """Integer polynomial with least nonnegative residues."""
        return Poly(self.coeffs, "x")


def mod_reduce(a: Poly, p: int) -> ModPoly:
    if not is_prime(p):
        raise InvalidModulus(f"{p} is not prime")
    return ModPoly(p, a.coeffs)


def modpoly_divrem(a: ModPoly, b: ModPoly) -> tuple[ModPoly, ModPoly]:
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p = a.p
    inv = pow(b.lc, -1, p)
    r = list(a.coeffs)
    db = len(b.coeffs) - 1
    q = [0] * max(len(r) - db, 0)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] * inv % p
        if c:
            q[i - db] = c
            for j, bj in enumerate(b.coeffs):
                r[i - db + j] = (r[i - db + j] - c * bj) % p
    return ModPoly(p, tuple(q)), ModPoly(p, tuple(r[:db]))


def modpoly_ext_gcd(a: ModPoly, b: ModPoly) -> tuple[ModPoly, ModPoly, ModPoly]:
    """Return (g, s, t) with g = s*a + t*b and g monic."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise ZeroDivisionError("gcd of two zero polynomials")
    p = a.p
    one, zero = ModPoly(p, (1,)), ModPoly(p)
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        q, r = modpoly_divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    u = pow(r0.lc, -1, p)
    return r0.scale(u), s0.scale(u), t0.scale(u)
