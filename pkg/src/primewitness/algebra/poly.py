"""Dense univariate polynomials with integer coefficients.

A polynomial is stored as a tuple of Python ints, lowest degree first, with
trailing zeros stripped.  The empty tuple is the zero polynomial.  Every
polynomial carries a variable tag (``"x"`` or ``"Y"``) so that the engine's
determinant work over Z[Y] cannot be silently mixed with Z[X] values.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

VARIABLES = ("x", "Y")


@functools.total_ordering
class _ZeroDegree:
    """Degree of the zero polynomial.

    Compares below every integer but supports no arithmetic, so code that
    forgets the zero case fails loudly instead of computing with -1.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if other is self:
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __hash__(self):
        return hash("ZERO_DEGREE")

    def __repr__(self):
        return "ZERO_DEGREE"

    def __reduce__(self):
        return (_ZeroDegree, ())


ZERO_DEGREE = _ZeroDegree()


class VariableMismatch(ValueError):
    """Raised when polynomials in different variables are combined."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[int, ...] = ()
    var: str = "x"

    def __post_init__(self):
        if self.var not in VARIABLES:
            raise ValueError(f"unknown variable tag {self.var!r}")
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficient {c!r} is not an integer")
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    # constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: int, var: str = "x") -> Poly:
        return cls((c,), var)

    @classmethod
    def monomial(cls, c: int, power: int, var: str = "x") -> Poly:
        if power < 0:
            raise ValueError("negative exponent")
        return cls((0,) * power + (c,), var)

    @classmethod
    def gen(cls, var: str = "x") -> Poly:
        return cls((0, 1), var)

    # basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        """Index of the highest nonzero coefficient, or ZERO_DEGREE."""
        if not self.coeffs:
            return ZERO_DEGREE
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int | None:
        return self.coeffs[-1] if self.coeffs else None

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> int:
        if len(self.coeffs) > 1:
            raise ValueError("polynomial is not constant")
        return self.coeffs[0] if self.coeffs else 0

    def max_bits(self) -> int:
        return max((abs(c).bit_length() for c in self.coeffs), default=0)

    # arithmetic ---------------------------------------------------------

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.var != self.var:
                raise VariableMismatch(f"{self.var} vs {other.var}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Poly.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return Poly(tuple(res), self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly((), self.var)
        res = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    res[i + j] += ai * bj
        return Poly(tuple(res), self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.constant(1, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k: int) -> Poly:
        """Multiply by var**k."""
        if not self.coeffs:
            return self
        return Poly((0,) * k + self.coeffs, self.var)

    def __call__(self, value):
        """Horner evaluation at an int or a polynomial."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self):
        from ..parser import format_poly

        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        from ..parser import format_poly

        return format_poly(self)


def poly_add(a: Poly, b: Poly) -> Poly:
    if a.var != b.var:
        raise VariableMismatch(f"{a.var} vs {b.var}")
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    if a.var != b.var:
        raise VariableMismatch(f"{a.var} vs {b.var}")
    return a * b


def poly_degree_lc(a: Poly):
    return a.degree, a.lc


def poly_substitute(a: Poly, v: Poly) -> Poly:
    """Evaluate a polynomial in Y at a polynomial in x."""
    if a.var != "Y" or v.var != "x":
        raise VariableMismatch("substitute expects a in Y and v in x")
    acc = Poly((), "x")
    for c in reversed(a.coeffs):
        acc = acc * v + c
    return acc


def from_coeffs(coeffs: Sequence[int], var: str = "x") -> Poly:
    return Poly(tuple(coeffs), var)


X = Poly.gen("x")
ONE = Poly.constant(1)
ZERO = Poly()
