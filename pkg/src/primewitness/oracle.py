"""Membership oracle M and companion function nu, with call counters.

An :class:`Oracle` wraps two total Python callables.  Overrides are kept in
a separate layer keyed by canonical polynomials and always win over the base
functions, which is what the interactive refinement loop edits.
"""
from __future__ import annotations

from typing import Callable, Mapping

from .algebra.modpoly import ModPoly, modpoly_divrem, modpoly_ext_gcd
from .algebra.poly import Poly
from .parser import OracleSpec, Override

Membership = Callable[[Poly], bool]
Companion = Callable[[Poly], Poly]


class Oracle:
    def __init__(
        self,
        membership: Membership,
        nu: Companion,
        m_overrides: Mapping[Poly, bool] | None = None,
        nu_overrides: Mapping[Poly, Poly] | None = None,
        name: str = "oracle",
    ):
        self._membership = membership
        self._nu = nu
        self.m_overrides: dict[Poly, bool] = dict(m_overrides or {})
        self.nu_overrides: dict[Poly, Poly] = dict(nu_overrides or {})
        self.name = name
        self.m_calls = 0
        self.nu_calls = 0

    def membership(self, f: Poly) -> bool:
        self.m_calls += 1
        if f in self.m_overrides:
            return self.m_overrides[f]
        return bool(self._membership(f))

    def nu(self, f: Poly) -> Poly:
        self.nu_calls += 1
        if f in self.nu_overrides:
            return self.nu_overrides[f]
        return self._nu(f)

    def fresh(self) -> Oracle:
        """Same functions and overrides, counters at zero."""
        return Oracle(self._membership, self._nu, self.m_overrides, self.nu_overrides, self.name)

    def with_override(self, target: str, key: Poly, value) -> Oracle:
        if target == "M":
            if not isinstance(value, bool):
                raise TypeError("M override needs a boolean value")
            o = self.fresh()
            o.m_overrides[key] = value
        elif target == "nu":
            if not isinstance(value, Poly) or value.var != "x":
                raise TypeError("nu override needs a polynomial in x")
            o = self.fresh()
            o.nu_overrides[key] = value
        else:
            raise ValueError(f"unknown override target {target!r}")
        return o

    def overrides(self) -> list[Override]:
        out = [Override("M", k, v) for k, v in self.m_overrides.items()]
        out += [Override("nu", k, v) for k, v in self.nu_overrides.items()]
        return out

    def __repr__(self):
        return f"<Oracle {self.name} m_calls={self.m_calls} nu_calls={self.nu_calls}>"


def membership(o: Oracle, f: Poly) -> bool:
    return o.membership(f)


def nu_value(o: Oracle, f: Poly) -> Poly:
    return o.nu(f)


def apply_override(o: Oracle, target: str, key: Poly, value) -> Oracle:
    return o.with_override(target, key, value)


# ----------------------------------------------------------------------
# built-in oracles


def pg_ideal(p: int, g: Poly) -> tuple[Membership, Companion]:
    """The ideal <p, g>: f is a member iff g mod p divides f mod p."""
    gbar = ModPoly(p, g.coeffs)
    if gbar.is_zero():
        raise ValueError(f"g vanishes modulo {p}")

    def member(f: Poly) -> bool:
        _, r = modpoly_divrem(ModPoly(p, f.coeffs), gbar)
        return r.is_zero()

    def nu(f: Poly) -> Poly:
        fbar = ModPoly(p, f.coeffs)
        if fbar.is_zero():
            return Poly()
        gcd, s, _ = modpoly_ext_gcd(fbar, gbar)
        if gcd.coeffs != (1,):
            return Poly()
        _, s = modpoly_divrem(s, gbar)
        return s.lift()

    return member, nu


def divides_over_z(g: Poly, f: Poly) -> bool:
    """Exact divisibility g | f in Z[x]."""
    from .engine import pseudo_division

    if g.is_zero():
        return f.is_zero()
    if f.is_zero():
        return True
    res = pseudo_division(g, f)
    if not res.r.is_zero():
        return False
    # d^k f = -h g, so the quotient over Z is -h / d^k when it divides evenly
    dk = g.lc**res.k
    if any(c % dk for c in res.h.coeffs):
        return False
    quotient = Poly(tuple(-c // dk for c in res.h.coeffs))
    return quotient * g == f


def principal(g: Poly, nu: Poly) -> tuple[Membership, Companion]:
    return (lambda f: divides_over_z(g, f)), (lambda f: nu)


def constant(value: bool, nu: Poly) -> tuple[Membership, Companion]:
    return (lambda f: value), (lambda f: nu)


def table(members, default: bool, nu: Poly) -> tuple[Membership, Companion]:
    members = frozenset(members)
    return (lambda f: True if f in members else default), (lambda f: nu)


def build_oracle(spec: OracleSpec) -> Oracle:
    if spec.kind == "pg_ideal":
        m, nu = pg_ideal(spec.p, spec.g)
        name = f"pg_ideal({spec.p}, {spec.g})"
    elif spec.kind == "principal":
        m, nu = principal(spec.g, spec.default_nu)
        name = f"principal({spec.g})"
    elif spec.kind == "constant":
        m, nu = constant(spec.value, spec.default_nu)
        name = f"constant({'tt' if spec.value else 'ff'})"
    elif spec.kind == "table":
        m, nu = table(spec.members, spec.default, spec.default_nu)
        name = f"table({len(spec.members)} members)"
    else:
        raise ValueError(f"unknown oracle kind {spec.kind!r}")
    o = Oracle(m, nu, name=name)
    for ov in spec.overrides:
        o = o.with_override(ov.target, ov.key, ov.value)
    return o
