"""Witness-producing search for a prime in a maximal ideal of Z[x].

:func:`maxzx` runs the constructive argument step by step.  Whenever an
ideal axiom or the inverse condition of the oracle fails on a concrete
element, that element is returned as evidence; otherwise the run ends with
a prime contained in M.  Every membership query is recorded in the
certificate so the run can be replayed independently.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Sequence

from .algebra.integers import factor_integer, is_prime, primes, smallest_prime_not_dividing
from .algebra.matrix import PolyMatrix, det_adjugate
from .algebra.poly import Poly, X, poly_substitute
from .evidence import (
    Certificate,
    InverseFails,
    MultipleNotMember,
    NotMaximal,
    OneIsMember,
    Outcome,
    Prime,
    Row,
    SumNotMember,
)
from .oracle import Oracle, build_oracle

log = logging.getLogger(__name__)

ONE = Poly.constant(1)

MAX_DEGREE = 64
MAX_DIGITS = 10**6
_MAX_BITS = int(MAX_DIGITS * 3.3219280948873626) + 1


class EngineInvariantError(AssertionError):
    """An identity the construction guarantees did not hold: a bug, not evidence."""


class ResourceLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class PseudoDivResult:
    k: int
    h: Poly
    r: Poly


def pseudo_division(f: Poly, g: Poly) -> PseudoDivResult:
    """Find k, h with d^k g + h f = r and deg r < deg f, d = lc(f).

    Each reduction step replaces g by d*g - lc(g) x^(deg g - deg f) f, so k
    is the number of steps taken.
    """
    if f.is_zero():
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    d, m = f.lc, f.degree
    steps: list[tuple[int, int]] = []
    r = g
    while r.degree >= m:
        c, e = r.lc, r.degree - m
        r = d * r - Poly.monomial(c, e, f.var) * f
        steps.append((c, e))
    k = len(steps)
    h = Poly((), f.var)
    for t, (c, e) in enumerate(steps):
        h = h - Poly.monomial(d ** (k - t - 1) * c, e, f.var)
    return PseudoDivResult(k, h, r)


def geometric_expand(m: Poly, i: int) -> Poly:
    """g_i = sum_{j<i} (m+1)^j, so that (m+1)^i = 1 + m g_i."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    g = Poly((), m.var)
    power = Poly.constant(1, m.var)
    for _ in range(i):
        g = g + power
        power = power * (m + 1)
    return g


class _Run:
    """Oracle access for a single run: records membership answers."""

    def __init__(self, o: Oracle):
        self.o = o
        self.trace: list[tuple[Poly, bool]] = []

    def member(self, f: Poly | int) -> bool:
        if isinstance(f, int):
            f = Poly.constant(f)
        answer = self.o.membership(f)
        self.trace.append((f, answer))
        return answer

    def nu(self, f: Poly | int) -> Poly:
        if isinstance(f, int):
            f = Poly.constant(f)
        return self.o.nu(f)


def _unit_to_evidence(run: _Run):
    # -1 in M: either 1 in M too, or (-1)(-1) = 1 breaks closure under multiples
    if run.member(ONE):
        return OneIsMember()
    return MultipleNotMember(-ONE, -ONE)


def _max_to_prime(run: _Run, factors: Sequence[int], product: int):
    """Return ("member", a_i) or ("evidence", e); M(product) = tt is assumed."""
    items = list(factors)
    while items:
        a0, items = items[0], items[1:]
        rest = 1
        for x in items:
            rest *= x
        if run.member(a0):
            return "member", a0
        v = run.nu(a0)
        u = a0 * v - 1
        if not run.member(u):
            return "evidence", InverseFails(Poly.constant(a0))
        s = v * product
        if not run.member(s):
            return "evidence", MultipleNotMember(v, Poly.constant(product))
        # rest = v*a0*rest - (a0*v - 1)*rest
        t = -rest * u
        if not run.member(t):
            return "evidence", MultipleNotMember(Poly.constant(-rest), u)
        if not run.member(s + t):
            return "evidence", SumNotMember(s, t)
        product = rest
    return "evidence", OneIsMember()


def max_to_prime(o: Oracle, factors: Sequence[int], product: int, trace=None):
    """Some factor in M, or evidence, given that their product is in M.

    Returns ``(kind, value, trace)`` where kind is ``"member"`` (value is the
    factor) or ``"evidence"``.
    """
    check = 1
    for a in factors:
        check *= a
    if check != product:
        raise EngineInvariantError(f"product of {list(factors)} is {check}, not {product}")
    run = _Run(o)
    if trace is not None:
        run.trace = trace
    kind, value = _max_to_prime(run, factors, product)
    return kind, value, run.trace


def _find_nonconstant_member(run: _Run):
    if run.member(X):
        return X, None
    f = X * run.nu(X) - 1
    if not run.member(f):
        return None, InverseFails(X)
    if f.is_constant():
        return None, _unit_to_evidence(run)
    return f, None


def find_nonconstant_member(o: Oracle):
    """Return ``(f, None)`` with f nonconstant in M, or ``(None, evidence)``."""
    return _find_nonconstant_member(_Run(o))


def _guard(name: str, p: Poly | int):
    bits = p.max_bits() if isinstance(p, Poly) else abs(p).bit_length()
    if bits > _MAX_BITS:
        raise ResourceLimitError(f"{name} exceeds {MAX_DIGITS} decimal digits")


def maxzx(o: Oracle, max_degree: int = MAX_DEGREE) -> Outcome:
    run = _Run(o)
    cert = Certificate(lemma_trace=run.trace)

    def done(result):
        cert.outcome = result
        log.debug("maxzx finished: %s", result.describe())
        return Outcome(result, cert)

    def require(cond: bool, what: str):
        if not cond:
            raise EngineInvariantError(what)

    f, ev = _find_nonconstant_member(run)
    if ev is not None:
        return done(NotMaximal(ev))
    d, n = f.lc, f.degree
    if n > max_degree:
        raise ResourceLimitError(f"deg f = {n} exceeds the cap {max_degree}")
    cert.f, cert.d, cert.n = f, d, n

    q = smallest_prime_not_dividing(d)
    cert.q = q
    if run.member(q):
        return done(Prime(q))
    nuq = run.nu(q)
    m = q * nuq - 1
    cert.nuq, cert.m = nuq, m
    if not run.member(m):
        return done(NotMaximal(InverseFails(Poly.constant(q))))

    # rows: d^{k_i} nu(q) x^i + h_i f = sum_j a_ij x^j
    rows = []
    for i in range(n):
        res = pseudo_division(f, nuq.shift(i))
        require(res.r.degree < n, f"row {i}: remainder degree {res.r.degree} >= {n}")
        a = tuple(res.r.coeff(j) for j in range(n))
        _guard(f"row {i}", res.h)
        rows.append(Row(res.k, res.h, a))
    cert.rows = rows

    Y = Poly.gen("Y")
    A = PolyMatrix(
        tuple(
            tuple((d ** rows[i].k) * Y * (1 if i == j else 0) - rows[i].a[j] for j in range(n))
            for i in range(n)
        )
    )
    detY, adj = det_adjugate(A)
    K = sum(r.k for r in rows)
    require(detY.degree == n and detY.lc == d**K, "det(A) is not d^K Y^n + lower terms")
    b = [detY.coeff(j) for j in range(n)]
    cert.detY, cert.adjRow0, cert.K, cert.b = detY, adj, K, b

    gpolys = [geometric_expand(m, i) for i in range(1, n + 1)]
    N = d**K + sum(b[j] * q ** (n - j) for j in range(n))
    _guard("N", N)
    combo_f = Poly()
    for j in range(n):
        combo_f = combo_f - (q**n) * poly_substitute(adj[j], nuq) * rows[j].h
    combo_m = -(d**K) * gpolys[n - 1]
    for j in range(1, n):
        combo_m = combo_m - b[j] * q ** (n - j) * gpolys[j - 1]
    cert.gpolys, cert.N, cert.combo_f, cert.combo_m = gpolys, N, combo_f, combo_m
    require(N != 0, "N = 0 although q does not divide d")
    lhs, rhs = combo_f * f, combo_m * m
    require(lhs + rhs == Poly.constant(N), "combo_f f + combo_m m != N")

    if not run.member(lhs):
        return done(NotMaximal(MultipleNotMember(combo_f, f)))
    if not run.member(rhs):
        return done(NotMaximal(MultipleNotMember(combo_m, m)))
    if not run.member(lhs + rhs):
        return done(NotMaximal(SumNotMember(lhs, rhs)))

    unit, factors = factor_integer(N)
    cert.unit, cert.factors = unit, factors
    items = ([-1] if unit == -1 else []) + factors
    kind, value = _max_to_prime(run, items, N)
    if kind == "evidence":
        return done(NotMaximal(value))
    if value == -1:
        return done(NotMaximal(_unit_to_evidence(run)))
    require(is_prime(value), f"member {value} is not prime")
    return done(Prime(value))


def unbounded_search(o: Oracle, limit: int = 0) -> int | None:
    """Test primes 2, 3, 5, ... in order; limit = 0 means no bound."""
    for count, p in enumerate(primes(), 1):
        if o.membership(Poly.constant(p)):
            return p
        if limit and count >= limit:
            return None


# ----------------------------------------------------------------------
# benchmarking


@dataclass
class BenchResult:
    instance: str
    method: str
    outcome: str
    m_calls: int = 0
    nu_calls: int = 0
    seconds: float = 0.0
    error: str | None = None

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def _timed(method: str, spec, repeat: int, search_limit: int) -> BenchResult:
    name = getattr(spec, "kind", "oracle")
    total = 0.0
    for _ in range(max(repeat, 1)):
        o = build_oracle(spec)
        start = time.perf_counter()
        if method == "maxzx":
            out = maxzx(o)
            summary = out.describe()
        else:
            p = unbounded_search(o, search_limit)
            summary = f"prime: {p}" if p is not None else f"none within {search_limit}"
        total += time.perf_counter() - start
    return BenchResult(name, method, summary, o.m_calls, o.nu_calls, total / max(repeat, 1))


def run_bench(specs, repeat: int = 1, search_limit: int = 100000, names=None) -> list[BenchResult]:
    """Run maxzx and unbounded_search on fresh oracles for every spec."""
    results = []
    for idx, spec in enumerate(specs):
        label = names[idx] if names else f"{spec.kind}#{idx}"
        for method in ("maxzx", "search"):
            try:
                r = _timed(method, spec, repeat, search_limit)
            except Exception as e:
                r = BenchResult(label, method, "error", error=f"{type(e).__name__}: {e}")
            r.instance = label
            results.append(r)
    return results


__all__ = [
    "BenchResult",
    "EngineInvariantError",
    "PseudoDivResult",
    "ResourceLimitError",
    "find_nonconstant_member",
    "geometric_expand",
    "max_to_prime",
    "maxzx",
    "pseudo_division",
    "run_bench",
    "unbounded_search",
]
