"""Evidence of non-maximality, run certificates and their verifier.

The verifier deliberately avoids the engine's code paths: it recomputes
the expected sequence of membership queries on its own and checks every
recorded algebraic identity by direct multiplication.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from typing import Union

from .algebra.integers import is_prime, smallest_prime_not_dividing
from .algebra.matrix import PolyMatrix
from .algebra.poly import Poly, X
from .oracle import Oracle
from .parser import PolyParseError, format_poly, parse_poly, unbounded_int_digits

ONE = Poly.constant(1)


# ----------------------------------------------------------------------
# the five witnesses


@dataclass(frozen=True)
class ZeroNotMember:
    """Case 1: 0 is not in M."""

    case = 1

    def describe(self) -> str:
        return "case1 0 not in M"


@dataclass(frozen=True)
class SumNotMember:
    """Case 2: a, b in M but a + b is not."""

    a: Poly
    b: Poly
    case = 2

    def describe(self) -> str:
        return f"case2 a = {self.a}, b = {self.b}"


@dataclass(frozen=True)
class MultipleNotMember:
    """Case 3: a in M but lam * a is not."""

    lam: Poly
    a: Poly
    case = 3

    def describe(self) -> str:
        return f"case3 lambda = {self.lam}, a = {self.a}"


@dataclass(frozen=True)
class OneIsMember:
    """Case 4: 1 is in M."""

    case = 4

    def describe(self) -> str:
        return "case4 1 in M"


@dataclass(frozen=True)
class InverseFails:
    """Case 5: a not in M and a*nu(a) - 1 not in M either."""

    a: Poly
    case = 5

    def describe(self) -> str:
        return f"case5 a = {self.a}"


Evidence = Union[ZeroNotMember, SumNotMember, MultipleNotMember, OneIsMember, InverseFails]


@dataclass(frozen=True)
class Prime:
    p: int

    def describe(self) -> str:
        return f"prime: {self.p}"


@dataclass(frozen=True)
class NotMaximal:
    evidence: Evidence

    def describe(self) -> str:
        return f"not-maximal: {self.evidence.describe()}"


Result = Union[Prime, NotMaximal]


def validate_evidence(o: Oracle, e: Evidence) -> bool:
    """Replay the membership queries that define the witness."""
    M = o.membership
    if isinstance(e, ZeroNotMember):
        return not M(Poly())
    if isinstance(e, SumNotMember):
        return M(e.a) and M(e.b) and not M(e.a + e.b)
    if isinstance(e, MultipleNotMember):
        return M(e.a) and not M(e.lam * e.a)
    if isinstance(e, OneIsMember):
        return M(ONE)
    if isinstance(e, InverseFails):
        return not M(e.a) and not M(e.a * o.nu(e.a) - 1)
    raise TypeError(f"not an evidence value: {e!r}")


# ----------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class Row:
    k: int
    h: Poly
    a: tuple[int, ...]


@dataclass
class Certificate:
    f: Poly | None = None
    d: int | None = None
    n: int | None = None
    q: int | None = None
    nuq: Poly | None = None
    m: Poly | None = None
    rows: list[Row] | None = None
    detY: Poly | None = None
    adjRow0: list[Poly] | None = None
    K: int | None = None
    b: list[int] | None = None
    N: int | None = None
    combo_f: Poly | None = None
    combo_m: Poly | None = None
    gpolys: list[Poly] | None = None
    unit: int | None = None
    factors: list[int] | None = None
    lemma_trace: list[tuple[Poly, bool]] = field(default_factory=list)
    outcome: Result | None = None


@dataclass(frozen=True)
class Outcome:
    result: Result
    certificate: Certificate

    @property
    def is_prime(self) -> bool:
        return isinstance(self.result, Prime)

    def describe(self) -> str:
        return self.result.describe()


@dataclass
class VerifyReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failed(self) -> list[str]:
        return [name for name, ok, _ in self.checks if not ok]

    def to_dict(self) -> dict:
        return {
            "overall": "pass" if self.overall else "fail",
            "checks": [
                {"name": n, "status": "pass" if ok else "fail", "detail": d}
                for n, ok, d in self.checks
            ],
        }

    def format(self) -> str:
        lines = [f"{'pass' if ok else 'FAIL'}  {name}: {detail}" for name, ok, detail in self.checks]
        lines.append(f"overall: {'pass' if self.overall else 'fail'}")
        return "\n".join(lines)


# ----------------------------------------------------------------------
# verification

_PHASE_FIELDS = {
    "member": (),
    "q": ("f", "d", "n", "q"),
    "m": ("f", "d", "n", "q", "nuq", "m"),
    "combination": (
        "f", "d", "n", "q", "nuq", "m", "rows", "detY", "adjRow0",
        "K", "b", "N", "combo_f", "combo_m", "gpolys",
    ),
}
_PHASE_FIELDS["factor"] = _PHASE_FIELDS["combination"] + ("unit", "factors")
_DATA_FIELDS = _PHASE_FIELDS["factor"]


class _ProtocolError(Exception):
    pass


class _Trace:
    def __init__(self, trace):
        self.trace = trace
        self.pos = 0

    def __call__(self, query: Poly) -> bool:
        if self.pos >= len(self.trace):
            raise _ProtocolError(f"trace ends before the query {query}")
        q, answer = self.trace[self.pos]
        if q != query:
            raise _ProtocolError(f"entry {self.pos}: expected query {query}, found {q}")
        self.pos += 1
        return answer


def _walk(o: Oracle, c: Certificate, ask: _Trace) -> tuple[Result, str]:
    """Expected outcome and exit phase, driven by the recorded answers."""
    if ask(X):
        f = X
    else:
        f = X * o.nu(X) - 1
        if not ask(f):
            return NotMaximal(InverseFails(X)), "member"
        if f.is_constant():
            if ask(ONE):
                return NotMaximal(OneIsMember()), "member"
            return NotMaximal(MultipleNotMember(-ONE, -ONE)), "member"
    if c.f != f:
        raise _ProtocolError(f"recorded f = {c.f} but the queries establish f = {f}")
    q = smallest_prime_not_dividing(f.lc)
    if c.q != q:
        raise _ProtocolError(f"recorded q = {c.q}, expected {q}")
    if ask(Poly.constant(q)):
        return Prime(q), "q"
    m = q * o.nu(Poly.constant(q)) - 1
    if c.m != m:
        raise _ProtocolError(f"recorded m = {c.m}, expected {m}")
    if not ask(m):
        return NotMaximal(InverseFails(Poly.constant(q))), "m"
    if c.combo_f is None or c.combo_m is None or c.N is None:
        raise _ProtocolError("combination data missing")
    a, b = c.combo_f * f, c.combo_m * m
    if not ask(a):
        return NotMaximal(MultipleNotMember(c.combo_f, f)), "combination"
    if not ask(b):
        return NotMaximal(MultipleNotMember(c.combo_m, m)), "combination"
    if not ask(a + b):
        return NotMaximal(SumNotMember(a, b)), "combination"
    if c.unit not in (1, -1) or c.factors is None:
        raise _ProtocolError("factorization data missing")
    items = ([-1] if c.unit == -1 else []) + list(c.factors)
    product = c.N
    while True:
        if not items:
            return NotMaximal(OneIsMember()), "factor"
        a0, items = items[0], items[1:]
        rest = 1
        for x in items:
            rest *= x
        if ask(Poly.constant(a0)):
            break
        v = o.nu(Poly.constant(a0))
        u = a0 * v - 1
        if not ask(u):
            return NotMaximal(InverseFails(Poly.constant(a0))), "factor"
        s = v * product
        if not ask(s):
            return NotMaximal(MultipleNotMember(v, Poly.constant(product))), "factor"
        t = -rest * u
        if not ask(t):
            return NotMaximal(MultipleNotMember(Poly.constant(-rest), u)), "factor"
        if not ask(s + t):
            return NotMaximal(SumNotMember(s, t)), "factor"
        product = rest
    if a0 == -1:
        if ask(ONE):
            return NotMaximal(OneIsMember()), "factor"
        return NotMaximal(MultipleNotMember(-ONE, -ONE)), "factor"
    return Prime(a0), "factor"


def _y_matrix(c: Certificate) -> PolyMatrix:
    n = c.n
    Y = Poly.gen("Y")
    entries = []
    for i, row in enumerate(c.rows):
        if len(row.a) != n:
            raise ValueError(f"row {i} has {len(row.a)} entries, expected {n}")
        entries.append(
            tuple((c.d**row.k) * Y * (1 if i == j else 0) - row.a[j] for j in range(n))
        )
    return PolyMatrix(tuple(entries))


def verify_certificate(o: Oracle, c: Certificate) -> VerifyReport:
    report = VerifyReport()

    def check(name: str, fn):
        try:
            ok, detail = fn()
        except Exception as e:  # malformed data must surface as a failed check
            ok, detail = False, f"{type(e).__name__}: {e}"
        report.checks.append((name, bool(ok), detail))

    # protocol walk first: it determines which phases must be present
    state: dict = {}

    def protocol():
        ask = _Trace(c.lemma_trace)
        try:
            result, phase = _walk(o, c, ask)
        except _ProtocolError as e:
            state["phase"] = None
            return False, str(e)
        state["expected"], state["phase"] = result, phase
        if ask.pos != len(c.lemma_trace):
            return False, f"{len(c.lemma_trace) - ask.pos} unexpected trailing trace entries"
        return True, f"{len(c.lemma_trace)} queries in protocol order; exit at phase {phase}"

    def replay():
        for i, (query, answer) in enumerate(c.lemma_trace):
            if o.membership(query) != answer:
                return False, f"entry {i}: M({query}) is {not answer}, recorded {answer}"
        return True, f"{len(c.lemma_trace)} answers match"

    def structure():
        phase = state.get("phase")
        if phase is None:
            return False, "exit phase unknown"
        required = _PHASE_FIELDS[phase]
        missing = [k for k in required if getattr(c, k) is None]
        extra = [k for k in _DATA_FIELDS if k not in required and getattr(c, k) is not None]
        if missing or extra:
            return False, f"missing {missing}, unexpected {extra}"
        return True, f"fields consistent with phase {phase}"

    check("trace_protocol", protocol)
    check("membership_replay", replay)
    check("structure", structure)
    reached = set(_PHASE_FIELDS[state["phase"]]) if state.get("phase") else set(_DATA_FIELDS)

    def skipped(needed: str):
        return needed not in reached or getattr(c, needed) is None

    def f_check():
        if skipped("f"):
            return True, "skipped: phase not reached"
        f = c.f
        if f.is_constant():
            return False, f"f = {f} is constant"
        if (X, True) not in c.lemma_trace and (f, True) not in c.lemma_trace:
            return False, "no recorded M(f) = tt"
        if c.d != f.lc or c.n != f.degree:
            return False, f"d = {c.d}, n = {c.n} disagree with f = {f}"
        return True, f"f = {f}, d = {c.d}, n = {c.n}"

    def q_check():
        if skipped("q"):
            return True, "skipped: phase not reached"
        if not is_prime(c.q) or c.q < 2:
            return False, f"q = {c.q} is not prime"
        if c.d % c.q == 0:
            return False, f"q = {c.q} divides d = {c.d}"
        return True, f"q = {c.q}"

    def m_check():
        if skipped("m"):
            return True, "skipped: phase not reached"
        nuq = o.nu(Poly.constant(c.q))
        if nuq != c.nuq:
            return False, f"nu({c.q}) = {nuq}, recorded {c.nuq}"
        if c.m != c.q * c.nuq - 1:
            return False, f"m = {c.m} != q*nu(q) - 1"
        return True, f"m = {c.m}"

    def rows_check():
        if skipped("rows"):
            return True, "skipped: phase not reached"
        if len(c.rows) != c.n:
            return False, f"{len(c.rows)} rows, expected {c.n}"
        for i, row in enumerate(c.rows):
            if row.k < 0 or len(row.a) != c.n:
                return False, f"row {i} malformed"
            lhs = (c.d**row.k) * c.nuq.shift(i) + row.h * c.f
            if lhs != Poly(tuple(row.a)):
                return False, f"row {i}: d^k nu(q) x^i + h f = {lhs} != {Poly(tuple(row.a))}"
        return True, f"{c.n} pseudo-division rows hold"

    def adj_check():
        if skipped("detY"):
            return True, "skipped: phase not reached"
        A = _y_matrix(c)
        n = c.n
        if len(c.adjRow0) != n:
            return False, f"adjRow0 has {len(c.adjRow0)} entries"
        for k in range(n):
            s = Poly((), "Y")
            for j in range(n):
                s = s + c.adjRow0[j] * A[j, k]
            want = c.detY if k == 0 else Poly((), "Y")
            if s != want:
                return False, f"column {k}: sum adj[j] A[j][k] = {s}, expected {want}"
        return True, "adjugate row 0 identity holds"

    def det_check():
        if skipped("detY"):
            return True, "skipped: phase not reached"
        if c.K != sum(r.k for r in c.rows):
            return False, f"K = {c.K} != sum of k_i"
        if len(c.b) != c.n:
            return False, f"{len(c.b)} b coefficients, expected {c.n}"
        expect = Poly(tuple(c.b) + (c.d**c.K,), "Y")
        if expect != c.detY:
            return False, f"detY = {c.detY}, expected {expect}"
        return True, "detY = d^K Y^n + sum b_j Y^j"

    def g_check():
        if skipped("gpolys"):
            return True, "skipped: phase not reached"
        if len(c.gpolys) != c.n:
            return False, f"{len(c.gpolys)} g polynomials, expected {c.n}"
        for i, g in enumerate(c.gpolys, 1):
            if (c.m + 1) ** i != 1 + c.m * g:
                return False, f"(m+1)^{i} != 1 + m g_{i}"
        return True, f"g_1..g_{c.n} verified"

    def n_check():
        if skipped("N"):
            return True, "skipped: phase not reached"
        n = c.n
        total = c.d**c.K
        for j in range(n):
            total += c.b[j] * c.q ** (n - j)
        if total != c.N:
            return False, f"N = {c.N}, expected {total}"
        if c.N == 0:
            return False, "N = 0"
        return True, f"N = {c.N}"

    def combo_check():
        if skipped("combo_f"):
            return True, "skipped: phase not reached"
        rhs = c.combo_f * c.f + c.combo_m * c.m
        if rhs != Poly.constant(c.N):
            return False, f"combo_f f + combo_m m = {rhs} != {c.N}"
        # recompute the combination from the recorded pieces
        n = c.n
        nuq = c.nuq
        cf = Poly()
        for j in range(n):
            cf = cf - (c.q**n) * c.adjRow0[j](nuq) * c.rows[j].h
        cm = -(c.d**c.K) * c.gpolys[n - 1]
        for j in range(1, n):
            cm = cm - c.b[j] * c.q ** (n - j) * c.gpolys[j - 1]
        if cf != c.combo_f or cm != c.combo_m:
            return False, "combination coefficients do not match rows, adjugate and g_i"
        return True, "N = combo_f f + combo_m m"

    def factor_check():
        if skipped("factors"):
            return True, "skipped: phase not reached"
        if c.unit not in (1, -1):
            return False, f"unit = {c.unit}"
        prod = c.unit
        for p in c.factors:
            if p < 2 or not is_prime(p):
                return False, f"factor {p} is not prime"
            prod *= p
        if list(c.factors) != sorted(c.factors):
            return False, "factors not ascending"
        if prod != c.N:
            return False, f"unit * prod(factors) = {prod} != N = {c.N}"
        return True, f"N = {c.unit} * {c.factors}"

    def outcome_check():
        if c.outcome is None:
            return False, "no outcome"
        expected = state.get("expected")
        if expected is None:
            return False, "trace does not determine an outcome"
        if c.outcome != expected:
            return False, f"recorded {c.outcome.describe()}, trace yields {expected.describe()}"
        if isinstance(c.outcome, Prime):
            p = c.outcome.p
            if not is_prime(p):
                return False, f"{p} is not prime"
            if (Poly.constant(p), True) not in c.lemma_trace:
                return False, f"no recorded M({p}) = tt"
            if state["phase"] == "factor" and p not in c.factors:
                return False, f"{p} not among the factors of N"
            return True, c.outcome.describe()
        if not validate_evidence(o, c.outcome.evidence):
            return False, f"evidence {c.outcome.describe()} does not validate"
        return True, c.outcome.describe()

    check("f_member", f_check)
    check("q_choice", q_check)
    check("m_definition", m_check)
    check("pseudo_division_rows", rows_check)
    check("adjugate_identity", adj_check)
    check("determinant_form", det_check)
    check("geometric_expansions", g_check)
    check("combination_integer", n_check)
    check("linear_combination", combo_check)
    check("factorization", factor_check)
    check("outcome_consistency", outcome_check)
    return report


# ----------------------------------------------------------------------
# JSON form


class CertificateFormatError(ValueError):
    def __init__(self, message: str, location: str):
        super().__init__(f"{location}: {message}")
        self.location = location


def _evidence_to_json(e: Evidence) -> dict:
    out: dict = {"case": e.case}
    if isinstance(e, SumNotMember):
        out.update(a=format_poly(e.a), b=format_poly(e.b))
    elif isinstance(e, MultipleNotMember):
        out.update({"lambda": format_poly(e.lam), "a": format_poly(e.a)})
    elif isinstance(e, InverseFails):
        out["a"] = format_poly(e.a)
    return out


def result_to_json(r: Result) -> dict:
    if isinstance(r, Prime):
        return {"result": "prime", "p": r.p}
    return {"result": "not_maximal", **_evidence_to_json(r.evidence)}


def certificate_to_dict(c: Certificate) -> dict:
    P = format_poly
    opt = lambda v, fn: None if v is None else fn(v)  # noqa: E731
    return {
        "f": opt(c.f, P),
        "d": c.d,
        "n": c.n,
        "q": c.q,
        "nuq": opt(c.nuq, P),
        "m": opt(c.m, P),
        "rows": opt(c.rows, lambda rs: [{"k": r.k, "h": P(r.h), "a": list(r.a)} for r in rs]),
        "detY": opt(c.detY, P),
        "adjRow0": opt(c.adjRow0, lambda xs: [P(x) for x in xs]),
        "K": c.K,
        "b": opt(c.b, list),
        "N": c.N,
        "combo_f": opt(c.combo_f, P),
        "combo_m": opt(c.combo_m, P),
        "gpolys": opt(c.gpolys, lambda xs: [P(x) for x in xs]),
        "unit": c.unit,
        "factors": opt(c.factors, list),
        "lemma_trace": [{"query": P(q), "answer": a} for q, a in c.lemma_trace],
        "outcome": opt(c.outcome, result_to_json),
    }


def serialize_certificate(c: Certificate) -> str:
    with unbounded_int_digits():
        return json.dumps(certificate_to_dict(c), indent=1)


class _Reader:
    def __init__(self, doc: dict):
        self.doc = doc

    def fail(self, msg, loc):
        raise CertificateFormatError(msg, loc)

    def get(self, key):
        if key not in self.doc:
            self.fail("missing field", key)
        return self.doc[key]

    def int_(self, v, loc, optional=True):
        if v is None and optional:
            return None
        if not isinstance(v, int) or isinstance(v, bool):
            self.fail(f"expected integer, got {v!r}", loc)
        return v

    def poly(self, v, loc, var="x", optional=True):
        if v is None and optional:
            return None
        if not isinstance(v, str):
            self.fail(f"expected polynomial string, got {v!r}", loc)
        try:
            return parse_poly(v, var)
        except PolyParseError as e:
            self.fail(str(e), loc)

    def list_(self, v, loc):
        if v is None:
            return None
        if not isinstance(v, list):
            self.fail("expected list", loc)
        return v


def _evidence_from_json(r: _Reader, d: dict, loc: str) -> Evidence:
    case = d.get("case")
    if case == 1:
        return ZeroNotMember()
    if case == 2:
        return SumNotMember(r.poly(d.get("a"), f"{loc}.a", optional=False), r.poly(d.get("b"), f"{loc}.b", optional=False))
    if case == 3:
        return MultipleNotMember(
            r.poly(d.get("lambda"), f"{loc}.lambda", optional=False), r.poly(d.get("a"), f"{loc}.a", optional=False)
        )
    if case == 4:
        return OneIsMember()
    if case == 5:
        return InverseFails(r.poly(d.get("a"), f"{loc}.a", optional=False))
    r.fail(f"unknown evidence case {case!r}", f"{loc}.case")


def result_from_json(r: _Reader, d, loc="outcome") -> Result | None:
    if d is None:
        return None
    if not isinstance(d, dict):
        r.fail("expected object", loc)
    kind = d.get("result")
    if kind == "prime":
        return Prime(r.int_(d.get("p"), f"{loc}.p", optional=False))
    if kind == "not_maximal":
        return NotMaximal(_evidence_from_json(r, d, loc))
    r.fail(f"unknown result {kind!r}", f"{loc}.result")


def certificate_from_dict(doc) -> Certificate:
    if not isinstance(doc, dict):
        raise CertificateFormatError("expected a JSON object", "$")
    r = _Reader(doc)
    c = Certificate()
    c.f = r.poly(r.get("f"), "f")
    for key in ("d", "n", "q", "K", "N", "unit"):
        setattr(c, key, r.int_(r.get(key), key))
    c.nuq = r.poly(r.get("nuq"), "nuq")
    c.m = r.poly(r.get("m"), "m")
    rows = r.list_(r.get("rows"), "rows")
    if rows is not None:
        c.rows = []
        for i, row in enumerate(rows):
            loc = f"rows[{i}]"
            if not isinstance(row, dict):
                r.fail("expected object", loc)
            a = r.list_(row.get("a"), f"{loc}.a") or []
            c.rows.append(
                Row(
                    r.int_(row.get("k"), f"{loc}.k", optional=False),
                    r.poly(row.get("h"), f"{loc}.h", optional=False),
                    tuple(r.int_(x, f"{loc}.a[{j}]", optional=False) for j, x in enumerate(a)),
                )
            )
    c.detY = r.poly(r.get("detY"), "detY", var="Y")
    adj = r.list_(r.get("adjRow0"), "adjRow0")
    if adj is not None:
        c.adjRow0 = [r.poly(x, f"adjRow0[{j}]", var="Y", optional=False) for j, x in enumerate(adj)]
    for key in ("b", "factors"):
        xs = r.list_(r.get(key), key)
        if xs is not None:
            setattr(c, key, [r.int_(x, f"{key}[{j}]", optional=False) for j, x in enumerate(xs)])
    c.combo_f = r.poly(r.get("combo_f"), "combo_f")
    c.combo_m = r.poly(r.get("combo_m"), "combo_m")
    gs = r.list_(r.get("gpolys"), "gpolys")
    if gs is not None:
        c.gpolys = [r.poly(x, f"gpolys[{j}]", optional=False) for j, x in enumerate(gs)]
    trace = r.list_(r.get("lemma_trace"), "lemma_trace")
    if trace is None:
        r.fail("expected list", "lemma_trace")
    for i, entry in enumerate(trace):
        loc = f"lemma_trace[{i}]"
        if not isinstance(entry, dict) or not isinstance(entry.get("answer"), bool):
            r.fail("expected {query, answer}", loc)
        c.lemma_trace.append((r.poly(entry.get("query"), f"{loc}.query", optional=False), entry["answer"]))
    c.outcome = result_from_json(r, r.get("outcome"))
    return c


def deserialize_certificate(text: str) -> Certificate:
    if not text.strip():
        raise CertificateFormatError("empty certificate", "line 1 column 1")
    with unbounded_int_digits():
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise CertificateFormatError(e.msg, f"line {e.lineno} column {e.colno}") from None
        return certificate_from_dict(doc)


CERTIFICATE_FIELDS = tuple(f.name for f in fields(Certificate))
