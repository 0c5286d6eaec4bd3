"""Text forms: polynomial expressions and oracle specification files.

Polynomial grammar (whitespace is ignored)::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor (['*'] factor)*        # '*' optional before x or '('
    factor  := atom ['^' digits]
    atom    := digits | x | '(' expr ')'

``X`` is accepted as an alias for ``x`` on input; output always uses ``x``.
"""
from __future__ import annotations

import contextlib
import sys
from dataclasses import dataclass, field

from .algebra.integers import is_prime
from .algebra.modpoly import ModPoly
from .algebra.poly import Poly

_ALIASES = {"x": ("x", "X"), "Y": ("y", "Y")}
_DISPLAY = {"x": "x", "Y": "Y"}


class PolyParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class SpecError(ValueError):
    """Invalid oracle specification."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@contextlib.contextmanager
def unbounded_int_digits():
    """Lift the interpreter's int<->str digit limit for huge coefficients."""
    get = getattr(sys, "get_int_max_str_digits", None)
    if get is None:
        yield
        return
    old = get()
    sys.set_int_max_str_digits(0)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(old)


class _Parser:
    def __init__(self, text: str, var: str):
        self.text = text
        self.var = var
        self.names = _ALIASES[var]
        self.pos = 0

    def error(self, msg: str, pos: int | None = None):
        pos = self.pos if pos is None else pos
        raise PolyParseError(msg, len(self.text[:pos].encode("utf-8")))

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r\n":
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def digits(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start : self.pos])

    def parse(self) -> Poly:
        if not self.text.strip():
            self.error("empty expression")
        result = self.expr()
        if self.peek():
            self.unexpected()
        return result

    def unexpected(self):
        ch = self.text[self.pos]
        if ch not in "0123456789+-*^()" and ch not in self.names:
            self.error(f"unknown symbol {ch!r}")
        self.error(f"unexpected {ch!r}")

    def expr(self) -> Poly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        acc = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                acc = acc * self.factor()
            elif ch in self.names or ch == "(":
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Poly:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            if self.peek() == "-":
                self.error("negative exponent")
            base = base ** self.digits()
        return base

    def atom(self) -> Poly:
        ch = self.peek()
        if not ch:
            self.error("unexpected end of input")
        if ch.isdigit():
            return Poly.constant(self.digits(), self.var)
        if ch in self.names:
            self.pos += 1
            return Poly.gen(self.var)
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return inner
        self.unexpected()


def parse_poly(text: str, var: str = "x") -> Poly:
    with unbounded_int_digits():
        return _Parser(text, var).parse()


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    name = _DISPLAY[p.var]
    parts = []
    with unbounded_int_digits():
        for i in range(len(p.coeffs) - 1, -1, -1):
            c = p.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = name if i == 1 else f"{name}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


# ----------------------------------------------------------------------
# oracle specification files

KINDS = ("pg_ideal", "principal", "constant", "table")
_KEYS = ("kind", "p", "g", "value", "nu", "members", "default")


@dataclass(frozen=True)
class Override:
    target: str  # "M" or "nu"
    key: Poly
    value: bool | Poly


@dataclass(frozen=True)
class OracleSpec:
    kind: str
    p: int | None = None
    g: Poly | None = None
    value: bool | None = None
    default_nu: Poly | None = None
    members: tuple[Poly, ...] = ()
    default: bool = False
    overrides: tuple[Override, ...] = field(default=())


def parse_bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("tt", "true"):
        return True
    if t in ("ff", "false"):
        return False
    raise ValueError(f"expected tt or ff, got {text.strip()!r}")


def _poly_field(text: str, lineno: int, key: str) -> Poly:
    try:
        return parse_poly(text)
    except PolyParseError as e:
        raise SpecError(f"malformed polynomial for {key}: {e}", lineno) from None


def parse_override(line: str, lineno: int | None = None) -> Override:
    """Parse ``override M: <poly> = tt|ff`` or ``override nu: <poly> = <poly>``.

    The leading ``override`` keyword is optional.
    """
    body = line.strip()
    if body.startswith("override"):
        body = body[len("override") :].strip()
    target, sep, rest = body.partition(":")
    target = target.strip()
    if not sep or target not in ("M", "nu"):
        raise SpecError("override target must be 'M' or 'nu'", lineno)
    lhs, sep, rhs = rest.rpartition("=")
    if not sep:
        raise SpecError("override needs '<poly> = <value>'", lineno)
    key = _poly_field(lhs, lineno, "override key")
    if target == "M":
        try:
            value: bool | Poly = parse_bool(rhs)
        except ValueError as e:
            raise SpecError(str(e), lineno) from None
    else:
        value = _poly_field(rhs, lineno, "override value")
    return Override(target, key, value)


def parse_oracle_spec(text: str) -> OracleSpec:
    raw: dict[str, tuple[str, int]] = {}
    overrides: list[Override] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("override"):
            overrides.append(parse_override(line, lineno))
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise SpecError(f"expected key=value, got {line!r}", lineno)
        if key not in _KEYS:
            raise SpecError(f"unknown key {key!r}", lineno)
        if key in raw:
            raise SpecError(f"duplicate key {key!r}", lineno)
        raw[key] = (value.strip(), lineno)

    def need(key: str) -> tuple[str, int]:
        if key not in raw:
            raise SpecError(f"missing required key {key!r}")
        return raw[key]

    kind, kind_line = need("kind")
    if kind not in KINDS:
        raise SpecError(f"unknown kind {kind!r}", kind_line)

    def poly(key: str) -> Poly:
        text, lineno = need(key)
        return _poly_field(text, lineno, key)

    def boolean(key: str) -> bool:
        text, lineno = need(key)
        try:
            return parse_bool(text)
        except ValueError as e:
            raise SpecError(str(e), lineno) from None

    nu = poly("nu") if "nu" in raw else Poly.constant(0)
    ovr = tuple(overrides)
    if kind == "pg_ideal":
        ptext, pline = need("p")
        try:
            p = int(ptext)
        except ValueError:
            raise SpecError(f"p must be an integer, got {ptext!r}", pline) from None
        if not is_prime(p) or p < 2:
            raise SpecError(f"p-composite: {p} is not a prime", pline)
        g = poly("g")
        if ModPoly(p, g.coeffs).is_zero():
            raise SpecError(f"g is zero modulo {p}", raw["g"][1])
        return OracleSpec(kind, p=p, g=g, overrides=ovr)
    if kind == "principal":
        return OracleSpec(kind, g=poly("g"), default_nu=nu, overrides=ovr)
    if kind == "constant":
        return OracleSpec(kind, value=boolean("value"), default_nu=nu, overrides=ovr)
    members: list[Poly] = []
    if "members" in raw:
        text, lineno = raw["members"]
        for chunk in text.split(";"):
            if chunk.strip():
                m = _poly_field(chunk, lineno, "members")
                if m in members:
                    raise SpecError(f"duplicate member {format_poly(m)}", lineno)
                members.append(m)
    default = boolean("default") if "default" in raw else False
    return OracleSpec(kind, members=tuple(members), default=default, default_nu=nu, overrides=ovr)


def format_oracle_spec(spec: OracleSpec) -> str:
    lines = [f"kind={spec.kind}"]
    if spec.kind == "pg_ideal":
        lines += [f"p={spec.p}", f"g={format_poly(spec.g)}"]
    elif spec.kind == "principal":
        lines.append(f"g={format_poly(spec.g)}")
    elif spec.kind == "constant":
        lines.append(f"value={'tt' if spec.value else 'ff'}")
    else:
        lines.append("members=" + "; ".join(format_poly(m) for m in spec.members))
        lines.append(f"default={'tt' if spec.default else 'ff'}")
    if spec.kind != "pg_ideal":
        lines.append(f"nu={format_poly(spec.default_nu)}")
    for o in spec.overrides:
        if o.target == "M":
            lines.append(f"override M: {format_poly(o.key)} = {'tt' if o.value else 'ff'}")
        else:
            lines.append(f"override nu: {format_poly(o.key)} = {format_poly(o.value)}")
    return "\n".join(lines) + "\n"
