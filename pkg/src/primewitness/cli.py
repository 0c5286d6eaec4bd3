"""Command-line front end: run, search, verify, bench and repl."""
from __future__ import annotations

import argparse
import cmd
import json
import sys
from pathlib import Path

from .engine import EngineInvariantError, ResourceLimitError, maxzx, run_bench, unbounded_search
from .evidence import (
    CertificateFormatError,
    certificate_to_dict,
    deserialize_certificate,
    result_to_json,
    serialize_certificate,
    verify_certificate,
)
from .oracle import build_oracle
from .parser import (
    OracleSpec,
    PolyParseError,
    SpecError,
    format_oracle_spec,
    format_poly,
    parse_oracle_spec,
    parse_override,
    unbounded_int_digits,
)

EXIT_OK, EXIT_ERROR, EXIT_NEGATIVE = 0, 1, 2

EMPTY_SPEC = "kind=constant\nvalue=ff\nnu=1\n"


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def load_spec(path: str) -> OracleSpec:
    try:
        return parse_oracle_spec(_read(path))
    except (SpecError, PolyParseError) as e:
        raise UsageError(f"{path}: {e}") from None


def _dump(obj) -> str:
    with unbounded_int_digits():
        return json.dumps(obj, indent=1)


def cmd_run(args) -> int:
    o = build_oracle(load_spec(args.oracle))
    out = maxzx(o)
    if args.cert:
        Path(args.cert).write_text(serialize_certificate(out.certificate), encoding="utf-8")
    if args.json:
        print(
            _dump(
                {
                    "outcome": result_to_json(out.result),
                    "m_calls": o.m_calls,
                    "nu_calls": o.nu_calls,
                    "certificate": certificate_to_dict(out.certificate),
                }
            )
        )
    else:
        print(out.describe())
    return EXIT_OK if out.is_prime else EXIT_NEGATIVE


def cmd_search(args) -> int:
    o = build_oracle(load_spec(args.oracle))
    p = unbounded_search(o, args.limit)
    if args.json:
        print(_dump({"prime": p, "limit": args.limit, "m_calls": o.m_calls}))
    elif p is None:
        print(f"none within {args.limit}")
    else:
        print(f"prime: {p} ({o.m_calls} membership calls)")
    return EXIT_OK if p is not None else EXIT_NEGATIVE


def cmd_verify(args) -> int:
    o = build_oracle(load_spec(args.oracle))
    text = _read(args.cert)
    try:
        cert = deserialize_certificate(text)
    except CertificateFormatError as e:
        if args.json:
            print(_dump({"overall": "fail", "checks": [{"name": "format", "status": "fail", "detail": str(e)}]}))
        else:
            print(f"FAIL  format: {e}\noverall: fail")
        return EXIT_NEGATIVE
    report = verify_certificate(o, cert)
    print(_dump(report.to_dict()) if args.json else report.format())
    return EXIT_OK if report.overall else EXIT_NEGATIVE


def read_spec_list(path: str) -> tuple[list[str], list[OracleSpec]]:
    """A list file names one oracle spec file per line, relative to itself."""
    base = Path(path).parent
    names, specs = [], []
    for line in _read(path).splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            names.append(line)
            specs.append(load_spec(str(base / line)))
    return names, specs


def cmd_bench(args) -> int:
    names, specs = read_spec_list(args.list)
    rows = run_bench(specs, repeat=args.repeat, search_limit=args.limit, names=names)
    if args.json:
        print(_dump([r.to_dict() for r in rows]))
        return EXIT_OK
    header = f"{'instance':<24} {'method':<7} {'outcome':<28} {'m_calls':>8} {'nu_calls':>8} {'time_s':>10}"
    print(header)
    for r in rows:
        outcome = r.outcome if r.error is None else f"error: {r.error}"
        print(f"{r.instance:<24} {r.method:<7} {outcome:<28} {r.m_calls:>8} {r.nu_calls:>8} {r.seconds:>10.6f}")
    return EXIT_OK


class Repl(cmd.Cmd):
    intro = "maxzx refinement loop; type help for commands"

    def __init__(self, spec: OracleSpec, stdin=None, stdout=None):
        super().__init__(stdin=stdin, stdout=stdout)
        interactive = (stdin or sys.stdin).isatty()
        self.prompt = "maxzx> " if interactive else ""
        if not interactive:
            self.use_rawinput = False
            self.intro = None
        self.base_text = format_oracle_spec(spec)
        self.base = build_oracle(spec)
        self.oracle = self.base.fresh()
        self.last = None

    def say(self, text: str):
        print(text, file=self.stdout)

    def emptyline(self):
        pass

    def default(self, line):
        self.say(f"unknown command: {line.strip()}")

    def do_run(self, arg):
        """run: execute maxzx on the current oracle"""
        o = self.oracle.fresh()
        try:
            self.last = maxzx(o)
        except (EngineInvariantError, ResourceLimitError) as e:
            self.say(f"error: {e}")
            return
        self.say(self.last.describe())

    def do_set(self, arg):
        """set M <poly> = tt|ff  |  set nu <poly> = <poly>"""
        target, _, rest = arg.strip().partition(" ")
        try:
            ov = parse_override(f"{target}: {rest}")
        except SpecError as e:
            self.say(f"error: {e}")
            return
        self.oracle = self.oracle.with_override(ov.target, ov.key, ov.value)

    def do_show(self, arg):
        """show overrides  |  show cert"""
        what = arg.strip()
        if what == "overrides":
            ovs = self.oracle.overrides()
            if not ovs:
                self.say("(no overrides)")
            for ov in ovs:
                value = ("tt" if ov.value else "ff") if ov.target == "M" else format_poly(ov.value)
                self.say(f"override {ov.target}: {format_poly(ov.key)} = {value}")
        elif what == "cert":
            self.say(serialize_certificate(self.last.certificate) if self.last else "no run yet")
        else:
            self.say("usage: show overrides | show cert")

    def do_save(self, arg):
        """save cert <path>"""
        parts = arg.split(None, 1)
        if len(parts) != 2 or parts[0] != "cert":
            self.say("usage: save cert <path>")
        elif self.last is None:
            self.say("no run yet")
        else:
            try:
                Path(parts[1]).write_text(serialize_certificate(self.last.certificate), encoding="utf-8")
            except OSError as e:
                self.say(f"error: {e}")
                return
            self.say(f"saved {parts[1]}")

    def do_reset(self, arg):
        """reset: drop all overrides"""
        self.oracle = self.base.fresh()
        self.last = None

    def do_quit(self, arg):
        """quit"""
        return True

    do_EOF = do_quit

    def spec_text(self) -> str:
        """The current session as an oracle spec file (base spec plus overrides)."""
        lines = [
            f"override M: {format_poly(k)} = {'tt' if v else 'ff'}" for k, v in self.oracle.m_overrides.items()
        ] + [f"override nu: {format_poly(k)} = {format_poly(v)}" for k, v in self.oracle.nu_overrides.items()]
        return self.base_text + "".join(line + "\n" for line in lines)


def cmd_repl(args, stdin=None, stdout=None) -> int:
    spec = parse_oracle_spec(EMPTY_SPEC) if args.empty else load_spec(args.oracle)
    Repl(spec, stdin=stdin, stdout=stdout).cmdloop()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="primewitness", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run maxzx on an oracle spec")
    p.add_argument("--oracle", required=True)
    p.add_argument("--cert", help="write the certificate here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_run)

    p = sub.add_parser("search", help="test primes 2, 3, 5, ... for membership")
    p.add_argument("--oracle", required=True)
    p.add_argument("--limit", type=int, default=0, help="number of primes to test (0 = unbounded)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("verify", help="check a certificate against an oracle")
    p.add_argument("--oracle", required=True)
    p.add_argument("--cert", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("bench", help="compare maxzx with the unbounded search")
    p.add_argument("list", help="file naming one oracle spec per line")
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--limit", type=int, default=100000, help="prime budget for the search")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("repl", help="interactive oracle refinement")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--oracle")
    g.add_argument("--empty", action="store_true", help="start from M = ff, nu = 1")
    p.set_defaults(fn=cmd_repl)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_OK
    if getattr(args, "limit", 0) < 0:
        print("error: --limit must be nonnegative", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except (EngineInvariantError, ResourceLimitError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
