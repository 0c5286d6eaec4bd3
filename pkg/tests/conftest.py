import random

import pytest

from primewitness.oracle import build_oracle
from primewitness.parser import parse_oracle_spec


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture
def pg3():
    return build_oracle(parse_oracle_spec("kind=pg_ideal\np=3\ng=x^2+1"))


@pytest.fixture
def pg1019():
    return build_oracle(parse_oracle_spec("kind=pg_ideal\np=1019\ng=x"))


@pytest.fixture
def const_false():
    return build_oracle(parse_oracle_spec("kind=constant\nvalue=ff\nnu=1"))


_ACCEPTANCE: list[tuple[str, bool, str]] = []


class _Criterion:
    def __init__(self, label):
        self.label = label
        self.detail = ""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        ok = exc_type is None
        detail = self.detail if ok else f"{exc_type.__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        _ACCEPTANCE.append((self.label, ok, detail))
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
