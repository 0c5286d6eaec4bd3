import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from primewitness.algebra.poly import Poly
from primewitness.parser import (
    PolyParseError,
    SpecError,
    format_oracle_spec,
    format_poly,
    parse_oracle_spec,
    parse_poly,
)


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("x^2+1", (1, 0, 1)),
        ("0", ()),
        ("2*x^2 - 1", (-1, 0, 2)),
        ("2x", (0, 2)),
        ("X^3", (0, 0, 0, 1)),
        ("-x", (0, -1)),
        (" 3 x ^ 2 - x + - ", None),
        ("(x+1)^2", (1, 2, 1)),
        ("x*x*x - x^3", ()),
        ("-12345678901234567890123456789*x", (0, -12345678901234567890123456789)),
        ("x^0", (1,)),
    ],
)
def test_parse(text, coeffs):
    if coeffs is None:
        with pytest.raises(PolyParseError):
            parse_poly(text)
    else:
        assert parse_poly(text) == Poly(coeffs)


def test_format_examples():
    assert format_poly(Poly((1, 0, 1))) == "x^2 + 1"
    assert format_poly(Poly()) == "0"
    assert format_poly(Poly((0, -1))) == "-x"
    assert format_poly(Poly((-1, 0, 2))) == "2*x^2 - 1"
    assert format_poly(Poly((3, -1), "Y")) == "-Y + 3"


def test_errors_carry_offsets():
    with pytest.raises(PolyParseError) as e:
        parse_poly("x + q")
    assert e.value.offset == 4 and "unknown symbol" in str(e.value)
    with pytest.raises(PolyParseError, match="negative exponent"):
        parse_poly("x^-1")
    with pytest.raises(PolyParseError):
        parse_poly("")
    with pytest.raises(PolyParseError):
        parse_poly("x^")
    with pytest.raises(PolyParseError):
        parse_poly("(x+1")
    with pytest.raises(PolyParseError) as e:
        parse_poly("é+x")
    assert e.value.offset == 0
    with pytest.raises(PolyParseError) as e:
        parse_poly("xé")
    assert e.value.offset == 1


def test_y_variable():
    assert parse_poly("Y^2 - 2", "Y") == Poly((-2, 0, 1), "Y")
    with pytest.raises(PolyParseError):
        parse_poly("x", "Y")


def test_round_trip_random():
    rng = random.Random(99)
    for _ in range(10000):
        deg = rng.randint(-1, 8)
        p = Poly(tuple(rng.randint(-(10**6), 10**6) for _ in range(deg + 1)))
        assert parse_poly(format_poly(p)) == p


def test_huge_coefficient_round_trip():
    p = Poly((10**5000 + 7, -(3**9000)))
    assert parse_poly(format_poly(p)) == p


ALPHABET = set("0123456789+-*^() \t\r\nxX")


@given(st.text(min_size=1, max_size=12))
def test_rejects_foreign_characters(text):
    if set(text) <= ALPHABET:
        return
    with pytest.raises(PolyParseError):
        parse_poly(text)


@given(st.text(alphabet="0123456789+-*^()xX ", max_size=14))
def test_total_on_alphabet(text):
    # either a polynomial or a PolyParseError, never anything else
    try:
        p = parse_poly(text)
    except PolyParseError:
        return
    assert isinstance(p, Poly)


def test_oracle_spec_examples():
    s = parse_oracle_spec("kind=pg_ideal\np=3\ng=x^2+1")
    assert (s.kind, s.p, s.g) == ("pg_ideal", 3, Poly((1, 0, 1)))
    s = parse_oracle_spec("kind=constant\nvalue=ff\nnu=1")
    assert (s.kind, s.value, s.default_nu) == ("constant", False, Poly((1,)))
    with pytest.raises(SpecError, match="p-composite"):
        parse_oracle_spec("kind=pg_ideal\np=4\ng=x")


def test_oracle_spec_full_format():
    text = """
    # a small table oracle
    kind=table
    members= x ; 2x-1; 3
    default=ff
    nu=x+1
    override M: 2x - 1 = ff
    override nu: x = 2
    """
    s = parse_oracle_spec(text)
    assert s.members == (Poly((0, 1)), Poly((-1, 2)), Poly((3,)))
    assert s.default is False and s.default_nu == Poly((1, 1))
    assert [(o.target, o.value) for o in s.overrides] == [("M", False), ("nu", Poly((2,)))]
    assert parse_oracle_spec(format_oracle_spec(s)) == s


@pytest.mark.parametrize(
    "text, msg",
    [
        ("kind=weird", "unknown kind"),
        ("p=3", "missing required key 'kind'"),
        ("kind=pg_ideal\np=3", "missing required key 'g'"),
        ("kind=pg_ideal\np=3\ng=3x+6", "zero modulo"),
        ("kind=pg_ideal\np=three\ng=x", "integer"),
        ("kind=principal\ng=x^", "malformed polynomial"),
        ("kind=table\nmembers=x;x", "duplicate member"),
        ("kind=table\nmembers=x;1*x", "duplicate member"),
        ("kind=constant\nvalue=maybe", "tt or ff"),
        ("kind=constant\nvalue=tt\ncolour=red", "unknown key"),
        ("kind=constant\nvalue=tt\noverride Q: x = tt", "override target"),
        ("kind=constant\nvalue=tt\noverride M: x = 3", "tt or ff"),
        ("kind=constant\nkind=constant", "duplicate key"),
    ],
)
def test_oracle_spec_errors(text, msg):
    with pytest.raises(SpecError, match=msg):
        parse_oracle_spec(text)


def test_spec_error_line_numbers():
    with pytest.raises(SpecError) as e:
        parse_oracle_spec("kind=pg_ideal\n# comment\np=9\ng=x")
    assert e.value.line == 3
