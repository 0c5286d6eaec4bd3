import random

import pytest

from primewitness.algebra.poly import Poly
from primewitness.engine import maxzx
from primewitness.evidence import (
    Certificate,
    CertificateFormatError,
    InverseFails,
    MultipleNotMember,
    NotMaximal,
    OneIsMember,
    Prime,
    SumNotMember,
    ZeroNotMember,
    deserialize_certificate,
    serialize_certificate,
    validate_evidence,
    verify_certificate,
)
from primewitness.oracle import Oracle
from primewitness.parser import parse_poly as P

from randgen import random_oracle
from tamper import mutate


def test_validate_examples(pg3, const_false):
    assert validate_evidence(const_false, InverseFails(P("x")))
    assert not validate_evidence(pg3, OneIsMember())
    everything = Oracle(lambda f: True, lambda f: Poly())
    assert not validate_evidence(everything, ZeroNotMember())
    assert validate_evidence(const_false, ZeroNotMember())


def test_validate_cases_2_and_3():
    o = Oracle(lambda f: f in {P("x"), P("1-x")}, lambda f: Poly())
    assert validate_evidence(o, SumNotMember(P("x"), P("1-x")))
    assert validate_evidence(o, SumNotMember(P("x"), P("x")))  # 2x is not a member
    assert not validate_evidence(o, SumNotMember(P("x"), P("2")))
    assert validate_evidence(o, MultipleNotMember(P("2"), P("x")))
    assert not validate_evidence(o, MultipleNotMember(P("1"), P("x")))
    assert not validate_evidence(o, InverseFails(P("x")))


def test_verify_x_mod1019(pg1019):
    out = maxzx(pg1019)
    report = verify_certificate(pg1019.fresh(), out.certificate)
    assert report.overall, report.format()
    assert out.certificate.outcome == Prime(1019)
    assert len(report.checks) == 14


def test_tampered_b0_rejected(pg1019):
    c = maxzx(pg1019).certificate
    c.b = [-c.b[0]]
    report = verify_certificate(pg1019.fresh(), c)
    assert not report.overall
    assert {"combination_integer", "determinant_form"} & set(report.failed())


def test_evidence_certificate_skips_later_phases(const_false):
    out = maxzx(const_false)
    report = verify_certificate(const_false.fresh(), out.certificate)
    assert report.overall
    details = dict((n, d) for n, _, d in report.checks)
    assert details["membership_replay"].endswith("match")
    assert details["rows" if "rows" in details else "pseudo_division_rows"].startswith("skipped")


def test_verify_against_other_oracle(pg3, pg1019):
    c = maxzx(pg1019).certificate
    report = verify_certificate(pg3, c)
    assert "membership_replay" in report.failed()


def test_malformed_certificate_does_not_raise(pg1019):
    c = maxzx(pg1019).certificate
    c.rows = [None]
    report = verify_certificate(pg1019.fresh(), c)
    assert not report.overall and "pseudo_division_rows" in report.failed()
    report = verify_certificate(pg1019.fresh(), Certificate())
    assert not report.overall


def test_round_trip_reference_certificates(pg3, pg1019, const_false):
    for o in (pg3, pg1019, const_false):
        c = maxzx(o).certificate
        assert deserialize_certificate(serialize_certificate(c)) == c


def test_round_trip_big_numbers():
    c = Certificate(N=-(10**99) - 7, factors=[2**89 - 1], unit=-1, lemma_trace=[(P("x"), True)])
    c.outcome = Prime(2**89 - 1)
    text = serialize_certificate(c)
    assert str(10**99 + 7) in text
    assert deserialize_certificate(text) == c


def test_round_trip_all_evidence_kinds():
    for ev in (
        ZeroNotMember(),
        SumNotMember(P("x"), P("2")),
        MultipleNotMember(P("-1"), P("-1")),
        OneIsMember(),
        InverseFails(P("x^2")),
    ):
        c = Certificate(outcome=NotMaximal(ev))
        assert deserialize_certificate(serialize_certificate(c)).outcome == NotMaximal(ev)


@pytest.mark.parametrize(
    "text, where",
    [
        ("", "line 1"),
        ("{", "line 1"),
        ("[]", "$"),
        ('{"f": 3}', "f"),
    ],
)
def test_deserialize_errors(text, where):
    with pytest.raises(CertificateFormatError) as e:
        deserialize_certificate(text)
    assert e.value.location.startswith(where)


def test_deserialize_error_locations(pg1019):
    text = serialize_certificate(maxzx(pg1019).certificate)
    bad = text.replace('"x"', '"x+"', 1)
    with pytest.raises(CertificateFormatError) as e:
        deserialize_certificate(bad)
    assert e.value.location == "f"
    with pytest.raises(CertificateFormatError) as e:
        deserialize_certificate(text.replace('"k": 0', '"k": "zero"'))
    assert e.value.location == "rows[0].k"


def test_soundness_and_certificates_random():
    rng = random.Random(31)
    for _ in range(300):
        o = random_oracle(rng)
        out = maxzx(o)
        assert verify_certificate(o.fresh(), out.certificate).overall
        assert deserialize_certificate(serialize_certificate(out.certificate)) == out.certificate


def test_tamper_sample():
    rng = random.Random(32)
    certs = []
    while len(certs) < 40:
        o = random_oracle(rng)
        certs.append((o, maxzx(o).certificate))
    for _ in range(200):
        o, c = rng.choice(certs)
        field, bad = mutate(rng, c)
        assert not verify_certificate(o.fresh(), bad).overall, field
