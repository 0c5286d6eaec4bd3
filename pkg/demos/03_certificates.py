"""
Certificates
============

Every run records its membership queries and all the algebra it used.
The certificate can be written to JSON, read back, and re-checked against
the oracle without trusting the engine.
"""

from primewitness import (
    build_oracle,
    deserialize_certificate,
    maxzx,
    parse_oracle_spec,
    serialize_certificate,
    verify_certificate,
)

spec = parse_oracle_spec("kind=pg_ideal\np=5\ng=x^2+2")
out = maxzx(build_oracle(spec))
text = serialize_certificate(out.certificate)
print(text[:400], "...")
print()

cert = deserialize_certificate(text)
report = verify_certificate(build_oracle(spec), cert)
print(report.format())

# A single changed number is enough to break it.
cert.N += 5
print()
print("after tampering with N:", verify_certificate(build_oracle(spec), cert).failed())
