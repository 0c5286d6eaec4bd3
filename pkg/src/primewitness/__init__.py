"""Find a prime in a maximal ideal of Z[x], or a concrete witness that the
supplied (M, nu) pair is not an explicit maximal ideal."""
from .algebra import Poly, factor_integer, is_prime
from .engine import (
    EngineInvariantError,
    ResourceLimitError,
    find_nonconstant_member,
    geometric_expand,
    max_to_prime,
    maxzx,
    pseudo_division,
    run_bench,
    unbounded_search,
)
from .evidence import (
    Certificate,
    InverseFails,
    MultipleNotMember,
    NotMaximal,
    OneIsMember,
    Outcome,
    Prime,
    SumNotMember,
    ZeroNotMember,
    deserialize_certificate,
    serialize_certificate,
    validate_evidence,
    verify_certificate,
)
from .oracle import Oracle, apply_override, build_oracle, membership, nu_value
from .parser import OracleSpec, format_poly, parse_oracle_spec, parse_poly

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "EngineInvariantError",
    "InverseFails",
    "MultipleNotMember",
    "NotMaximal",
    "OneIsMember",
    "Oracle",
    "OracleSpec",
    "Outcome",
    "Poly",
    "Prime",
    "ResourceLimitError",
    "SumNotMember",
    "ZeroNotMember",
    "apply_override",
    "build_oracle",
    "deserialize_certificate",
    "factor_integer",
    "find_nonconstant_member",
    "format_poly",
    "geometric_expand",
    "is_prime",
    "max_to_prime",
    "maxzx",
    "membership",
    "nu_value",
    "parse_oracle_spec",
    "parse_poly",
    "pseudo_division",
    "run_bench",
    "serialize_certificate",
    "unbounded_search",
    "validate_evidence",
    "verify_certificate",
]
