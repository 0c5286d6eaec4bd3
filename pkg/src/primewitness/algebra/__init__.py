from .integers import factor_integer, int_is_prime, is_prime, primes, smallest_prime_not_dividing
from .matrix import PolyMatrix, det_adjugate
from .modpoly import InvalidModulus, ModPoly, mod_reduce, modpoly_divrem, modpoly_ext_gcd
from .poly import (
    ZERO_DEGREE,
    Poly,
    VariableMismatch,
    poly_add,
    poly_degree_lc,
    poly_mul,
    poly_substitute,
)

__all__ = [
    "InvalidModulus",
    "ModPoly",
    "Poly",
    "PolyMatrix",
    "VariableMismatch",
    "ZERO_DEGREE",
    "det_adjugate",
    "factor_integer",
    "int_is_prime",
    "is_prime",
    "mod_reduce",
    "modpoly_divrem",
    "modpoly_ext_gcd",
    "poly_add",
    "poly_degree_lc",
    "poly_mul",
    "poly_substitute",
    "primes",
    "smallest_prime_not_dividing",
]
