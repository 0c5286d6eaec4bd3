"""
Two maximal ideals, two methods
===============================

Both <x^2 + 1, 3> and <x, 1019> are maximal ideals of Z[x].  We look for the
prime inside each one twice: once with ``maxzx`` and once by testing the
primes 2, 3, 5, ... in order, counting membership queries each time.
"""

from primewitness import build_oracle, maxzx, parse_oracle_spec, unbounded_search

specs = {
    "<x^2+1, 3>": "kind=pg_ideal\np=3\ng=x^2+1",
    "<x, 1019>": "kind=pg_ideal\np=1019\ng=x",
}

for label, text in specs.items():
    spec = parse_oracle_spec(text)

    o = build_oracle(spec)
    out = maxzx(o)
    print(f"{label:12} maxzx:  {out.describe():14} {o.m_calls:4} membership calls")

    o = build_oracle(spec)
    p = unbounded_search(o)
    print(f"{label:12} search: prime: {p:<7} {o.m_calls:4} membership calls")

# The search wins when the prime is tiny and loses badly once it is not:
# it has to walk past every smaller prime, whereas maxzx reaches 1019
# through f = x, q = 2, nu(2) = 510 and m = 2*510 - 1 = 1019.
c = maxzx(build_oracle(parse_oracle_spec(specs["<x, 1019>"]))).certificate
print("f =", c.f, " q =", c.q, " nu(q) =", c.nuq, " m =", c.m, " N =", c.N)
