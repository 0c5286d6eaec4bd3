"""
Refining a non-ideal step by step
=================================

Start from M = (always false) and nu = 1.  That pair is not an explicit
maximal ideal, and maxzx says why.  Each time, we patch the oracle so the
reported witness goes away and run again.
"""

from primewitness import Poly, build_oracle, maxzx, parse_oracle_spec, parse_poly, validate_evidence

o = build_oracle(parse_oracle_spec("kind=constant\nvalue=ff\nnu=1"))
print("start:", maxzx(o.fresh()).describe())
# x is not in M, but neither is x*nu(x) - 1 = x - 1.

o = o.with_override("nu", parse_poly("x"), Poly.constant(2))
o = o.with_override("M", parse_poly("2x - 1"), True)
out = maxzx(o.fresh())
print("after nu(x) = 2, M(2x-1) = tt:", out.describe())
print("witness valid:", validate_evidence(o.fresh(), out.result.evidence))

# Now f = 2x - 1, so q = 3.  The complaint is about 3: neither 3 nor
# 3*nu(3) - 1 lies in M.  Make nu(3) = 1 and declare 2 = 3*1 - 1 a member.
o = o.with_override("nu", Poly.constant(3), Poly.constant(1))
o = o.with_override("M", Poly.constant(2), True)
out = maxzx(o.fresh())
print("after nu(3) = 1, M(2) = tt:", out.describe())

# Keep going as long as you like; each answer names one concrete element.
for step in range(4):
    ev = out.result.evidence if hasattr(out.result, "evidence") else None
    if ev is None:
        break
    if ev.case == 3:
        o = o.with_override("M", ev.lam * ev.a, True)
    elif ev.case == 2:
        o = o.with_override("M", ev.a + ev.b, True)
    elif ev.case == 5:
        o = o.with_override("M", ev.a, True)
    else:
        break
    out = maxzx(o.fresh())
    print(f"patch {step + 1}:", out.describe())
