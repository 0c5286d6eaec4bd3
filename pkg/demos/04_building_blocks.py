"""
Pseudo-division and the adjugate
================================

Two pieces of exact arithmetic carry the main construction: division by a
non-monic polynomial (paid for with a power of its leading coefficient) and
the first row of the adjugate of a matrix over Z[Y].
"""

from primewitness import Poly, parse_poly, pseudo_division
from primewitness.algebra import PolyMatrix, det_adjugate

f, g = parse_poly("2x + 1"), parse_poly("x^2")
res = pseudo_division(f, g)
print(f"d^k g + h f = r with k = {res.k}, h = {res.h}, r = {res.r}")
print("check:", f.lc**res.k * g + res.h * f == res.r)

Y = Poly.gen("Y")
A = PolyMatrix(((Y, Poly.constant(1, "Y")), (Poly.constant(2, "Y"), Y)))
det, adj = det_adjugate(A)
print("det =", det, " adjugate row 0 =", [str(a) for a in adj])
for k in range(2):
    s = sum((adj[j] * A[j, k] for j in range(2)), Poly((), "Y"))
    print(f"sum_j adj[j] A[j][{k}] =", s)
