"""
Artin-Schreier towers: a combination that fails over GF(4)(X)
==============================================================

K = F[Z]/(Z^4 - Z - X) over F = GF(4)(X).  Elements of K are represented by
their 4 x 4 multiplication matrices, so degrees are minimal-polynomial
degrees.  x = alpha^2 - alpha and y = alpha^2 - a*alpha both have degree 2,
yet x + b*y generates K for every b except b = a.
"""

from uniserial import build_pedo, min_poly_matrix

inst = build_pedo(2)
print("F =", inst.F.name)
print("min poly of x:", min_poly_matrix(inst.x).format("Z"))
print("min poly of y:", min_poly_matrix(inst.y).format("Z"))
for b, d in inst.degrees.items():
    print(f"deg(x + ({b})*y) = {d}")
print("certificate passed:", inst.certificate.passed)
