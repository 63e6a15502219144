"""
Why the field must be perfect
=============================

Over GF(2)(t) the algebra spanned by D = diag(C, C) and E = [[0, I], [0, 0]],
C the companion matrix of X^2 - t, acts uniserially on F^4 but has no
single generator: every element squares to a scalar.  B = D + E has two
Jordan-Chevalley decompositions, (D, E) and (B, 0), and the library refuses
to pick one.
"""

from uniserial import build_menti, jordan_chevalley
from uniserial.errors import ImperfectFieldError

inst = build_menti(2)
for c in inst.certificate["claims"]:
    print(("ok  " if c["pass"] else "FAIL"), c["name"])

try:
    jordan_chevalley(inst.B)
except ImperfectFieldError as e:
    print("refused:", e)
