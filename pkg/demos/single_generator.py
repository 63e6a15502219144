"""
A single generator for a uniserial action
=========================================

Start from F[C] with C the companion matrix of p^3, p = X^2 + X + 1 over
GF(2).  Hide it behind two random polynomials in C and a random change of
basis, then recover a u with minimal polynomial p^3 and write both inputs
as polynomials in u.
"""

import random

from uniserial import GF, Poly, analyze, companion
from uniserial.linalg import conjugate, random_invertible

F = GF(2)
rng = random.Random(7)
p = Poly([1, 1, 1], F)
C = companion(p**3)
gens = [C.polyval(Poly([0, 1, 1, 0, 1], F)), C.polyval(Poly([1, 0, 0, 1], F))]
P = random_invertible(6, F, rng)
gens = [conjugate(g, P) for g in gens]

rep = analyze(gens)
print("uniserial:", rep.uniserial, "length:", rep.length)
print("socle layers:", rep.socle_chain.layer_dims)
q, ell = rep.shape
print(f"min poly of u: ({q.format()})^{ell}")
for k, h in rep.expressions.items():
    print(f"g{k} = {h.format('u')}")
print("combination:", rep.combination, rep.notes)

# every input is recovered exactly from its expression
assert all(rep.generator.polyval(h) == g for h, g in zip(rep.expressions.values(), gens))
