"""
Primitive linear combinations in a finite field
===============================================

Two elements x, y of GF(2^6) with degrees 2 and 3 over GF(2) generate the
whole field, and x + y already does.  Then a pair built so that no
GF(2)-combination generates GF(2)[x, y].
"""

import random

from uniserial import ExtensionField, element_degree, build_unomas
from uniserial.primelt import degree_profile, find_primitive_pair, sweep_alpha_statistics

K = ExtensionField(2, [1, 1, 0, 0, 0, 0, 1])  # X^6 + X + 1
g = K.gen
x, y = g**21, g**9
print("degrees:", element_degree(x), element_degree(y))
print(degree_profile(2, 3))
print("alpha:", find_primitive_pair(x, y))

# degrees 15 and 21: d = 3 does not divide mn = 35, and GF(2) has one alpha only
inst = build_unomas(2, 1, rng=random.Random(1))
stats = sweep_alpha_statistics(inst.x, inst.y, 2)
print("t =", inst.t, "profile:", stats.profile)
print("deg(x + y) =", element_degree(inst.x + inst.y), "< 105")
print("failing alphas:", len(stats.failing_alphas), "bound A =", stats.A)
