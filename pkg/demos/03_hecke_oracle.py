"""
Checking against the Hecke algebra
==================================

The oracle builds a ball of W by braid moves, computes the Kazhdan-Lusztig
basis by the usual recursion and reads gamma off c_x c_y.
"""

import time

from subreg.automaton import enumerate_cell
from subreg.hecke import HeckeOracle
from subreg.jring import mul_basis
from subreg.systems import dihedral, path, triangle_456

# S_4 has a KL polynomial 1 + q: in the v-normalisation p = v^-3 + v^-1.
s4 = path(3)
o = HeckeOracle(s4, 6)
b = o.ball
x, y = b.lookup(s4.parse_word("2")), b.lookup(s4.parse_word("2132"))
print(len(b), "elements;", o.kl.poly(x, y), "; mu =", o.kl.mu(x, y))

# c_x c_y in the KL basis, then gamma as the v^1 coefficient.
d7 = dihedral(7)
o = HeckeOracle(d7, 8)
for z, h in sorted(o.c_mul_words("1212", "212").items()):
    print(d7.format_word(z), h)
print(o.gamma_row("1212", "212"))

# Sweep every pair with l(x) + l(y) <= 8 on the (4,5,6) triangle.
d = triangle_456()
start = time.perf_counter()
o = HeckeOracle(d, 8)
cell = enumerate_cell(d, 7)
pairs = [(a, c) for a in cell for c in cell if len(a) + len(c) <= 8]
bad = sum(o.gamma_row(a, c) != mul_basis(a, c, d) for a, c in pairs)
print(f"{len(pairs)} pairs, {bad} disagreements, {time.perf_counter() - start:.1f}s")
