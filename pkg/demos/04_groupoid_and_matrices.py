"""
Two structure maps
==================

"""

from subreg.automaton import enumerate_cell
from subreg.jring import JElement, t
from subreg.structure import PsiMap, order_two_elements, phi_simply_laced, walk_class
from subreg.systems import chain_44, cycle, triangle_334

# Simply-laced: a basis word is a walk on the Coxeter graph, and products
# follow concatenation with backtracking cancelled.
d = cycle(3)
a, b = t("1231", d), t("132", d)
print(phi_simply_laced(a * b))
print(phi_simply_laced(a) * phi_simply_laced(b))
print(walk_class("12321", d))

cell = enumerate_cell(d, 5)
ok = all(phi_simply_laced(JElement({x: 1}, d) * JElement({y: 1}, d))
         == phi_simply_laced(JElement({x: 1}, d)) * phi_simply_laced(JElement({y: 1}, d))
         for x in cell for y in cell)
print(len(cell), "words, homomorphism:", ok)

# Odd edges let every box be moved to one base letter; J_C becomes a
# matrix ring over J_1.
o = triangle_334()
psi = PsiMap(o, 0)
for w in ("1", "2", "12", "1231", "231"):
    print(w, "->", psi(t(w, o)))
m = psi(t("1231", o)) * psi(t("1321", o))
print(m, "==", psi(t("1231", o) * t("1321", o)))
print(psi.inverse(psi(t("2312", o))))

# Without odd connections the boxes can differ: count elements of order 2.
c = chain_44()
for s in ("1", "2"):
    words = order_two_elements(c, c.index(s), 10)
    print(f"J_{s}:", [c.format_word(w) for w in words])
