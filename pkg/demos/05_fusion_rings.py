"""
Fusion rings
============

"""

from subreg.coxeter import validate_diagram
from subreg.fusion import (
    decode_amalg,
    decode_unitary,
    encode_amalg,
    encode_unitary,
    ffr_mul,
    fusion_set_U,
    fusion_set_Z,
    fusion_word,
    unitary_to_j,
    verlinde_mul,
)
from subreg.jring import t
from subreg.structure import classify_fusion, verlinde_identification
from subreg.systems import dihedral, thmD_triangle, thmE

# Verlinde algebras and the truncated rule.
print(verlinde_mul(3, 3, 5).render(), "|", verlinde_mul(3, 3, 6).render())

# A finite box is the odd part of one Verlinde algebra.
tree = validate_diagram("1234", [["1", "2", 3], ["2", "3", 5], ["3", "4", 3]])
print(classify_fusion(tree), verlinde_identification(tree, 0))
print(classify_fusion(dihedral(8)), classify_fusion(thmD_triangle()))

# Two letters a, b = bar(a) with no fusion, against words from 0 to 0 on a
# triangle with one infinite edge.
d = thmD_triangle()
U = fusion_set_U()
print(d.format_word(decode_unitary("abaa", d)), encode_unitary("012120120", d))
v, w = fusion_word("ab", U), fusion_word("ba", U)
print((v * w).render())
print(unitary_to_j(v * w, d))
print(t(decode_unitary("ab", d), d) * t(decode_unitary("ba", d), d))

# Matrix units e_ij against the fan systems.
e4 = thmE(4)
for word in ("e24", "e43", "e44", "e24.e43.e44.e44"):
    x = decode_amalg(4, word, e4)
    print(word, "->", e4.format_word(x), "->", ".".join(encode_amalg(4, x, e4)))
print(ffr_mul("e12", "e21", fusion_set_Z(2)).render())
