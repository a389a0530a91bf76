"""
Products in the J-ring
======================

"""

from subreg.jring import element, segment_product, t, tau, anti_involution
from subreg.systems import chain_44, dihedral, triangle_334, triangle_456

# In a dihedral group the product is the truncated Clebsch-Gordan rule.
d7 = dihedral(7)
print(t("1212", d7) * t("212", d7))
print(t("1212", d7) * t("2121", d7))
print(t("212", d7) * t("212121", d7))

# Words that do not meet at a letter multiply to zero.
d = triangle_456()
print((t("12", d) * t("13", d)).render())

# Longer words: adjacent pieces on the same pair of letters collapse until
# no such pair is left, and what remains glues together.
print((t("123", d) * t("3213", d)).render())
print((t("123", d) * t("323213", d)).render())

# Each basis element is the product of its pieces.
x = "1232123"
print(segment_product(x, d) == t(x, d))

# tau picks out the coefficient of the unit; it sees x against its reverse.
p = t("123", d) * t("321", d)
print(p.render(), "  tau =", tau(p))
print(anti_involution(p) == p)

# The chain 1 -4- 2 -4- 3 has an infinite box at 1.
c = chain_44()
tn = lambda n: t("1" + "2321" * n, c)
print((tn(2) * tn(3)).render())
print((t("121", c) * t("121", c)).render())

# The odd triangle has a small presentation on J_1.
o = triangle_334()
tx, ty = t("1231", o), t("1321", o)
print((tx * ty).render(), "|", (tx * ty * tx).render())
