"""
Words, dihedral segments and the subregular cell
================================================

"""

# Coxeter systems are given by labels and the weights m(s, t); pairs that
# are not listed commute (m = 2).
from subreg.coxeter import dihedral_segments, glued_product, is_subregular, validate_diagram
from subreg.automaton import build_graph, enumerate_box, enumerate_cell, word_to_walk

d = validate_diagram("123", [["1", "2", 4], ["1", "3", 5], ["2", "3", 6]], name="(4,5,6)")
print(d.generators, d.edges())

# Every word cuts into maximal two-letter pieces that overlap in one letter.
x = d.parse_word("123213")
segs = dihedral_segments(x)
print([d.format_word(s) for s in segs])

# Gluing them back along the shared letters gives the word again.
print(d.format_word(glued_product(*segs)))

# A word spells an element of C when no letter repeats and each piece is
# shorter than the weight of its pair.
for w in ("123213", "1212", "12121"):
    print(w, is_subregular(d.parse_word(w), d))

# The subregular graph walks through those pieces one letter at a time.
print([d.format_word(v) for v in word_to_walk(x, d)])

g = build_graph(d, 5)
print(len(g.vertices), "vertices,", g.edge_count(), "edges")

# Walks from single letters enumerate C in (length, word) order.
cell = enumerate_cell(d, 4)
print(len(cell), "elements of length <= 4")
print(" ".join(d.format_word(w) for w in cell[:12]), "...")

# A box collects the words from one letter to another.
print([d.format_word(w) for w in enumerate_box(d, 0, 2, 5)])
