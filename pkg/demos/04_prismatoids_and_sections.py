"""
Prismatoids from two bases and their middle section
====================================================

With the bases at heights 0 and 1, the middle section is half the
Minkowski sum of the bases.  The side facets correspond to the facets of
that sum, and the width can be read off the sum's facet graph.
"""

from fractions import Fraction

from hirschkit.spindlekit import build_prismatoid, check_section_lemma, minkowski_sum, random_prismatoid

# A triangle and a copy rotated by about 60 degrees, with rational coordinates
c, s = Fraction(33, 65), Fraction(56, 65)
tri = [(Fraction(1), Fraction(0)), (Fraction(-1, 2), Fraction(866, 1000)), (Fraction(-1, 2), Fraction(-866, 1000))]
rot = [(c * x - s * y, s * x + c * y) for x, y in tri]

q = build_prismatoid(tri, rot)
print(q.line())
print("Minkowski sum has", len(minkowski_sum(tri, rot)), "vertices")
print("\n".join(check_section_lemma(q).lines()))

# The same check on a random 4-prismatoid
q4 = random_prismatoid(4, 6, seed=3)
print(q4.line())
print("\n".join(check_section_lemma(q4).lines()))
