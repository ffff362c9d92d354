"""
Spindles, their length, and the dual prismatoid
================================================

A spindle has two vertices whose facets cover all facets.  Polarity
swaps vertices and facets, so its polar is a prismatoid whose width is
the spindle's length.
"""

from collections import Counter

from hirschkit.spindlekit import dual_prismatoid, gen_spindle, length_path

S = gen_spindle(3, (3, 5), seed=7)
print(S.line())
print("a shortest apex path:", length_path(S))

Q = dual_prismatoid(S)
print(Q.line())
assert Q.width == S.length

# In dimension 3 a spindle never needs more than 3 steps.
lengths = Counter(gen_spindle(3, (3, 5), seed).length for seed in range(200))
print("lengths over 200 random 3-spindles:", dict(sorted(lengths.items())))
