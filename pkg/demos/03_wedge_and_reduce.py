"""
Wedging a spindle and the d-step reduction
===========================================

Each validated wedge adds one to dimension, facet count and length.
Repeating it m - 2d times lands on a spindle with twice as many facets
as its dimension.  The margin k - d is unchanged.
"""

from hirschkit.generators import square_bipyramid
from hirschkit.spindlekit import (
    dstep_reduce_execute,
    dstep_reduce_plan,
    spindle_length,
    wedge,
    wedge_facet_candidates,
)

B = square_bipyramid()
S = spindle_length(B, B.vertex_index((0, 0, 1)), B.vertex_index((0, 0, -1)))
print(S.line())

facet = wedge_facet_candidates(S)[0]
r = wedge(S, facet)
print(r.cert.line(), r.status)

# Without the tilt the wedge keeps the length.
print(wedge(S, facet, 0).cert.line(), "(unperturbed)")

run = dstep_reduce_execute(S, 2)
for step in run.steps:
    print("  ->", step.cert.line())

# Full-size plans are pure arithmetic.  A spindle with 48 facets in
# dimension 5 and length 6 would end at (43, 86, 44).
print(dstep_reduce_plan(5, 48, 6).line())
