"""
Auditing the Hirsch bound on small polytopes
=============================================

Cubes and simplices meet the bound n - d exactly; random hulls stay
well below it.  Everything is exact: coordinates are Fractions.
"""

from hirschkit.facelat import RecordStore, check_hirsch
from hirschkit.generators import cube_h, random_polytope, simplex_h

# The d-cube has 2d facets and diameter d.
for d in range(2, 6):
    print(check_hirsch(cube_h(d), f"cube{d}").to_line())

# Every pair of vertices of a simplex is an edge.
print(check_hirsch(simplex_h(5), "simplex5").to_line())

# Keep the largest diameter seen per (n, d).  These are lower bounds for H(n, d).
store = RecordStore()
for seed in range(30):
    P = random_polytope(3, 10, seed)
    store.update(check_hirsch(P, f"random-{seed}"))
print(store.dumps(), end="")
