"""A bounded full-dimensional polytope held in both representations."""

from __future__ import annotations

from functools import cached_property

from .repconv import (
    HRep,
    IncidenceStructure,
    VRep,
    extreme_subset,
    h_to_v,
    incidence,
    remove_redundant,
    v_to_h,
)
from .ratgeom import Inequality, as_vector


class Polytope:
    """Irredundant H-representation, vertex list and their incidences.

    Facet ``j`` is ``h.ineqs[j]`` and vertex ``i`` is ``v.vertices[i]``.
    Build one with :meth:`from_h` or :meth:`from_v`; the constructor
    trusts its arguments.
    """

    def __init__(self, h: HRep, v: VRep, inc: IncidenceStructure | None = None):
        self.h = h
        self.v = v
        self.inc = inc if inc is not None else incidence(h, v)

    @classmethod
    def from_h(cls, h) -> "Polytope":
        if not isinstance(h, HRep):
            h = list(h)
            h = HRep(h[0].dim, tuple(h))
        v = h_to_v(h)
        return cls(remove_redundant(h, v), v)

    @classmethod
    def from_v(cls, v) -> "Polytope":
        if not isinstance(v, VRep):
            pts = [as_vector(p) for p in v]
            v = VRep(len(pts[0]), tuple(dict.fromkeys(pts)))
        h = v_to_h(v)
        verts = extreme_subset(v.vertices, h)
        return cls(h, VRep(v.dim, tuple(verts)))

    @property
    def dim(self) -> int:
        return self.h.dim

    @property
    def n_facets(self) -> int:
        return len(self.h)

    @property
    def n_vertices(self) -> int:
        return len(self.v)

    @property
    def vertices(self):
        return self.v.vertices

    @property
    def ineqs(self):
        return self.h.ineqs

    @cached_property
    def vertex_graph(self):
        from .facelat import vertex_graph

        return vertex_graph(self.inc, self.v)

    @cached_property
    def dual_graph(self):
        from .facelat import dual_graph

        return dual_graph(self.inc, self.v)

    def vertex_index(self, point) -> int:
        return self.v.vertices.index(as_vector(point))

    def facet_index(self, ineq: Inequality) -> int:
        key = ineq.key()
        for j, q in enumerate(self.h.ineqs):
            if q.key() == key:
                return j
        raise ValueError("inequality is not a facet of this polytope")

    def centroid(self) -> tuple:
        n = self.n_vertices
        return tuple(
            sum(p[k] for p in self.vertices) / n for k in range(self.dim)
        )

    def translated(self, shift) -> "Polytope":
        shift = as_vector(shift)
        h = HRep(self.dim, tuple(
            Inequality(q.a, q.b + sum(a * s for a, s in zip(q.a, shift)))
            for q in self.ineqs
        ))
        v = VRep(self.dim, tuple(
            tuple(x + s for x, s in zip(p, shift)) for p in self.vertices
        ))
        return Polytope(h, v, self.inc)

    def __repr__(self):
        return (
            f"Polytope(dim={self.dim}, facets={self.n_facets}, "
            f"vertices={self.n_vertices})"
        )
