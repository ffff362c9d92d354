"""Prismatoids from two parallel bases, Minkowski sums, and the section check.

A d-prismatoid with bases at heights 1 and 0 meets the middle
hyperplane in (Q+ + Q-)/2.  Its non-base facets therefore correspond to
the facets of the Minkowski sum, via the projection (a, a0) -> a of
their normals, and the width can be read off the sum's facet graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..errors import BaseNotFacetError, GeometryError
from ..facelat import Graph, distance
from ..polytope import Polytope
from ..ratgeom import as_vector, integer_row, primitive
from ..repconv import VRep
from .certs import PrismatoidCert, prismatoid_width


def _vrep(x) -> VRep:
    if isinstance(x, VRep):
        return x
    if isinstance(x, Polytope):
        return x.v
    pts = [as_vector(p) for p in x]
    return VRep(len(pts[0]), tuple(dict.fromkeys(pts)))


def build_prismatoid(base_plus, base_minus) -> PrismatoidCert:
    """conv(Q+ x {1}  u  Q- x {0}) with its two bases and width."""
    bp, bm = _vrep(base_plus), _vrep(base_minus)
    if bp.dim != bm.dim:
        raise ValueError("bases live in different dimensions")
    e = bp.dim
    for name, b in (("base_plus", bp), ("base_minus", bm)):
        if len(b) <= e:
            raise BaseNotFacetError(
                f"{name} has {len(b)} points, too few to span R^{e}; it cannot be a facet"
            )
    pts = [p + (1,) for p in bp.vertices] + [p + (0,) for p in bm.vertices]
    try:
        Q = Polytope.from_v(pts)
    except GeometryError as exc:
        raise BaseNotFacetError(f"hull is degenerate: {exc}") from exc
    top = (0,) * e + (1, 1)
    bottom = (0,) * e + (-1, 0)
    keys = [q.key() for q in Q.ineqs]
    missing = [n for n, k in (("base_plus", top), ("base_minus", bottom)) if k not in keys]
    if missing:
        raise BaseNotFacetError(
            f"{' and '.join(missing)} is not a facet of the hull "
            f"({Q.n_vertices} vertices, {Q.n_facets} facets)"
        )
    return prismatoid_width(Q, keys.index(top), keys.index(bottom))


def minkowski_sum(a, b) -> VRep:
    """Vertices of conv{p + q}, in sorted order."""
    va, vb = _vrep(a), _vrep(b)
    if va.dim != vb.dim:
        raise ValueError("summands live in different dimensions")
    pts = list(dict.fromkeys(
        tuple(x + y for x, y in zip(p, q)) for p in va.vertices for q in vb.vertices
    ))
    if len(pts) == 1:
        return VRep(va.dim, tuple(pts))
    return VRep(va.dim, tuple(sorted(Polytope.from_v(pts).vertices)))


def _direction(a) -> tuple:
    return primitive(integer_row(a))


def _multi_source_distance(g: Graph, sources, targets):
    dist = {s: 0 for s in sources}
    q = deque(sources)
    while q:
        x = q.popleft()
        if x in targets:
            return dist[x]
        for y in g.adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return None


@dataclass
class SectionReport:
    width: int
    bijection: bool
    adjacency: bool
    section_width: int | None
    restricted_width: int | None
    details: list = field(default_factory=list)

    @property
    def width_ok(self) -> bool:
        return self.width == self.section_width == self.restricted_width

    @property
    def ok(self) -> bool:
        return self.bijection and self.adjacency and self.width_ok

    def lines(self) -> list[str]:
        out = [
            f"SECTION facets={'ok' if self.bijection else 'FAIL'} "
            f"adjacency={'ok' if self.adjacency else 'FAIL'} width={self.width} "
            f"via-sum={self.section_width} via-nonbase={self.restricted_width} "
            f"{'ok' if self.ok else 'FAIL'}"
        ]
        out += self.details
        if not self.ok:
            out.append(
                "this indicates an implementation bug, not a counterexample to the section property"
            )
        return out


def check_section_lemma(q: PrismatoidCert) -> SectionReport:
    """Check the section properties of a prismatoid with bases at heights 1 and 0.

    (A) non-base facets of Q <-> facets of Q+ + Q-, by normal
    projection, preserving adjacency.  (B) the width is 2 plus the facet
    distance, inside the Minkowski sum, from facets parallel to a facet of
    Q+ to facets parallel to a facet of Q-.  (B) is also recomputed inside
    Q, as 2 plus the distance between base neighbours through non-base
    facets.
    """
    Q = q.polytope
    d = Q.dim
    e = d - 1
    top = (0,) * e + (1, 1)
    bottom = (0,) * e + (-1, 0)
    if Q.ineqs[q.base_plus].key() != top or Q.ineqs[q.base_minus].key() != bottom:
        raise ValueError("bases must be the facets x_d <= 1 and x_d >= 0")
    details = []
    plus = [p[:-1] for p in Q.vertices if p[-1] == 1]
    minus = [p[:-1] for p in Q.vertices if p[-1] == 0]
    Bp, Bm = Polytope.from_v(plus), Polytope.from_v(minus)
    M = Polytope.from_v(minkowski_sum(Bp, Bm))

    bases = {q.base_plus, q.base_minus}
    side = [j for j in range(Q.n_facets) if j not in bases]
    m_index = {_direction(f.a): i for i, f in enumerate(M.ineqs)}
    match = {}
    bijection = True
    for j in side:
        key = _direction(Q.ineqs[j].a[:-1])
        i = m_index.get(key)
        if i is None:
            bijection = False
            details.append(f"facet {j} of Q projects to normal {key}, not a facet of the sum")
        elif i in match.values():
            bijection = False
            details.append(f"facets of Q collide on sum facet {i}")
        else:
            match[j] = i
    if len(match) != M.n_facets:
        bijection = False
        details.append(f"sum has {M.n_facets} facets, matched {len(match)}")

    adjacency = bijection
    if bijection:
        GQ, GM = Q.dual_graph, M.dual_graph
        for x in side:
            for y in side:
                if x < y and GQ.adjacent(x, y) != GM.adjacent(match[x], match[y]):
                    adjacency = False
                    details.append(
                        f"facets {x},{y} of Q: adjacent={GQ.adjacent(x, y)}, "
                        f"in the sum adjacent={GM.adjacent(match[x], match[y])}"
                    )

    # (B) through the sum: neighbours of Q+ are the sum facets parallel to facets of Q+
    np_ = {_direction(f.a) for f in Bp.ineqs}
    nm_ = {_direction(f.a) for f in Bm.ineqs}
    src = [i for i, f in enumerate(M.ineqs) if _direction(f.a) in np_]
    dst = {i for i, f in enumerate(M.ineqs) if _direction(f.a) in nm_}
    dm = _multi_source_distance(M.dual_graph, src, dst)
    section_width = None if dm is None else 2 + dm

    # (B) inside Q, through non-base facets only
    sub, labels = Q.dual_graph.subgraph(side)
    pos = {x: i for i, x in enumerate(labels)}
    nbp = [pos[x] for x in Q.dual_graph.adj[q.base_plus] if x in pos]
    nbm = {pos[x] for x in Q.dual_graph.adj[q.base_minus] if x in pos}
    dr = _multi_source_distance(sub, nbp, nbm)
    restricted = None if dr is None else 2 + dr

    width = distance(Q.dual_graph, q.base_plus, q.base_minus)
    if width != q.width:
        details.append(f"certificate width {q.width} but recomputed {width}")
    if not (width == section_width == restricted):
        details.append(
            f"width {width}, via Minkowski sum {section_width}, via non-base facets {restricted}"
        )
    return SectionReport(width, bijection, adjacency, section_width, restricted, details)
