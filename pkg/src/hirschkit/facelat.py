"""Vertex graphs, facet-ridge (dual) graphs, diameters and Hirsch audits."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .errors import DisconnectedGraphError, GeometryError
from .ratgeom import int_affine_rank
from .repconv import HRep, IncidenceStructure, VRep, _common_scale


@dataclass(frozen=True)
class Graph:
    """Undirected graph on ``range(n)``; ``kind`` is 'vertex' or 'dual'."""

    n: int
    adj: tuple
    kind: str = "vertex"

    @classmethod
    def from_edges(cls, n, edges, kind="vertex"):
        nb = [set() for _ in range(n)]
        for a, b in edges:
            nb[a].add(b)
            nb[b].add(a)
        return cls(n, tuple(frozenset(s) for s in nb), kind)

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in sorted(self.adj[a]) if a < b]

    def degree(self, i) -> int:
        return len(self.adj[i])

    def adjacent(self, a, b) -> bool:
        return b in self.adj[a]

    def subgraph(self, nodes) -> "Graph":
        """Induced subgraph, relabelled in sorted order; returns (graph, labels)."""
        labels = sorted(nodes)
        index = {x: i for i, x in enumerate(labels)}
        edges = [(index[a], index[b]) for a, b in self.edges() if a in index and b in index]
        return Graph.from_edges(len(labels), edges, self.kind), labels


# Kept as aliases: the two graphs differ only in what the nodes mean.
VertexGraph = Graph
DualGraph = Graph


def _check_consistent(inc: IncidenceStructure, geometry: VRep):
    if inc.nv != len(geometry):
        raise GeometryError(
            f"incidence has {inc.nv} vertices, geometry has {len(geometry)}"
        )
    d = geometry.dim
    for i, fs in enumerate(inc.facets_of):
        if len(fs) < d:
            raise GeometryError(f"vertex {i} lies on only {len(fs)} facets (< {d})")


def vertex_graph(inc: IncidenceStructure, geometry: VRep) -> Graph:
    """Edges are pairs whose smallest common face has 1-dimensional affine hull."""
    _check_consistent(inc, geometry)
    d = geometry.dim
    _, pts = _common_scale(geometry.vertices)
    masks = [sum(1 << i for i in vs) for vs in inc.vertices_of]
    full = (1 << inc.nv) - 1
    edges = []
    for u in range(inc.nv):
        for w in range(u + 1, inc.nv):
            common = inc.facets_of[u] & inc.facets_of[w]
            if len(common) < d - 1:
                continue
            face = full
            for f in common:
                face &= masks[f]
            members = [i for i in range(inc.nv) if face >> i & 1]
            if len(members) == 2 or int_affine_rank([pts[i] for i in members]) == 1:
                edges.append((u, w))
    return Graph.from_edges(inc.nv, edges, "vertex")


def dual_graph(inc: IncidenceStructure, geometry: VRep) -> Graph:
    """Facets are adjacent when their common vertices span a ridge (dim d-2)."""
    _check_consistent(inc, geometry)
    d = geometry.dim
    _, pts = _common_scale(geometry.vertices)
    edges = []
    for f in range(inc.nf):
        for g in range(f + 1, inc.nf):
            common = inc.vertices_of[f] & inc.vertices_of[g]
            if len(common) < d - 1:
                continue
            if int_affine_rank([pts[i] for i in sorted(common)]) == d - 2:
                edges.append((f, g))
    return Graph.from_edges(inc.nf, edges, "dual")


def bfs(g: Graph, s: int) -> list:
    """Distances from ``s``; None for unreachable nodes."""
    dist = [None] * g.n
    dist[s] = 0
    q = deque([s])
    while q:
        a = q.popleft()
        for b in g.adj[a]:
            if dist[b] is None:
                dist[b] = dist[a] + 1
                q.append(b)
    return dist


def components(g: Graph) -> list[set]:
    seen, comps = set(), []
    for s in range(g.n):
        if s in seen:
            continue
        comp = {i for i, x in enumerate(bfs(g, s)) if x is not None}
        seen |= comp
        comps.append(comp)
    return comps


def distance(g: Graph, s: int, t: int) -> int:
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise IndexError(f"node index out of range for graph on {g.n} nodes")
    d = bfs(g, s)[t]
    if d is None:
        raise DisconnectedGraphError(components(g))
    return d


def shortest_path(g: Graph, s: int, t: int, allowed=None) -> list[int] | None:
    """One shortest s-t path (smallest-index parents), optionally inside ``allowed``."""
    parent = {s: None}
    q = deque([s])
    while q:
        a = q.popleft()
        if a == t:
            break
        for b in sorted(g.adj[a]):
            if b not in parent and (allowed is None or b in allowed or b == t):
                parent[b] = a
                q.append(b)
    if t not in parent:
        return None
    path = [t]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def diameter(g: Graph) -> int:
    if g.n == 0:
        raise GeometryError("diameter of the empty graph")
    best = 0
    for s in range(g.n):
        dist = bfs(g, s)
        if None in dist:
            raise DisconnectedGraphError(components(g))
        best = max(best, max(dist))
    return best


VERDICTS = ("satisfies", "ties", "violates")


@dataclass(frozen=True)
class DiameterRecord:
    n: int
    d: int
    diameter: int
    source: str = "-"

    @property
    def hirsch_bound(self) -> int:
        return self.n - self.d

    @property
    def verdict(self) -> str:
        gap = self.diameter - self.hirsch_bound
        return "violates" if gap > 0 else "ties" if gap == 0 else "satisfies"

    def to_line(self) -> str:
        return "\t".join(map(str, (
            self.n, self.d, self.diameter, self.hirsch_bound, self.verdict, self.source
        )))

    @classmethod
    def from_line(cls, line: str) -> "DiameterRecord":
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 6:
            raise ValueError(f"report line needs 6 tab-separated fields: {line!r}")
        n, d, diam, bound = map(int, parts[:4])
        rec = cls(n, d, diam, parts[5])
        if bound != rec.hirsch_bound or parts[4] != rec.verdict:
            raise ValueError(f"inconsistent report line: {line!r}")
        return rec


def check_hirsch(poly, source: str = "-") -> DiameterRecord:
    """Audit the Hirsch bound n - d; accepts an HRep or a Polytope."""
    from .polytope import Polytope

    if isinstance(poly, HRep):
        poly = Polytope.from_h(poly)
    return DiameterRecord(poly.n_facets, poly.dim, diameter(poly.vertex_graph), source)


def dstep_equivalent(n: int, d: int) -> tuple[int, int]:
    """The (facets, dim) pair of the d-step case governing H(n, d).

    Klee and Walkup: max over d of H(d + m, d) equals H(2m, m), so the
    worst case for a given m = n - d sits at n = 2d.
    """
    m = n - d
    return 2 * m, m


class RecordStore:
    """Largest observed diameter per (n, d): lower bounds for H(n, d)."""

    def __init__(self, records: Iterable[DiameterRecord] = ()):
        self.best: dict[tuple[int, int], DiameterRecord] = {}
        for r in records:
            self.update(r)

    def update(self, rec: DiameterRecord) -> bool:
        key = (rec.n, rec.d)
        old = self.best.get(key)
        if old is None or rec.diameter > old.diameter or (
            rec.diameter == old.diameter and rec.source < old.source
        ):
            self.best[key] = rec
            return True
        return False

    def lower_bound(self, n: int, d: int):
        rec = self.best.get((n, d))
        return None if rec is None else rec.diameter

    def __len__(self):
        return len(self.best)

    def records(self) -> list[DiameterRecord]:
        return sorted(self.best.values(), key=lambda r: (r.n, r.d, r.source))

    def dumps(self) -> str:
        return "".join(r.to_line() + "\n" for r in self.records())

    def dump(self, path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @classmethod
    def load(cls, path) -> "RecordStore":
        p = Path(path)
        if not p.exists():
            return cls()
        lines = p.read_text(encoding="utf-8").splitlines()
        return cls(DiameterRecord.from_line(s) for s in lines if s.strip())


def h_record_update(store: RecordStore, rec: DiameterRecord) -> RecordStore:
    new = RecordStore(store.best.values())
    new.update(rec)
    return new


def lattice_hash(inc: IncidenceStructure) -> str:
    """Isomorphism-invariant hash of the vertex-facet incidence graph."""
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from((("v", i) for i in range(inc.nv)), side="v")
    g.add_nodes_from((("f", j) for j in range(inc.nf)), side="f")
    g.add_edges_from((("v", i), ("f", j)) for i in range(inc.nv) for j in inc.facets_of[i])
    return nx.weisfeiler_lehman_graph_hash(g, node_attr="side", iterations=4)
