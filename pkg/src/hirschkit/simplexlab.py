"""Monotone vertex walks under simple pivot rules, and their path statistics."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .facelat import distance
from .polytope import Polytope
from .ratgeom import as_vector, dot

RULES = ("greatest-increase", "random-improving", "first-improving")


@dataclass(frozen=True)
class LPInstance:
    """Maximise ``objective`` over ``polytope``."""

    polytope: Polytope
    objective: tuple

    def __post_init__(self):
        c = as_vector(self.objective)
        if len(c) != self.polytope.dim:
            raise ValueError(f"objective has {len(c)} entries for a {self.polytope.dim}-polytope")
        object.__setattr__(self, "objective", c)

    def value(self, i: int) -> Fraction:
        return dot(self.objective, self.polytope.vertices[i])

    def optimum(self) -> Fraction:
        return max(self.value(i) for i in range(self.polytope.n_vertices))


@dataclass(frozen=True)
class WalkTrace:
    rule: str
    seed: int
    path: tuple
    values: tuple

    @property
    def length(self) -> int:
        return len(self.path) - 1

    def lines(self) -> list[str]:
        return [f"{i} {v} {val}" for i, (v, val) in enumerate(zip(self.path, self.values))]


def _order_key(inst: LPInstance, i: int):
    return inst.polytope.vertices[i]


def simplex_walk(inst: LPInstance, start: int, rule: str = "greatest-increase", seed: int = 0) -> WalkTrace:
    """Walk along edges until no neighbour improves the objective.

    Ties (equal objective under greatest-increase, or candidate order
    for first-improving) go to the lexicographically smallest vertex.
    random-improving draws uniformly from the improving neighbours with
    a generator seeded by ``seed``.
    """
    if rule not in RULES:
        raise ValueError(f"unknown pivot rule {rule!r}; choose from {', '.join(RULES)}")
    P = inst.polytope
    if not 0 <= start < P.n_vertices:
        raise IndexError(f"start vertex {start} out of range")
    g = P.vertex_graph
    rng = random.Random(seed)
    path = [start]
    values = [inst.value(start)]
    cur = start
    while True:
        here = values[-1]
        better = sorted(
            (w for w in g.adj[cur] if inst.value(w) > here),
            key=lambda w: _order_key(inst, w),
        )
        if not better:
            break
        if rule == "greatest-increase":
            best = max(inst.value(w) for w in better)
            nxt = next(w for w in better if inst.value(w) == best)
        elif rule == "first-improving":
            nxt = better[0]
        else:
            nxt = rng.choice(better)
        path.append(nxt)
        values.append(inst.value(nxt))
        cur = nxt
    return WalkTrace(rule, seed, tuple(path), tuple(values))


@dataclass(frozen=True)
class PathStat:
    length: int
    distance: int
    m: int

    @property
    def ratio(self) -> float:
        return self.length / self.m if self.m else float("inf")

    @property
    def over_3m(self) -> bool:
        return self.length > 3 * self.m


def path_stats(runs) -> dict:
    """Summaries for (instance, trace) pairs.

    ``m`` is n - d with n the facet count.  Traces longer than 3m are
    listed under ``flagged``; this is purely informational.
    """
    per = []
    for inst, trace in runs:
        P = inst.polytope
        dist = distance(P.vertex_graph, trace.path[0], trace.path[-1])
        per.append(PathStat(trace.length, dist, P.n_facets - P.dim))
    if not per:
        return {"count": 0, "per_instance": [], "max_ratio": None, "mean_ratio": None, "flagged": []}
    ratios = [s.ratio for s in per]
    return {
        "count": len(per),
        "per_instance": per,
        "max_ratio": max(ratios),
        "mean_ratio": sum(ratios) / len(ratios),
        "flagged": [i for i, s in enumerate(per) if s.over_3m],
    }
