"""Exact thinness and centeredness of small finite graphs.

Enumerating every geodesic triangle is exponential, so both constants are
computed from per-target dynamic programs over the geodesic DAG.  For a
target ``z`` every geodesic from ``v`` to ``z`` starts at ``v`` and continues
as a geodesic from one of ``v``'s successors, so path statistics that are a
pointwise minimum over path vertices fold layer by layer.

* thinness only needs, for each (v, z, p), the largest possible distance from
  p to a v-z geodesic.
* centeredness needs the full distance profile of each geodesic, of which we
  keep only the pointwise-maximal ones (a dominated profile never gives a
  worse triangle).
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

GEODESIC_CAP = 10**6


class GraphError(ValueError):
    pass


class GeodesicOverflow(RuntimeError):
    pass


@dataclass(frozen=True)
class FiniteGraph:
    vertex_count: int
    edges: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        n = self.vertex_count
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range")
        if np.any(self.distances < 0):
            raise GraphError("graph is not connected")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "FiniteGraph":
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen))

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        adj: List[List[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def distances(self) -> np.ndarray:
        n = self.vertex_count
        adj: List[List[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        d = np.full((n, n), -1, dtype=np.int64)
        for s in range(n):
            d[s, s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                for w in adj[u]:
                    if d[s, w] < 0:
                        d[s, w] = d[s, u] + 1
                        q.append(w)
        d.setflags(write=False)
        return d

    def relabel(self, perm: Sequence[int]) -> "FiniteGraph":
        return FiniteGraph.from_edges(self.vertex_count, [(perm[u], perm[v]) for u, v in self.edges])

    def to_json(self) -> str:
        return json.dumps({"n": self.vertex_count, "edges": sorted(list(e) for e in self.edges)})

    @classmethod
    def from_json(cls, text: str) -> "FiniteGraph":
        try:
            obj = json.loads(text)
            n = int(obj["n"])
            edges = obj["edges"]
        except (ValueError, KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph file: {exc}") from exc
        return cls.from_edges(n, edges)


# ---------------------------------------------------------------- builders

def path_graph(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen_graph() -> FiniteGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return FiniteGraph.from_edges(10, outer + spokes + inner)


def prufer_tree(seq: Sequence[int]) -> FiniteGraph:
    """Labelled tree on len(seq)+2 vertices from a Prufer sequence."""
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return FiniteGraph.from_edges(n, edges)


def all_trees(max_vertices: int) -> List[FiniteGraph]:
    """Every labelled tree on 1..max_vertices vertices, up to isomorphism."""
    import networkx as nx

    out = [FiniteGraph(1, frozenset())]
    for n in range(2, max_vertices + 1):
        for t in nx.nonisomorphic_trees(n):
            out.append(FiniteGraph.from_edges(n, t.edges()))
    return out


def random_connected_graph(rng: random.Random, max_vertices: int) -> FiniteGraph:
    """A random spanning tree plus a random sprinkling of extra edges."""
    n = rng.randint(2, max_vertices)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    extra = rng.randint(0, 2 * n)
    for _ in range(extra):
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    return FiniteGraph(n, frozenset(edges))


# ---------------------------------------------------------------- geodesics

def all_geodesics(g: FiniteGraph, x: int, y: int, cap: int = GEODESIC_CAP) -> Set[Tuple[int, ...]]:
    """Every shortest x-y vertex sequence."""
    d = g.distances
    adj = g.adjacency
    out: Set[Tuple[int, ...]] = set()
    stack = [(x,)]
    while stack:
        path = stack.pop()
        v = path[-1]
        if v == y:
            out.add(path)
            if len(out) > cap:
                raise GeodesicOverflow(f"more than {cap} geodesics between {x} and {y}")
            continue
        for w in adj[v]:
            if d[w, y] == d[v, y] - 1:
                stack.append(path + (w,))
    return out


def geodesic_count(g: FiniteGraph, x: int, y: int) -> int:
    """Number of shortest x-y paths by BFS layering from x."""
    n = g.vertex_count
    dist = [-1] * n
    count = [0] * n
    dist[x] = 0
    count[x] = 1
    q = deque([x])
    while q:
        u = q.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
            if dist[w] == dist[u] + 1:
                count[w] += count[u]
    return count[y]


def _layers_toward(d: np.ndarray, z: int) -> List[List[int]]:
    by_dist: Dict[int, List[int]] = {}
    for v in range(d.shape[0]):
        by_dist.setdefault(int(d[v, z]), []).append(v)
    return [by_dist[k] for k in sorted(by_dist)]


def _far_table(g: FiniteGraph) -> np.ndarray:
    """F[v, z, p] = max over v-z geodesics of the distance from p to that geodesic."""
    n = g.vertex_count
    d = g.distances.astype(np.int64)
    adj = g.adjacency
    F = np.zeros((n, n, n), dtype=np.int64)
    for z in range(n):
        for layer in _layers_toward(d, z):
            for v in layer:
                if v == z:
                    F[v, z] = d[z]
                    continue
                best = None
                for s in adj[v]:
                    if d[s, z] == d[v, z] - 1:
                        best = F[s, z] if best is None else np.maximum(best, F[s, z])
                F[v, z] = np.minimum(d[v], best)
    return F


def thinness(g: FiniteGraph) -> int:
    """Least delta making every geodesic triangle delta-thin, degenerate ones included."""
    n = g.vertex_count
    d = g.distances
    F = _far_table(g)
    # interval membership I[x, y, p]: p lies on some x-y geodesic
    I = (d[:, None, :] + d.T[None, :, :]) == d[:, :, None]
    Ft = F.transpose(1, 0, 2)  # Ft[y, z, p] = F[z, y, p]
    best = 0
    for x in range(n):
        # T[y, z, p] = min(F[x, z, p], F[z, y, p])
        T = np.minimum(F[x][None, :, :], Ft)
        T = np.where(I[x][:, None, :], T, 0)
        best = max(best, int(T.max()))
    return best


def _pareto_max(profiles: Iterable[np.ndarray]) -> List[np.ndarray]:
    uniq = {}
    for p in profiles:
        uniq.setdefault(p.tobytes(), p)
    items = sorted(uniq.values(), key=lambda a: -int(a.sum()))
    kept: List[np.ndarray] = []
    for p in items:
        if any(np.all(q >= p) for q in kept):
            continue
        kept.append(p)
    return kept


def profile_table(g: FiniteGraph) -> Dict[Tuple[int, int], List[np.ndarray]]:
    """Pointwise-maximal distance profiles of the geodesics between each pair."""
    n = g.vertex_count
    d = g.distances.astype(np.int64)
    adj = g.adjacency
    table: Dict[Tuple[int, int], List[np.ndarray]] = {}
    for z in range(n):
        for layer in _layers_toward(d, z):
            for v in layer:
                if v == z:
                    table[v, z] = [d[z].copy()]
                    continue
                cand = []
                for s in adj[v]:
                    if d[s, z] == d[v, z] - 1:
                        cand.extend(np.minimum(d[v], p) for p in table[s, z])
                table[v, z] = _pareto_max(cand)
    return table


def centeredness(g: FiniteGraph) -> int:
    """Least k such that every geodesic triangle has a vertex within k of all three sides."""
    n = g.vertex_count
    prof = profile_table(g)
    best = 0
    for x in range(n):
        for y in range(x, n):
            for z in range(y, n):
                for p1, p2, p3 in product(prof[x, y], prof[y, z], prof[z, x]):
                    k = int(np.maximum(np.maximum(p1, p2), p3).min())
                    if k > best:
                        best = k
    return best


def triangle_constants_bruteforce(g: FiniteGraph) -> Tuple[int, int]:
    """(thinness, centeredness) by literally enumerating every geodesic triangle.

    Independent of the DP routines; only usable on tiny graphs.
    """
    n = g.vertex_count
    d = g.distances
    geos = {(x, y): sorted(all_geodesics(g, x, y)) for x in range(n) for y in range(n)}

    def dist_to(p, side):
        return min(int(d[p, s]) for s in side)

    thin = 0
    cen = 0
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for a, b, c in product(geos[x, y], geos[y, z], geos[z, x]):
                    for side, o1, o2 in ((a, b, c), (b, c, a), (c, a, b)):
                        for p in side:
                            thin = max(thin, min(dist_to(p, o1), dist_to(p, o2)))
                    k = min(max(dist_to(v, a), dist_to(v, b), dist_to(v, c)) for v in range(n))
                    cen = max(cen, k)
    return thin, cen


def verify_centered_implies_thin(g: FiniteGraph) -> bool:
    return thinness(g) <= 4 * centeredness(g)


# ---------------------------------------------------------------- Bowditch

GeodesicFamily = Dict[Tuple[int, int], FrozenSet[int]]


def interval_family(g: FiniteGraph) -> GeodesicFamily:
    """L(x, y) = union of all x-y geodesics."""
    n = g.vertex_count
    d = g.distances
    fam = {}
    for x in range(n):
        for y in range(n):
            fam[x, y] = frozenset(int(p) for p in np.nonzero(d[x] + d[y] == d[x, y])[0])
    return fam


def bowditch_family_check(g: FiniteGraph, fam: GeodesicFamily, h: int) -> bool:
    """Both Bowditch conditions over every triple and every pair at distance <= 1."""
    n = g.vertex_count
    d = g.distances
    for x in range(n):
        for y in range(n):
            if (x, y) not in fam:
                raise GraphError(f"family undefined at ({x},{y})")
    # neighbourhood masks: near[S] = vertices within h of S
    masks = {}
    for key, L in fam.items():
        if L not in masks:
            masks[L] = (d[sorted(L)] <= h).any(axis=0)
    for x in range(n):
        for y in range(n):
            L = sorted(fam[x, y])
            if d[x, y] <= 1:
                if int(d[np.ix_(L, L)].max()) > h:
                    return False
            for z in range(n):
                near = masks[fam[x, z]] | masks[fam[z, y]]
                if not near[L].all():
                    return False
    return True
