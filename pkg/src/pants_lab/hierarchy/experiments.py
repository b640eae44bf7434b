"""Empirical audits: bounded geodesic images and centered hierarchy triangles."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..surface.curves import Curve, SurfaceSpec
from ..surface.domains import SubsurfaceDomain, complement_domain, whole_surface
from ..surface.intersection import intersection_number
from ..surface.pants import MIN_POSITIVE_SPHERE, PantsDecomposition
from .builder import (build_relative_3archy, cone_biconditional, path_is_valid,
                      relative_path_is_connected, shortest_hierarchy)
from .geodesics import (EXACT, UPPER, CertifiedGeodesic, DisconnectedError, EmptyProjection, Universe,
                        certified_geodesic, set_diameter, weakest)
from .projection import subsurface_projection

BGIT_BOUND = 100
CENTER_BOUND = 8900


# ---------------------------------------------------------------- bounded geodesic images

def bgit_measure(g: CertifiedGeodesic, y: SubsurfaceDomain,
                 universe: Optional[Universe] = None) -> Tuple[int, str]:
    """diam_Y of the union of the projections of g's vertices, with its certificate."""
    proj = set()
    for v in g.vertices:
        p = subsurface_projection(v, y)
        if not p:
            raise EmptyProjection(f"{v!r} misses {y!r}")
        proj |= p
    return set_diameter(sorted(proj), y, universe)


def bgit_audit(g: CertifiedGeodesic, y: SubsurfaceDomain, universe: Optional[Universe] = None) -> int:
    return bgit_measure(g, y, universe)[0]


@dataclass
class BgitSample:
    index: int
    geodesic: CertifiedGeodesic
    domain: SubsurfaceDomain
    diameter: int
    certificate: str

    @property
    def passes(self) -> bool:
        return self.diameter <= BGIT_BOUND

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "length": self.geodesic.length,
            "geodesic_certificate": self.geodesic.certificate,
            "domain": self.domain.to_dict(),
            "diameter": self.diameter,
            "certificate": self.certificate,
            "passes": self.passes,
        }


def bgit_one(universe: Universe, seed, index: int, max_tries: int = 10_000) -> BgitSample:
    """Sample number ``index``: a certified-exact geodesic audited in a domain every vertex meets."""
    rng = random.Random(f"bgit:{seed}:{index}")
    surface = universe.surface
    whole = whole_surface(surface)
    curves = list(universe.curves)
    for _ in range(max_tries):
        a, b = rng.sample(curves, 2)
        try:
            g = certified_geodesic(a, b, whole, universe)
        except DisconnectedError:
            continue
        if g.certificate != EXACT:
            continue
        v = rng.choice(curves)
        if v in g.vertices:
            continue
        doms = _complements(surface, v)
        y = doms[rng.randrange(len(doms))]
        try:
            diam, cert = bgit_measure(g, y, universe)
        except EmptyProjection:
            continue
        return BgitSample(index, g, y, diam, cert)
    raise RuntimeError(f"no BGIT sample found for index {index}")


def sample_bgit(universe: Universe, count: int, seed, workers: int = 1) -> List[BgitSample]:
    return run_batch(bgit_one, universe, count, seed, workers)


def _complements(surface: SurfaceSpec, v: Curve) -> List[SubsurfaceDomain]:
    from ..surface.domains import complement_domains
    return complement_domains(surface, [v])


# ---------------------------------------------------------------- pants graph over a universe

class PantsGraph:
    """Pants decompositions of a complexity-two surface built from a universe plus extra curves."""

    def __init__(self, universe: Universe, extra: Iterable[Curve] = ()):
        self.surface = universe.surface
        if self.surface.complexity != 2:
            raise ValueError("pants graphs are built for complexity-two surfaces")
        base = universe.disjointness()
        extra = sorted(set(extra) - set(base))
        disjoint: Dict[Curve, List[Curve]] = {c: list(v) for c, v in base.items()}
        for c in extra:
            disjoint[c] = []
        for i, c in enumerate(extra):
            for x in list(base) + extra[:i]:
                if intersection_number(c, x) == 0:
                    disjoint[c].append(x)
                    disjoint[x].append(c)
        self.curves = sorted(disjoint)
        self.disjoint = disjoint
        self.nodes: List[FrozenSet[Curve]] = sorted(
            {frozenset((a, b)) for a in self.curves for b in disjoint[a]},
            key=lambda s: tuple(sorted(c.coords for c in s)),
        )
        self.adj: Dict[FrozenSet[Curve], List[FrozenSet[Curve]]] = {}
        for node in self.nodes:
            a, b = sorted(node)
            nbrs = []
            for keep, drop in ((a, b), (b, a)):
                for c in disjoint[keep]:
                    if c != drop and intersection_number(c, drop) == MIN_POSITIVE_SPHERE:
                        nbrs.append(frozenset((keep, c)))
            self.adj[node] = nbrs

    def bfs(self, sources: Iterable[FrozenSet[Curve]]) -> Dict[FrozenSet[Curve], int]:
        dist = {}
        q = deque()
        for s in sources:
            if s not in dist:
                dist[s] = 0
                q.append(s)
        while q:
            u = q.popleft()
            for v in self.adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    q.append(v)
        return dist


@dataclass
class TriangleRecord:
    index: int
    corners: Tuple[PantsDecomposition, PantsDecomposition, PantsDecomposition]
    side_lengths: Tuple[int, int, int]
    main_lengths: Tuple[int, int, int]
    measured_k: int
    center: Optional[PantsDecomposition]
    certificate: str
    paths_valid: bool
    bound: int = CENTER_BOUND

    @property
    def passes(self) -> bool:
        return self.measured_k <= self.bound and self.paths_valid

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "corners": [c.to_dict() for c in self.corners],
            "side_lengths": list(self.side_lengths),
            "main_lengths": list(self.main_lengths),
            "measured_k": self.measured_k,
            "bound": self.bound,
            "center": None if self.center is None else self.center.to_dict(),
            "certificate": self.certificate,
            "paths_valid": self.paths_valid,
            "passes": self.passes,
        }


def triangle_sides(alpha, beta, gamma, universe: Universe):
    """The three hierarchies (shortest over labellings) and their flattened paths."""
    out = []
    for x, y in ((alpha, beta), (beta, gamma), (gamma, alpha)):
        out.append(shortest_hierarchy(x, y, universe))
    return out


def triangle_experiment(alpha: PantsDecomposition, beta: PantsDecomposition, gamma: PantsDecomposition,
                        universe: Universe, index: int = 0, sides=None) -> TriangleRecord:
    """Smallest k such that one universe pants decomposition is within k of all three hierarchy paths."""
    if sides is None:
        sides = triangle_sides(alpha, beta, gamma, universe)
    paths = [p for _, p in sides]
    valid = all(path_is_valid(p) for p in paths)
    extra = {c for p in paths for pd in p for c in pd.curves}
    graph = PantsGraph(universe, extra)
    dists = [graph.bfs(pd.key for pd in p) for p in paths]
    best, center = None, None
    for node in graph.nodes:
        if all(node in d for d in dists):
            k = max(d[node] for d in dists)
            if best is None or k < best:
                best, center = k, node
    if best is None:
        raise DisconnectedError(alpha.curves[0], gamma.curves[0], whole_surface(alpha.surface))
    cpd = PantsDecomposition(alpha.surface, tuple(sorted(center)))
    # a center on all three sides is an exact zero; otherwise only an upper bound
    cert = EXACT if best == 0 else UPPER
    return TriangleRecord(index, (alpha, beta, gamma), tuple(len(p) - 1 for p in paths),
                          tuple(h.main.length for h, _ in sides), best, cpd, cert, valid)


def random_pants(universe: Universe, rng: random.Random) -> PantsDecomposition:
    """A random pants decomposition whose curves all lie in the universe."""
    dis = universe.disjointness()
    curves = universe.curves
    k = universe.surface.complexity
    while True:
        chosen = [rng.choice(curves)]
        while len(chosen) < k:
            common = [c for c in dis[chosen[0]] if all(c in set(dis[x]) for x in chosen) and c not in chosen]
            if not common:
                break
            chosen.append(rng.choice(common))
        if len(chosen) == k:
            return PantsDecomposition(universe.surface, tuple(chosen))


def triangle_one(universe: Universe, seed, index: int, max_main: int = 3,
                 max_tries: int = 10_000) -> TriangleRecord:
    """Sample number ``index``: a triangle whose main geodesics are exact and of length <= max_main."""
    rng = random.Random(f"triangle:{seed}:{index}")
    for _ in range(max_tries):
        corners = [random_pants(universe, rng) for _ in range(3)]
        try:
            sides = triangle_sides(*corners, universe)
        except DisconnectedError:
            continue
        mains = [h.main for h, _ in sides]
        if any(m.length > max_main or m.certificate != EXACT for m in mains):
            continue
        return triangle_experiment(*corners, universe, index=index, sides=sides)
    raise RuntimeError(f"no triangle found for index {index}")


def sample_triangles(universe: Universe, count: int, seed, workers: int = 1) -> List[TriangleRecord]:
    return run_batch(triangle_one, universe, count, seed, workers)


# ---------------------------------------------------------------- relative archies

@dataclass
class ArchyRecord:
    index: int
    main_length: int
    path_length: int
    cone_points: int
    biconditional: bool
    connected: bool
    certificate: str

    @property
    def passes(self) -> bool:
        return self.biconditional and self.connected

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "main_length": self.main_length,
            "path_length": self.path_length,
            "cone_points": self.cone_points,
            "biconditional": self.biconditional,
            "connected": self.connected,
            "certificate": self.certificate,
            "passes": self.passes,
        }


def archy_one(universe: Universe, seed, index: int, max_tries: int = 10_000) -> ArchyRecord:
    rng = random.Random(f"archy:{seed}:{index}")
    for _ in range(max_tries):
        alpha, beta = random_pants(universe, rng), random_pants(universe, rng)
        try:
            ar = build_relative_3archy(alpha, beta, universe)
        except DisconnectedError:
            continue
        return ArchyRecord(index, ar.main.length, len(ar.path) - 1, len(ar.cone_curves()),
                           cone_biconditional(ar), relative_path_is_connected(ar.path), ar.certificate)
    raise RuntimeError(f"no archy built for index {index}")


def sample_archies(universe: Universe, count: int, seed, workers: int = 1) -> List[ArchyRecord]:
    return run_batch(archy_one, universe, count, seed, workers)


# ---------------------------------------------------------------- batches

def _batch_worker(args):
    fn, curves, seed, indices = args
    universe = Universe(curves)
    return [fn(universe, seed, i) for i in indices]


def run_batch(fn, universe: Universe, count: int, seed, workers: int = 1) -> list:
    """fn(universe, seed, i) for i < count, merged in index order whatever the schedule."""
    if workers <= 1 or count < 2:
        return [fn(universe, seed, i) for i in range(count)]
    from concurrent.futures import ProcessPoolExecutor
    chunks = [list(range(w, count, workers)) for w in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_batch_worker, [(fn, universe.curves, seed, ch) for ch in chunks if ch])
        results = [r for part in parts for r in part]
    return sorted(results, key=lambda r: r.index)
