"""Curve-graph geodesics inside a finite universe, with distance certificates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..surface.curves import Curve, SurfaceSpec
from ..surface.domains import SubsurfaceDomain, whole_surface
from ..surface.drawing import Drawing
from ..surface.farey import chart_for
from ..surface.intersection import intersection_number
from ..surface.pants import curve_graph_edge

EXACT = "exact"
UPPER = "upper_bound_only"


class DisconnectedError(RuntimeError):
    """Two curves have no path between them inside the universe."""

    def __init__(self, a: Curve, b: Curve, domain: SubsurfaceDomain):
        super().__init__(f"no path from {a!r} to {b!r} in {domain!r} within the universe")
        self.a, self.b, self.domain = a, b, domain


class EmptyProjection(ValueError):
    pass


def weakest(certs: Iterable[str]) -> str:
    return UPPER if any(c != EXACT for c in certs) else EXACT


class Universe:
    """A frozen finite set of curves with per-domain curve-graph adjacency."""

    def __init__(self, curves: Iterable[Curve]):
        self.curves: Tuple[Curve, ...] = tuple(sorted(set(curves)))
        if not self.curves:
            raise ValueError("empty universe")
        self.surface: SurfaceSpec = self.curves[0].surface
        self._index = frozenset(self.curves)
        self._disjoint: Optional[Dict[Curve, List[Curve]]] = None
        self._graphs: Dict[SubsurfaceDomain, Dict[Curve, List[Curve]]] = {}

    def __len__(self):
        return len(self.curves)

    def __contains__(self, c):
        return c in self._index

    def extended(self, extra: Iterable[Curve]) -> "Universe":
        extra = set(extra) - set(self.curves)
        return self if not extra else Universe(self.curves + tuple(extra))

    def disjointness(self) -> Dict[Curve, List[Curve]]:
        """Whole-universe disjointness lists, computed once."""
        if self._disjoint is None:
            adj: Dict[Curve, List[Curve]] = {c: [] for c in self.curves}
            for i, a in enumerate(self.curves):
                for b in self.curves[i + 1:]:
                    if intersection_number(a, b) == 0:
                        adj[a].append(b)
                        adj[b].append(a)
            self._disjoint = adj
        return self._disjoint

    def graph(self, domain: SubsurfaceDomain, extra: Iterable[Curve] = ()) -> Dict[Curve, List[Curve]]:
        """Curve graph of the domain on the universe curves it contains, plus ``extra``."""
        if domain.complexity < 2:
            raise ValueError("complexity-one domains use their Farey chart")
        base = self._graphs.get(domain)
        if base is None:
            dis = self.disjointness()
            verts = {c for c in self.curves if domain.contains(c)}
            base = {c: [x for x in dis[c] if x in verts] for c in sorted(verts)}
            self._graphs[domain] = base
        extra = sorted(set(extra) - set(base))
        extra = [c for c in extra if domain.contains(c)]
        if not extra:
            return base
        adj = {c: list(v) for c, v in base.items()}
        for c in extra:
            adj[c] = []
        for c in extra:
            for x in list(adj):
                if x != c and intersection_number(c, x) == 0:
                    if x not in adj[c]:
                        adj[c].append(x)
                    if c not in adj[x]:
                        adj[x].append(c)
        return adj


def _bfs(adj: Dict[Curve, List[Curve]], src: Curve) -> Dict[Curve, int]:
    dist = {src: 0}
    q = deque([src])
    while q:
        u = q.popleft()
        for v in adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def fills(a: Curve, b: Curve, domain: Optional[SubsurfaceDomain] = None) -> bool:
    """Every essential curve of the domain meets a or b.

    The complementary faces of a union b are disks; the pair fills iff no
    face holds two or more of the domain's items (punctures and blobs).
    """
    if a == b or intersection_number(a, b) == 0:
        return False
    if domain is None:
        domain = whole_surface(a.surface)
    faces = Drawing([a, b]).puncture_faces()
    count: Dict[object, int] = {}
    for item in domain.items:
        fs = {faces[p] for p in item}
        if len(fs) != 1:
            raise RuntimeError("a blob is split by curves of its domain")
        f = fs.pop()
        count[f] = count.get(f, 0) + 1
    return max(count.values()) <= 1


def certify(a: Curve, b: Curve, length: int, domain: SubsurfaceDomain) -> str:
    if length <= 1:
        return EXACT
    if length == 2 and intersection_number(a, b) > 0:
        return EXACT
    if length == 3 and fills(a, b, domain):
        return EXACT
    return UPPER


@dataclass(frozen=True)
class CertifiedGeodesic:
    domain: SubsurfaceDomain
    vertices: Tuple[Curve, ...]
    certificate: str

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def validate(self) -> None:
        for c in self.vertices:
            if not self.domain.contains(c):
                raise AssertionError(f"{c!r} is not in {self.domain!r}")
        for x, y in zip(self.vertices, self.vertices[1:]):
            if not curve_graph_edge(x, y, self.domain.complexity):
                raise AssertionError("consecutive geodesic vertices are not adjacent")

    def to_dict(self) -> dict:
        return {
            "domain": self.domain.to_dict(),
            "vertices": [c.to_dict() for c in self.vertices],
            "certificate": self.certificate,
            "length": self.length,
        }


def certified_geodesic(a: Curve, b: Curve, domain: SubsurfaceDomain,
                       universe: Universe) -> CertifiedGeodesic:
    """Lexicographically least shortest path from a to b in the domain's curve graph.

    Complexity-one domains use the exact Farey chart.  Larger domains search
    the universe (plus the endpoints) and certify small distances.
    """
    for c in (a, b):
        if not domain.contains(c):
            raise ValueError(f"{c!r} is not a curve of {domain!r}")
    if a == b:
        return CertifiedGeodesic(domain, (a,), EXACT)
    if domain.complexity == 1:
        return CertifiedGeodesic(domain, tuple(chart_for(domain).geodesic(a, b)), EXACT)
    adj = universe.graph(domain, (a, b))
    db = _bfs(adj, b)
    if a not in db:
        raise DisconnectedError(a, b, domain)
    path = [a]
    while path[-1] != b:
        cur = path[-1]
        path.append(min(v for v in adj[cur] if db.get(v) == db[cur] - 1))
    return CertifiedGeodesic(domain, tuple(path), certify(a, b, len(path) - 1, domain))


def curve_distance(a: Curve, b: Curve, domain: SubsurfaceDomain, universe: Optional[Universe]) -> Tuple[int, str]:
    if a == b:
        return 0, EXACT
    if domain.complexity == 1:
        return chart_for(domain).distance(a, b), EXACT
    if universe is None:
        raise ValueError("a universe is needed for domains of complexity >= 2")
    g = certified_geodesic(a, b, domain, universe)
    return g.length, g.certificate


def projection_set(curves: Iterable[Curve], y: SubsurfaceDomain) -> FrozenSet[Curve]:
    from .projection import subsurface_projection
    out = set()
    for c in curves:
        out |= subsurface_projection(c, y)
    return frozenset(out)


def set_diameter(curves: Sequence[Curve], y: SubsurfaceDomain,
                 universe: Optional[Universe] = None) -> Tuple[int, str]:
    curves = sorted(set(curves))
    best, certs = 0, []
    for i, x in enumerate(curves):
        for z in curves[i + 1:]:
            d, cert = curve_distance(x, z, y, universe)
            best = max(best, d)
            certs.append(cert)
    return best, weakest(certs)


def subsurface_distance(A: Iterable[Curve], B: Iterable[Curve], y: SubsurfaceDomain,
                        universe: Optional[Universe] = None) -> Tuple[int, str]:
    """Largest distance in C(Y) between a projection of A and a projection of B."""
    pa, pb = projection_set(A, y), projection_set(B, y)
    if not pa or not pb:
        raise EmptyProjection("a projection to the domain is empty")
    best, certs = 0, []
    for x in sorted(pa):
        for z in sorted(pb):
            d, cert = curve_distance(x, z, y, universe)
            best = max(best, d)
            certs.append(cert)
    return best, weakest(certs)
