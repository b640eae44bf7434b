"""Hierarchies on complexity-two surfaces and relative 3-archies on S_{0,6}.

A hierarchy between pants decompositions alpha = (a0, a1) and beta = (b0, b1)
is a main geodesic g_0..g_n from a0 to b0 together with, for each g_i, a
link geodesic in the complement of g_i from g_{i-1} to g_{i+1}, where
g_{-1} = a1 and g_{n+1} = b1.  Reading the links in order gives a path of
pants decompositions {g_i, x}.

The relative version adds one more level.  Links exist only at main
vertices that are not domain separating; inside a link at w, every vertex z
that is not domain separating gets a nested geodesic in the complement of
w and z.  Domain-separating curves c show up in the flattened path as cone
points p_c.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..surface.curves import Curve, SurfaceError
from ..surface.domains import complement_domain, whole_surface
from ..surface.pants import PantsDecomposition, is_domain_separating, is_elementary_move
from .geodesics import EXACT, CertifiedGeodesic, Universe, certified_geodesic, weakest


class HierarchyError(ValueError):
    pass


@dataclass(frozen=True)
class ConePoint:
    """The vertex p_c of the relative pants graph."""
    curve: Curve

    def to_dict(self) -> dict:
        return {"cone": self.curve.to_dict()}


Node = Union[PantsDecomposition, ConePoint]


# ---------------------------------------------------------------- hierarchies

@dataclass(frozen=True)
class Hierarchy:
    alpha: PantsDecomposition
    beta: PantsDecomposition
    main: CertifiedGeodesic
    links: Tuple[CertifiedGeodesic, ...]

    @property
    def certificate(self) -> str:
        return weakest([self.main.certificate] + [l.certificate for l in self.links])

    def validate(self) -> None:
        self.main.validate()
        g = self.main.vertices
        n = len(g) - 1
        if len(self.links) != n + 1:
            raise AssertionError("one link per main vertex")
        for i, link in enumerate(self.links):
            link.validate()
            start = self.alpha.curves[1] if i == 0 else g[i - 1]
            end = self.beta.curves[1] if i == n else g[i + 1]
            if link.vertices[0] != start or link.vertices[-1] != end:
                raise AssertionError(f"link {i} has the wrong endpoints")
            if g[i] not in link.domain.cut_curves:
                raise AssertionError(f"link {i} lives in the wrong domain")

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha.to_dict(),
            "beta": self.beta.to_dict(),
            "main": self.main.to_dict(),
            "links": [l.to_dict() for l in self.links],
            "certificate": self.certificate,
        }


def build_hierarchy(alpha: PantsDecomposition, beta: PantsDecomposition, universe: Universe) -> Hierarchy:
    surface = alpha.surface
    if surface.complexity != 2 or beta.surface != surface:
        raise HierarchyError("hierarchies are built on complexity-two surfaces")
    a0, a1 = alpha.curves
    b0, b1 = beta.curves
    main = certified_geodesic(a0, b0, whole_surface(surface), universe)
    g = main.vertices
    n = len(g) - 1
    links = []
    for i, w in enumerate(g):
        start = a1 if i == 0 else g[i - 1]
        end = b1 if i == n else g[i + 1]
        links.append(certified_geodesic(start, end, complement_domain(surface, [w]), universe))
    return Hierarchy(alpha, beta, main, tuple(links))


def hierarchy_to_path(h: Hierarchy) -> List[PantsDecomposition]:
    """Pants decompositions {g_i, x} for x running along each link in turn."""
    out: List[PantsDecomposition] = []
    surface = h.alpha.surface
    for w, link in zip(h.main.vertices, h.links):
        for x in link.vertices:
            pd = PantsDecomposition(surface, (w, x))
            if not out or not out[-1].same_as(pd):
                out.append(pd)
    out[0] = h.alpha
    if len(out) > 1:
        out[-1] = h.beta
    return out


def path_is_valid(path: Sequence[PantsDecomposition]) -> bool:
    return all(p.same_as(q) or is_elementary_move(p, q) for p, q in zip(path, path[1:]))


def orderings(pd: PantsDecomposition) -> List[PantsDecomposition]:
    k = len(pd.curves)
    if k == 2:
        return [pd.reordered((0, 1)), pd.reordered((1, 0))]
    from itertools import permutations
    return [pd.reordered(p) for p in permutations(range(k))]


def shortest_hierarchy(alpha: PantsDecomposition, beta: PantsDecomposition,
                       universe: Universe) -> Tuple[Hierarchy, List[PantsDecomposition]]:
    """Try every labelling of both endpoints and keep the shortest flattened path."""
    best = None
    last_error = None
    for a in orderings(alpha):
        for b in orderings(beta):
            try:
                h = build_hierarchy(a, b, universe)
            except RuntimeError as exc:
                last_error = exc
                continue
            p = hierarchy_to_path(h)
            if best is None or len(p) < len(best[1]):
                best = (h, p)
    if best is None:
        raise last_error
    return best


# ---------------------------------------------------------------- relative 3-archies

@dataclass(frozen=True)
class RelativeArchy:
    alpha: PantsDecomposition
    beta: PantsDecomposition
    main: CertifiedGeodesic
    # per main vertex: the link, or None at domain-separating vertices
    links: Tuple[Optional[CertifiedGeodesic], ...]
    # per main vertex, per link vertex: the nested geodesic, or None
    nested: Tuple[Tuple[Optional[CertifiedGeodesic], ...], ...]
    path: Tuple[Node, ...]
    notes: Tuple[str, ...] = ()

    @property
    def certificate(self) -> str:
        geos = [self.main] + [l for l in self.links if l is not None]
        geos += [x for row in self.nested for x in row if x is not None]
        return weakest(g.certificate for g in geos)

    def cone_curves(self) -> List[Curve]:
        return [n.curve for n in self.path if isinstance(n, ConePoint)]

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha.to_dict(),
            "beta": self.beta.to_dict(),
            "main": self.main.to_dict(),
            "links": [None if l is None else l.to_dict() for l in self.links],
            "nested": [[None if x is None else x.to_dict() for x in row] for row in self.nested],
            "path": [node_to_dict(n) for n in self.path],
            "certificate": self.certificate,
            "notes": list(self.notes),
        }


def node_to_dict(n: Node) -> dict:
    if isinstance(n, ConePoint):
        return n.to_dict()
    return {"pants": n.to_dict()}


def _same_node(x: Node, y: Node) -> bool:
    if isinstance(x, ConePoint) or isinstance(y, ConePoint):
        return x == y
    return x.same_as(y)


def relative_edge(x: Node, y: Node) -> bool:
    """Adjacency in the relative pants graph."""
    cx, cy = isinstance(x, ConePoint), isinstance(y, ConePoint)
    if cx and cy:
        return False
    if cx:
        return y.contains(x.curve)
    if cy:
        return x.contains(y.curve)
    return is_elementary_move(x, y)


def relative_path_is_connected(path: Sequence[Node]) -> bool:
    return all(_same_node(x, y) or relative_edge(x, y) for x, y in zip(path, path[1:]))


def build_relative_3archy(alpha: PantsDecomposition, beta: PantsDecomposition,
                          universe: Universe) -> RelativeArchy:
    surface = alpha.surface
    if surface.punctures != 6 or surface.genus != 0 or beta.surface != surface:
        raise HierarchyError("relative 3-archies are built on S_{0,6}")
    a0, a1, a2 = alpha.curves
    b0, b1, b2 = beta.curves
    main = certified_geodesic(a0, b0, whole_surface(surface), universe)
    g = main.vertices
    n = len(g) - 1
    sep = {c: is_domain_separating(c) for c in g}

    links: List[Optional[CertifiedGeodesic]] = []
    for i, w in enumerate(g):
        if sep[w]:
            links.append(None)
            continue
        start = a1 if i == 0 else g[i - 1]
        end = b1 if i == n else g[i + 1]
        links.append(certified_geodesic(start, end, complement_domain(surface, [w]), universe))

    # the curve preceding g_i in the link at g_{i-1}, and the one following it in the link at g_{i+1}
    def before(i: int) -> Curve:
        if i == 0:
            return a2
        prev = links[i - 1].vertices
        return prev[-2] if len(prev) > 1 else before(i - 1)

    def after(i: int) -> Curve:
        if i == n:
            return b2
        nxt = links[i + 1].vertices
        return nxt[1] if len(nxt) > 1 else after(i + 1)

    nested: List[Tuple[Optional[CertifiedGeodesic], ...]] = []
    for i, w in enumerate(g):
        h = links[i]
        if h is None:
            nested.append(())
            continue
        row = []
        hv = h.vertices
        for j, z in enumerate(hv):
            if is_domain_separating(z):
                row.append(None)
                continue
            zm = hv[j - 1] if j > 0 else before(i)
            zp = hv[j + 1] if j < len(hv) - 1 else after(i)
            dom = complement_domain(surface, [w, z])
            row.append(certified_geodesic(zm, zp, dom, universe))
        nested.append(tuple(row))

    path: List[Node] = []

    def push(node: Node):
        if not path or not _same_node(path[-1], node):
            path.append(node)

    for i, w in enumerate(g):
        h = links[i]
        if h is None:
            push(ConePoint(w))
            continue
        for j, z in enumerate(h.vertices):
            nz = nested[i][j]
            if nz is None:
                push(ConePoint(z))
                continue
            if i > 0 and j == 0 and links[i - 1] is not None:
                # same domain and endpoints as the last nested geodesic of the previous link
                continue
            for x in nz.vertices:
                push(PantsDecomposition(surface, (w, z, x)))
    if not _same_node(path[0], alpha):
        path.insert(0, alpha)
    else:
        path[0] = alpha
    if not _same_node(path[-1], beta):
        path.append(beta)
    elif len(path) > 1:
        path[-1] = beta
    notes = ("boundary curves for nested geodesics at link ends are taken from the adjacent link",)
    return RelativeArchy(alpha, beta, main, tuple(links), tuple(nested), tuple(path), notes)


def cone_biconditional(archy: RelativeArchy) -> bool:
    """p_c appears in the path for a main or first-level link vertex c iff c is domain separating."""
    cones = set(archy.cone_curves())
    checked = list(archy.main.vertices)
    for l in archy.links:
        if l is not None:
            checked.extend(l.vertices)
    return all((c in cones) == is_domain_separating(c) for c in checked)
