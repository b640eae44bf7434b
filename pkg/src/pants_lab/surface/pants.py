"""Pants decompositions, curve-graph edges and elementary moves."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Set, Tuple

from .curves import Curve, SurfaceError, SurfaceSpec
from .intersection import intersection_number

# minimal positive intersection number in a complexity-one domain
MIN_POSITIVE_SPHERE = 2
MIN_POSITIVE_TORUS = 1


class PantsError(ValueError):
    pass


def curve_graph_edge(a: Curve, b: Curve, domain_complexity: int, torus_type: bool = False) -> bool:
    """Adjacency in the curve graph of a domain of the given complexity."""
    if a == b:
        raise PantsError("curve_graph_edge needs two distinct curves")
    i = intersection_number(a, b)
    if domain_complexity >= 2:
        return i == 0
    if domain_complexity == 1:
        return i == (MIN_POSITIVE_TORUS if torus_type else MIN_POSITIVE_SPHERE)
    raise PantsError("domain complexity must be positive")


def is_domain_separating(c: Curve) -> bool:
    """Both sides of c have positive complexity."""
    xi = c.surface.complexity
    if xi <= 2:
        raise SurfaceError("domain separation is only meaningful for complexity >= 3")
    a, b = c.side_sizes()
    # each side: its punctures plus one boundary circle
    return (a + 1 - 3) >= 1 and (b + 1 - 3) >= 1


@dataclass(frozen=True)
class PantsDecomposition:
    surface: SurfaceSpec
    curves: Tuple[Curve, ...]

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))
        if len(self.curves) != self.surface.complexity:
            raise PantsError(f"need {self.surface.complexity} curves, got {len(self.curves)}")
        if len(set(self.curves)) != len(self.curves):
            raise PantsError("repeated curve")
        for c in self.curves:
            if c.surface != self.surface:
                raise PantsError("curve on a different surface")
        for i, a in enumerate(self.curves):
            for b in self.curves[i + 1:]:
                if intersection_number(a, b) != 0:
                    raise PantsError("curves of a pants decomposition must be disjoint")

    @property
    def key(self) -> FrozenSet[Curve]:
        return frozenset(self.curves)

    def same_as(self, other: "PantsDecomposition") -> bool:
        return self.key == other.key

    def replace(self, slot: int, c: Curve) -> "PantsDecomposition":
        cs = list(self.curves)
        cs[slot] = c
        return PantsDecomposition(self.surface, tuple(cs))

    def reordered(self, order: Sequence[int]) -> "PantsDecomposition":
        return PantsDecomposition(self.surface, tuple(self.curves[i] for i in order))

    def contains(self, c: Curve) -> bool:
        return c in self.curves

    def to_dict(self) -> dict:
        return {"surface": self.surface.name, "curves": [c.to_dict() for c in self.curves]}

    @classmethod
    def from_dict(cls, obj: dict) -> "PantsDecomposition":
        surface = SurfaceSpec.from_name(obj["surface"])
        return cls(surface, tuple(Curve.from_dict({"surface": obj["surface"], "coords": c["coords"]})
                                  for c in obj["curves"]))

    def sort_key(self):
        return tuple(sorted(c.coords for c in self.curves))


def is_elementary_move(p: PantsDecomposition, q: PantsDecomposition) -> bool:
    """p and q share all but one curve, and the swapped pair meets minimally."""
    a = p.key - q.key
    b = q.key - p.key
    if len(a) != 1 or len(b) != 1:
        return False
    return intersection_number(next(iter(a)), next(iter(b))) == MIN_POSITIVE_SPHERE


def elementary_move_neighbors(pd: PantsDecomposition, universe: Iterable[Curve]) -> List[PantsDecomposition]:
    """Pants decompositions one elementary move away, using curves from ``universe``."""
    universe = sorted(set(universe))
    out: List[PantsDecomposition] = []
    seen: Set[FrozenSet[Curve]] = set()
    for slot, c in enumerate(pd.curves):
        rest = [x for j, x in enumerate(pd.curves) if j != slot]
        for cand in universe:
            if cand in pd.curves:
                continue
            if any(intersection_number(cand, r) for r in rest):
                continue
            if intersection_number(cand, c) != MIN_POSITIVE_SPHERE:
                continue
            q = pd.replace(slot, cand)
            if q.key not in seen:
                seen.add(q.key)
                out.append(q)
    return out
