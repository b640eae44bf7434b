"""Complementary components of disjoint curve systems.

A component Y of S minus some cut curves is recorded by its own punctures.
Every cut curve that bounds Y hides the punctures on its far side; we call
that far-side set a *blob*.  A curve lies essentially in Y exactly when it
misses the cuts and splits the items of Y (its punctures and blobs) into two
groups of size at least two.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, List, Optional, Sequence, Tuple

from .curves import Curve, CurveError, SurfaceSpec
from .intersection import intersection_number


class DomainError(ValueError):
    pass


def _side_bits(curves: Sequence[Curve], p: int) -> Tuple[bool, ...]:
    return tuple(p in c.inside for c in curves)


@dataclass(frozen=True)
class SubsurfaceDomain:
    surface: SurfaceSpec
    cut_curves: Tuple[Curve, ...]
    punctures: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "cut_curves", tuple(sorted(self.cut_curves)))
        object.__setattr__(self, "punctures", frozenset(self.punctures))
        if len(self.cut_curves) > 2:
            raise DomainError("at most two cut curves are supported")
        for i, a in enumerate(self.cut_curves):
            for b in self.cut_curves[i + 1:]:
                if a == b or intersection_number(a, b) != 0:
                    raise DomainError("cut curves must be distinct and disjoint")
        if self.complexity < 1:
            raise DomainError(f"component has complexity {self.complexity} < 1")

    # ---------------------------------------------------------- structure

    @cached_property
    def boundary(self) -> Tuple[Curve, ...]:
        """Cut curves that actually bound this component."""
        if not self.punctures:
            raise DomainError("component without punctures")
        p0 = next(iter(self.punctures))
        bits = _side_bits(self.cut_curves, p0)
        n = self.surface.punctures
        classes = {_side_bits(self.cut_curves, p) for p in range(1, n + 1)}
        out = []
        for j, c in enumerate(self.cut_curves):
            flipped = bits[:j] + (not bits[j],) + bits[j + 1:]
            if flipped in classes:
                out.append(c)
        return tuple(out)

    @cached_property
    def blobs(self) -> Tuple[FrozenSet[int], ...]:
        """Far-side puncture set of each boundary curve, in boundary order."""
        p0 = next(iter(self.punctures))
        out = []
        for c in self.boundary:
            a, b = c.partition()
            out.append(b if p0 in a else a)
        return tuple(out)

    @property
    def complexity(self) -> int:
        return len(self.punctures) + len(self.boundary) - 3

    @property
    def items(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset([p]) for p in sorted(self.punctures)) + self.blobs

    @property
    def is_whole(self) -> bool:
        return not self.cut_curves

    def side_of_boundary(self, c: Curve) -> bool:
        """True iff this component is on the inside of boundary curve c."""
        return next(iter(self.punctures)) in c.inside

    # ---------------------------------------------------------- membership

    def contains(self, g: Curve) -> bool:
        """g is an essential, non-peripheral curve of this component."""
        if g.surface != self.surface:
            return False
        if g in self.cut_curves:
            return False
        for c in self.cut_curves:
            if intersection_number(g, c) != 0:
                return False
        inside = g.inside
        counts = [0, 0]
        for item in self.items:
            sides = {p in inside for p in item}
            if len(sides) > 1:
                return False
            counts[1 if sides.pop() else 0] += 1
        return counts[0] >= 2 and counts[1] >= 2

    def missed_by(self, g: Curve) -> bool:
        """g can be isotoped off this component."""
        if any(intersection_number(g, c) for c in self.boundary):
            return False
        return not self.contains(g)

    def to_dict(self) -> dict:
        return {
            "surface": self.surface.name,
            "cut_curves": [c.to_dict() for c in self.cut_curves],
            "punctures": sorted(self.punctures),
            "complexity": self.complexity,
        }

    def __repr__(self):
        cuts = ",".join("".join(map(str, sorted(c.inside))) for c in self.cut_curves)
        return f"Domain({self.surface.name}, cuts=[{cuts}], punctures={sorted(self.punctures)})"


def whole_surface(surface: SurfaceSpec) -> SubsurfaceDomain:
    n = surface.require_combinatorial()
    return SubsurfaceDomain(surface, (), frozenset(range(1, n + 1)))


def components(surface: SurfaceSpec, cuts: Sequence[Curve]) -> List[Tuple[FrozenSet[int], int]]:
    """(punctures, complexity) of every component of S minus the cuts."""
    n = surface.require_combinatorial()
    cuts = list(cuts)
    groups = {}
    for p in range(1, n + 1):
        groups.setdefault(_side_bits(cuts, p), set()).add(p)
    out = []
    for bits, ps in groups.items():
        b = 0
        for j in range(len(cuts)):
            flipped = bits[:j] + (not bits[j],) + bits[j + 1:]
            if flipped in groups:
                b += 1
        out.append((frozenset(ps), len(ps) + b - 3))
    out.sort(key=lambda t: sorted(t[0]))
    return out


def complement_domains(surface: SurfaceSpec, cuts: Sequence[Curve]) -> List[SubsurfaceDomain]:
    """All components of positive complexity."""
    return [
        SubsurfaceDomain(surface, tuple(cuts), ps)
        for ps, xi in components(surface, cuts)
        if xi >= 1
    ]


def complement_domain(surface: SurfaceSpec, cuts: Sequence[Curve],
                      containing: Optional[Curve] = None) -> SubsurfaceDomain:
    """The positive-complexity component (containing ``containing`` if several)."""
    doms = complement_domains(surface, cuts)
    if containing is not None:
        doms = [d for d in doms if d.contains(containing)]
    if len(doms) != 1:
        raise DomainError(f"expected one positive-complexity component, found {len(doms)}")
    return doms[0]
