"""Finite windows into the curve graph: orbit balls and their cache files."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .braids import GeneratorWord, apply_generator
from .curves import Curve, SurfaceSpec
from .intersection import intersection_number

BALL_FORMAT = "PGL1"
BALL_VERSION = 1
DEFAULT_CAP = 10**5


class BallOverflow(RuntimeError):
    pass


class CacheError(ValueError):
    pass


class CacheVersionError(CacheError):
    pass


@dataclass(frozen=True)
class CurveBall:
    surface: SurfaceSpec
    curves: Tuple[Curve, ...]
    adjacency: Tuple[Tuple[int, int], ...]
    meta: Tuple[Tuple[str, object], ...] = ()

    def index(self) -> Dict[Curve, int]:
        return {c: i for i, c in enumerate(self.curves)}

    def neighbors(self, c: Curve) -> List[Curve]:
        idx = self.index()
        i = idx[c]
        out = []
        for a, b in self.adjacency:
            if a == i:
                out.append(self.curves[b])
            elif b == i:
                out.append(self.curves[a])
        return sorted(out)

    def to_json(self) -> str:
        obj = {
            "format": BALL_FORMAT,
            "version": BALL_VERSION,
            "surface": self.surface.name,
            "meta": {k: v for k, v in self.meta},
            "curves": [list(c.coords) for c in self.curves],
            "adjacency": [list(e) for e in self.adjacency],
        }
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "CurveBall":
        try:
            obj = json.loads(text)
        except ValueError as exc:
            raise CacheError(f"corrupt ball cache: {exc}") from exc
        if not isinstance(obj, dict) or obj.get("format") != BALL_FORMAT:
            raise CacheError("not a PGL1 ball cache")
        if obj.get("version") != BALL_VERSION:
            raise CacheVersionError(f"ball cache version {obj.get('version')!r}, expected {BALL_VERSION}")
        try:
            surface = SurfaceSpec.from_name(obj["surface"])
            curves = tuple(Curve(surface, tuple(c)) for c in obj["curves"])
            adjacency = tuple(tuple(e) for e in obj["adjacency"])
            meta = tuple(sorted(obj.get("meta", {}).items()))
        except (KeyError, TypeError, ValueError) as exc:
            raise CacheError(f"corrupt ball cache: {exc}") from exc
        for a, b in adjacency:
            if not (0 <= a < len(curves) and 0 <= b < len(curves)):
                raise CacheError("adjacency index out of range")
        return cls(surface, curves, adjacency, meta)


def write_ball(path, ball: CurveBall) -> None:
    Path(path).write_text(ball.to_json())


def read_ball(path) -> CurveBall:
    return CurveBall.from_json(Path(path).read_text())


def _expand(args):
    surface_name, words, gens = args
    surface = SurfaceSpec.from_name(surface_name)
    out = []
    for w in words:
        c = Curve(surface, tuple(w))
        for g in gens:
            out.append(apply_generator(GeneratorWord((g,)), c).coords)
    return out


def orbit(seeds: Sequence[Curve], word_bound: int, cap: int = DEFAULT_CAP,
          workers: int = 1) -> List[Curve]:
    """Every image of the seeds under half-twist words of length <= word_bound."""
    if not seeds:
        return []
    surface = seeds[0].surface
    n = surface.require_combinatorial()
    gens = [(g, e) for g in range(1, n) for e in (1, -1)]
    seen = set(seeds)
    frontier = sorted(seen)
    for _ in range(word_bound):
        if workers > 1 and len(frontier) > 64:
            chunks = [frontier[i::workers] for i in range(workers)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = pool.map(_expand, [(surface.name, [c.coords for c in ch], gens) for ch in chunks])
                images = [Curve(surface, co) for part in parts for co in part]
        else:
            images = [apply_generator(GeneratorWord((g,)), c) for c in frontier for g in gens]
        new = sorted(set(images) - seen)
        seen.update(new)
        if len(seen) > cap:
            raise BallOverflow(f"orbit exceeded {cap} curves")
        frontier = new
    return sorted(seen)


def disjointness_edges(curves: Sequence[Curve]) -> Tuple[Tuple[int, int], ...]:
    out = []
    for i, a in enumerate(curves):
        for j in range(i + 1, len(curves)):
            if intersection_number(a, curves[j]) == 0:
                out.append((i, j))
    return tuple(out)


def enumerate_curve_ball(seed: Curve, coord_bound: int, word_bound: int,
                         cap: int = DEFAULT_CAP, workers: int = 1) -> CurveBall:
    """Orbit of ``seed`` under words of length <= word_bound, cut to max coordinate <= coord_bound."""
    if coord_bound < 1 or word_bound < 0:
        raise ValueError("coord_bound must be >= 1 and word_bound >= 0")
    curves = [c for c in orbit([seed], word_bound, cap, workers) if max(c.coords) <= coord_bound]
    if seed not in curves:
        curves.append(seed)
    curves = tuple(sorted(curves))
    meta = (("coord_bound", coord_bound), ("seed", list(seed.coords)), ("word_bound", word_bound))
    return CurveBall(seed.surface, curves, disjointness_edges(curves), meta)


def standard_seeds(surface: SurfaceSpec) -> List[Curve]:
    """One round curve per possible number of enclosed finite punctures.

    Half-twists fix the puncture at infinity, so a single seed only reaches
    curves enclosing the same number of finite punctures.
    """
    from .curves import standard_curve
    n = surface.require_combinatorial()
    return [standard_curve(surface, range(1, k + 1)) for k in range(2, n - 1)]


def universe_curves(surface: SurfaceSpec, word_bound: int, coord_bound: Optional[int] = None,
                    cap: int = DEFAULT_CAP, workers: int = 1) -> List[Curve]:
    curves = orbit(standard_seeds(surface), word_bound, cap, workers)
    if coord_bound is not None:
        curves = [c for c in curves if max(c.coords) <= coord_bound]
    return curves
