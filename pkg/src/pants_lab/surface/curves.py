"""Curves on the punctured spheres S_{0,5} and S_{0,6}.

Reference picture.  Punctures p_1..p_{n-1} sit on the real axis at x = 1..n-1
and p_n is the point at infinity.  The real axis is cut into n *axis edges*

    e_0 = (oo, p_1),  e_k = (p_k, p_{k+1}) for 1 <= k <= n-2,  e_{n-1} = (p_{n-1}, oo)

and each half-plane is fanned from infinity by the vertical rays
u_k (upper) and l_k (lower) from p_k, 2 <= k <= n-2.  That gives an ideal
triangulation with 3n-6 edges; the coordinate vector of a curve lists its
minimal crossing numbers with

    [e_0, ..., e_{n-1}, u_2, ..., u_{n-2}, l_2, ..., l_{n-2}].

Working representation.  A curve in minimal position crosses the axis in a
cyclic sequence of axis edges alternating down/up; between consecutive
crossings it runs through a half-plane as a chord, which is determined up to
isotopy by its two endpoints.  We store that sequence (the *t-word*) with
position 0 a downward crossing.  Backtracking letters (the same edge twice
in a row) are exactly the bigons with the axis, so the reduced cyclic word is
the minimal-position picture.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

SUPPORTED_PUNCTURES = (5, 6)


class SurfaceError(ValueError):
    pass


class CurveError(ValueError):
    """Coordinates do not describe one essential simple closed curve."""


def complexity(genus: int, punctures: int) -> int:
    xi = 3 * genus + punctures - 3
    if genus < 0 or punctures < 0:
        raise SurfaceError("genus and punctures must be nonnegative")
    if xi < 1:
        raise SurfaceError(f"S_{{{genus},{punctures}}} has complexity {xi} < 1")
    return xi


@dataclass(frozen=True, order=True)
class SurfaceSpec:
    genus: int
    punctures: int

    def __post_init__(self):
        complexity(self.genus, self.punctures)

    @property
    def complexity(self) -> int:
        return 3 * self.genus + self.punctures - 3

    @property
    def name(self) -> str:
        return f"s{self.genus}{self.punctures}"

    def require_combinatorial(self) -> int:
        if self.genus != 0 or self.punctures not in SUPPORTED_PUNCTURES:
            raise SurfaceError(f"combinatorics only supports S_{{0,5}} and S_{{0,6}}, not {self.name}")
        return self.punctures

    @property
    def n_coords(self) -> int:
        return 3 * self.punctures - 6

    @classmethod
    def from_name(cls, name: str) -> "SurfaceSpec":
        table = {"s05": cls(0, 5), "s06": cls(0, 6)}
        try:
            return table[name.lower()]
        except KeyError:
            raise SurfaceError(f"unknown surface id {name!r}; expected s05 or s06") from None


S05 = SurfaceSpec(0, 5)
S06 = SurfaceSpec(0, 6)


# ---------------------------------------------------------------- triangulation

INF = "inf"


@lru_cache(maxsize=None)
def triangulation(n: int):
    """Edges (as (start, end) vertex pairs) and triangles of the reference triangulation.

    Vertices are puncture numbers 1..n-1 and ``INF``.  Each triangle is a
    tuple of three (edge index, vertex, vertex) sides listed around it.
    """
    ends = []
    ends.append((INF, 1))
    for k in range(1, n - 1):
        ends.append((k, k + 1))
    ends.append((n - 1, INF))
    for _half in range(2):
        for k in range(2, n - 1):
            ends.append((k, INF))

    def ray(half, k):
        if k == 1:
            return 0
        if k == n - 1:
            return n - 1
        return n + half * (n - 3) + (k - 2)

    triangles = []
    for half in range(2):
        for k in range(1, n - 1):
            triangles.append((ray(half, k), k, ray(half, k + 1)))
    return tuple(ends), tuple(triangles)


def axis_edge_count(n: int) -> int:
    return n


# ---------------------------------------------------------------- t-words

def cyclic_reduce(letters: Sequence[Tuple[int, bool]]) -> List[Tuple[int, bool]]:
    """Cancel backtracks in a cyclic sequence of (edge, is_down) crossings."""
    out: List[Tuple[int, bool]] = []
    for lt in letters:
        if out and out[-1][0] == lt[0]:
            if out[-1][1] == lt[1]:
                raise CurveError("consecutive crossings in the same direction")
            out.pop()
        else:
            out.append(lt)
    # cyclic wrap
    i, j = 0, len(out) - 1
    while j > i and out[i][0] == out[j][0]:
        i += 1
        j -= 1
    return out[i:j + 1]


def normalize_word(letters: Sequence[Tuple[int, bool]]) -> Tuple[int, ...]:
    """Reduce and rotate so that position 0 is a downward crossing."""
    red = cyclic_reduce(letters)
    if not red:
        return ()
    for a, b in zip(red, red[1:] + red[:1]):
        if a[1] == b[1]:
            raise CurveError("crossings do not alternate between half-planes")
    start = 0 if red[0][1] else 1
    red = red[start:] + red[:start]
    return tuple(e for e, _ in red)


def word_letters(word: Sequence[int]) -> List[Tuple[int, bool]]:
    return [(e, k % 2 == 0) for k, e in enumerate(word)]


def reverse_word(word: Sequence[int]) -> Tuple[int, ...]:
    return tuple(reversed(word))


def canonical_rotation(word: Sequence[int]) -> Tuple[int, ...]:
    """Lexicographically least even rotation of the word or its reverse."""
    best = None
    for w in (tuple(word), reverse_word(word)):
        for r in range(0, len(w), 2):
            cand = w[r:] + w[:r]
            if best is None or cand < best:
                best = cand
    return best or ()


def chords(word: Sequence[int]):
    """Yield (half, a, b): half 0 lower, 1 upper, chord from edge a to edge b."""
    m = len(word)
    for k in range(m):
        yield (0 if k % 2 == 0 else 1), word[k], word[(k + 1) % m]


def word_to_coords(word: Sequence[int], n: int) -> Tuple[int, ...]:
    coords = [0] * (3 * n - 6)
    for e in word:
        coords[e] += 1
    for half, a, b in chords(word):
        lo, hi = min(a, b), max(a, b)
        for k in range(max(lo + 1, 2), min(hi, n - 2) + 1):
            coords[n + (1 - half) * (n - 3) + (k - 2)] += 1
    return tuple(coords)


def inside_set(word: Sequence[int], n: int) -> FrozenSet[int]:
    """Punctures separated from p_n (infinity) by the curve."""
    parity = [0] * n
    for half, a, b in chords(word):
        if half == 1:
            lo, hi = min(a, b), max(a, b)
            for j in range(lo + 1, hi + 1):
                parity[j] ^= 1
    return frozenset(j for j in range(1, n) if parity[j])


def is_peripheral_or_trivial(word: Sequence[int], n: int) -> bool:
    if len(word) == 0:
        return True
    k = len(inside_set(word, n))
    return k <= 1 or k >= n - 1


# ---------------------------------------------------------------- tracing

def _validate_coords(coords: Sequence[int], n: int) -> None:
    if len(coords) != 3 * n - 6:
        raise CurveError(f"expected {3 * n - 6} coordinates, got {len(coords)}")
    if any((not isinstance(c, int)) or c < 0 for c in coords):
        raise CurveError("coordinates must be nonnegative integers")
    for x, y, z in _triangle_edges(n):
        s = coords[x] + coords[y] + coords[z]
        if s % 2:
            raise CurveError("odd coordinate sum around a triangle")
        if coords[x] > coords[y] + coords[z] or coords[y] > coords[x] + coords[z] or coords[z] > coords[x] + coords[y]:
            raise CurveError("triangle inequality violated")


@lru_cache(maxsize=None)
def _triangle_edges(n: int):
    _, tris = triangulation(n)
    return tuple((l, b, r) for l, b, r in tris)


def trace(coords: Sequence[int], n: int):
    """Follow the normal curve given by ``coords``.

    Returns a list of components; each component is a list of
    (axis edge, is_down, index along the edge from its left end) crossings
    starting with a downward crossing.
    """
    _validate_coords(coords, n)
    ends, _ = triangulation(n)
    tris = _triangle_edges(n)
    # for each point (edge, idx) the two neighbours (one per adjacent triangle)
    link: Dict[Tuple[int, int], List[Tuple[int, int, int]]] = {}

    def from_vertex(e, v, j):
        s, t = ends[e]
        return j if s == v else coords[e] - 1 - j

    for t_id, (L, B, R) in enumerate(tris):
        s_b, t_b = ends[B]  # p_k, p_{k+1}
        vertex_sides = ((s_b, L, B), (t_b, B, R), (INF, L, R))
        side_of = {L: None, B: None, R: None}
        for v, e1, e2 in vertex_sides:
            opp = ({L, B, R} - {e1, e2}).pop()
            cnt = (coords[e1] + coords[e2] - coords[opp]) // 2
            for j in range(cnt):
                p1 = (e1, from_vertex(e1, v, j))
                p2 = (e2, from_vertex(e2, v, j))
                link.setdefault(p1, []).append((p2[0], p2[1], t_id))
                link.setdefault(p2, []).append((p1[0], p1[1], t_id))
    half_of_tri = lambda t_id: 1 if t_id < n - 2 else 0  # 1 upper, 0 lower
    seen = set()
    comps = []
    for e in range(n):
        for idx in range(coords[e]):
            if (e, idx) in seen:
                continue
            # start heading downward: leave via the lower triangle
            comp = []
            cur = (e, idx)
            nbrs = link[cur]
            nxt = [x for x in nbrs if half_of_tri(x[2]) == 0][0]
            came_from_tri = None
            while True:
                seen.add(cur)
                if cur[0] < n:
                    comp.append(cur)
                # choose the neighbour not through the triangle we came from
                cand = link[cur]
                if came_from_tri is None:
                    step = nxt
                else:
                    step = cand[0] if cand[1][2] == came_from_tri else cand[1]
                    if cand[0][2] == cand[1][2]:
                        raise CurveError("degenerate normal arc")
                cur = (step[0], step[1])
                came_from_tri = step[2]
                if cur == (e, idx):
                    break
            comps.append([(pe, k % 2 == 0, pi) for k, (pe, pi) in enumerate(comp)])
    return comps


def coords_to_word(coords: Sequence[int], n: int) -> Tuple[int, ...]:
    comps = trace(coords, n)
    if len(comps) != 1:
        raise CurveError(f"coordinates describe {len(comps)} components, expected 1")
    word = tuple(e for e, _, _ in comps[0])
    if word_to_coords(word, n) != tuple(coords):
        raise CurveError("coordinates are not in minimal position")
    if is_peripheral_or_trivial(word, n):
        raise CurveError("curve is peripheral or inessential")
    return word


# ---------------------------------------------------------------- Curve

@dataclass(frozen=True)
class Curve:
    """An essential simple closed curve, stored by canonical normal coordinates."""

    surface: SurfaceSpec
    coords: Tuple[int, ...]

    def __post_init__(self):
        self.surface.require_combinatorial()
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def from_coords(cls, surface: SurfaceSpec, coords: Sequence[int]) -> "Curve":
        """Validate by tracing and store the canonical coordinates.

        A redundant vector (matching conditions hold but the traced curve
        backtracks across the axis) is pulled tight before storing.
        """
        n = surface.require_combinatorial()
        comps = trace(tuple(coords), n)
        if len(comps) != 1:
            raise CurveError(f"coordinates describe {len(comps)} components, expected 1")
        word = normalize_word([(e, d) for e, d, _ in comps[0]])
        return cls.from_word(surface, word)

    @classmethod
    def from_word(cls, surface: SurfaceSpec, word: Sequence[int]) -> "Curve":
        n = surface.require_combinatorial()
        word = normalize_word(word_letters(word)) if word else ()
        if is_peripheral_or_trivial(word, n):
            raise CurveError("curve is peripheral or inessential")
        return cls(surface, word_to_coords(word, n))

    @cached_property
    def traced(self) -> List[Tuple[int, bool, int]]:
        """Axis crossings (edge, is_down, index from the edge's left end) in order."""
        comps = trace(self.coords, self.surface.punctures)
        if len(comps) != 1:
            raise CurveError(f"coordinates describe {len(comps)} components, expected 1")
        return comps[0]

    @cached_property
    def word(self) -> Tuple[int, ...]:
        return coords_to_word(self.coords, self.surface.punctures)

    @cached_property
    def inside(self) -> FrozenSet[int]:
        return inside_set(self.word, self.surface.punctures)

    def partition(self) -> Tuple[FrozenSet[int], FrozenSet[int]]:
        """(side not containing p_n, side containing p_n)."""
        n = self.surface.punctures
        a = self.inside
        return a, frozenset(range(1, n + 1)) - a

    def side_sizes(self) -> Tuple[int, int]:
        a, b = self.partition()
        return len(a), len(b)

    @property
    def length(self) -> int:
        return sum(self.coords)

    def sort_key(self):
        return self.coords

    def __lt__(self, other: "Curve"):
        return (self.surface, self.coords) < (other.surface, other.coords)

    def to_dict(self) -> dict:
        return {"surface": self.surface.name, "coords": list(self.coords)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj: dict) -> "Curve":
        surface = SurfaceSpec.from_name(obj["surface"])
        return cls.from_coords(surface, obj["coords"])

    def __repr__(self):
        inside = "".join(str(p) for p in sorted(self.inside))
        return f"Curve({self.surface.name}, {list(self.coords)}, encloses={inside})"


def canonical_form(c: Curve) -> Curve:
    return Curve.from_coords(c.surface, c.coords)


def standard_word(punctures: Iterable[int], n: int) -> Tuple[int, ...]:
    """Boundary of a regular neighbourhood of the upper arcs joining the punctures in order."""
    qs = sorted(set(punctures))
    letters = []
    for q in qs:
        left = q - 1 if q < n else n - 1
        right = q if q < n else 0
        letters.extend([left, right])
    return normalize_word(word_letters(letters))


def standard_curve(surface: SurfaceSpec, punctures: Iterable[int]) -> Curve:
    """c_{ij...}: the curve enclosing the listed punctures along the upper half-plane.

    Puncture n is the point at infinity.
    """
    n = surface.require_combinatorial()
    qs = sorted(set(punctures))
    if any(q < 1 or q > n for q in qs):
        raise SurfaceError(f"punctures must be in 1..{n}")
    return Curve.from_word(surface, standard_word(qs, n))
