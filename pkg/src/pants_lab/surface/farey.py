"""Exact curve-graph geometry of complexity-one (four-holed sphere) domains.

The curve graph of such a domain is the Farey graph.  We move the domain's
boundary curves into standard position with a half-twist word, read off
three frame curves meeting pairwise twice, and assign every curve a slope
p/q through

    i(g, F_inf) = 2|q|,   i(g, F_0) = 2|p|,   i(g, F_1) = 2|p - q|.

Dehn twists about F_inf and F_0 fix the boundary and act on slopes by
t -> t + 2 and t -> t / (1 + 2t) (up to a sign we measure), which is enough
to build the curve of any slope.  Farey geodesics between two slopes stay
inside the ladder of triangles crossed by the hyperbolic geodesic, so
distances are exact.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from math import gcd
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .braids import GeneratorWord, apply_generator, puncture_permutation
from .curves import Curve, standard_curve
from .domains import SubsurfaceDomain
from .intersection import intersection_number

Slope = Tuple[int, int]  # (p, q), gcd 1, q > 0 or (1, 0)


class FareyError(RuntimeError):
    pass


def norm_slope(p: int, q: int) -> Slope:
    if p == 0 and q == 0:
        raise FareyError("0/0 is not a slope")
    g = gcd(p, q)
    p, q = p // g, q // g
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return p, q


def farey_adjacent(s: Slope, t: Slope) -> bool:
    return abs(s[0] * t[1] - s[1] * t[0]) == 1


# ---------------------------------------------------------------- standardization

def _total_length(curves: Sequence[Curve]) -> int:
    return sum(len(c.word) for c in curves)


def standardize(curves: Sequence[Curve], depth: int = 3, max_rounds: int = 10_000) -> GeneratorWord:
    """A half-twist word taking every curve to a length-two word.

    Greedy descent on total word length, with a short breadth-first
    lookahead whenever no single generator helps.
    """
    if not curves:
        return GeneratorWord()
    surface = curves[0].surface
    n = surface.punctures
    gens = [GeneratorWord(((g, e),)) for g in range(1, n) for e in (1, -1)]
    cur = list(curves)
    word = GeneratorWord()
    for _ in range(max_rounds):
        cost = _total_length(cur)
        if cost == 2 * len(cur):
            return word
        best = None
        for g in gens:
            img = [apply_generator(g, c) for c in cur]
            l = _total_length(img)
            if l < cost and (best is None or l < best[0]):
                best = (l, g, img)
        if best is None:
            best = _lookahead(cur, gens, cost, depth)
            if best is None:
                raise FareyError("could not standardize curves")
        _, g, img = best
        word = word + g
        cur = img
    raise FareyError("standardization did not converge")


def _lookahead(cur, gens, cost, depth):
    frontier = [(GeneratorWord(), cur)]
    for _ in range(depth):
        nxt = []
        for w, cs in frontier:
            for g in gens:
                if w.letters and w.letters[-1] == (g.letters[0][0], -g.letters[0][1]):
                    continue
                img = [apply_generator(g, c) for c in cs]
                ww = w + g
                if _total_length(img) < cost:
                    return (_total_length(img), ww, img)
                nxt.append((ww, img))
        frontier = nxt
    return None


def _full_twist(lo: int, hi: int, sign: int) -> GeneratorWord:
    """Dehn twist about the round curve around positions lo..hi."""
    k = hi - lo + 1
    base = tuple((g, sign) for g in range(lo, hi))
    return GeneratorWord(base * k)


def _interval(s: FrozenSet[int]) -> Tuple[int, int]:
    lo, hi = min(s), max(s)
    if hi - lo + 1 != len(s):
        raise FareyError(f"{sorted(s)} is not an interval")
    return lo, hi


class FareyChart:
    """Slope coordinates on a complexity-one domain."""

    def __init__(self, domain: SubsurfaceDomain):
        if domain.complexity != 1:
            raise FareyError("Farey charts need a complexity-one domain")
        self.domain = domain
        self.surface = domain.surface
        n = self.surface.punctures
        self.word = standardize(list(domain.boundary))
        self.inverse = self.word.inverse()
        perm = puncture_permutation(self.word, n)
        items = [frozenset(perm[p] for p in it) for it in domain.items]
        last = [it for it in items if n in it]
        rest = sorted((it for it in items if n not in it), key=min)
        if len(last) != 1 or len(rest) != 3:
            raise FareyError("unexpected item layout")
        i1, i2, i3 = rest
        for it in rest:
            _interval(it)
        self.items_std = (i1, i2, i3, last[0])
        std = lambda ps: standard_curve(self.surface, ps)
        self.frame_std = (std(i1 | i2), std(i2 | i3), std(i1 | i3))
        self.frame = tuple(self._from_std(c) for c in self.frame_std)
        f_inf, f_0, f_1 = self.frame
        for a, b in ((f_inf, f_0), (f_0, f_1), (f_inf, f_1)):
            if intersection_number(a, b) != 2:
                raise FareyError("frame curves do not meet twice")
        for f in self.frame:
            if not domain.contains(f):
                raise FareyError("frame curve escapes the domain")
        lo1, hi1 = _interval(i1 | i2)
        lo0, hi0 = _interval(i2 | i3)
        self._tw_inf = _full_twist(lo1, hi1, 1)
        self._tw_0 = _full_twist(lo0, hi0, 1)
        # measure the direction of each twist on slopes
        s = self.slope_std(apply_generator(self._tw_inf, self.frame_std[1]))
        if s not in ((2, 1), (-2, 1)):
            raise FareyError(f"twist about F_inf sends 0 to {s}")
        self._eps_inf = 1 if s == (2, 1) else -1
        s = self.slope_std(apply_generator(self._tw_0, self.frame_std[0]))
        if s not in ((1, 2), (-1, 2)):
            raise FareyError(f"twist about F_0 sends oo to {s}")
        self._eps_0 = 1 if s == (1, 2) else -1
        self._cache: Dict[Slope, Curve] = {}

    # ---------------------------------------------------------- transport

    def _from_std(self, c: Curve) -> Curve:
        return apply_generator(self.inverse, c)

    def _to_std(self, c: Curve) -> Curve:
        return apply_generator(self.word, c)

    @staticmethod
    def _slope_from(ii: int, i0: int, i1: int) -> Slope:
        q, p = ii // 2, i0 // 2
        d = i1 // 2
        if d == abs(abs(p) - abs(q)):
            return norm_slope(p, q)
        if d == abs(p) + abs(q):
            return norm_slope(-p, q)
        raise FareyError("intersection numbers are not those of a slope")

    def slope_std(self, c: Curve) -> Slope:
        return self._slope_from(*(intersection_number(c, f) for f in self.frame_std))

    def slope(self, c: Curve) -> Slope:
        if not self.domain.contains(c):
            raise FareyError(f"{c!r} is not a curve of {self.domain!r}")
        return self._slope_from(*(intersection_number(c, f) for f in self.frame))

    # ---------------------------------------------------------- slope -> curve

    def curve(self, s: Slope) -> Curve:
        s = norm_slope(*s)
        hit = self._cache.get(s)
        if hit is not None:
            return hit
        p, q = s
        ops: List[Tuple[str, int]] = []
        while True:
            if q == 0:
                base = 0
                break
            if p == 0:
                base = 1
                break
            if abs(p) == abs(q):
                if p * q < 0:
                    ops.append(("A", 1))
                    p, q = norm_slope(p + 2 * q, q)
                base = 2
                break
            sgn = 1 if p * q > 0 else -1
            if abs(p) > abs(q):
                ops.append(("A", -sgn))
                p, q = norm_slope(p - 2 * sgn * q, q)
            else:
                ops.append(("B", -sgn))
                p, q = norm_slope(p, q - 2 * sgn * p)
        letters = []
        for kind, k in reversed(ops):
            # undo t -> t + 2k (A) or t -> t / (1 + 2k t) (B)
            if kind == "A":
                letters.extend(self._power(self._tw_inf, -k * self._eps_inf).letters)
            else:
                letters.extend(self._power(self._tw_0, -k * self._eps_0).letters)
        w = GeneratorWord(tuple(letters)) + self.inverse
        c = apply_generator(w, self.frame_std[base])
        if self.slope(c) != s:
            raise FareyError(f"slope construction failed for {s}")
        self._cache[s] = c
        return c

    @staticmethod
    def _power(w: GeneratorWord, e: int) -> GeneratorWord:
        return w if e == 1 else w.inverse()

    # ---------------------------------------------------------- geodesics

    def distance(self, a: Curve, b: Curve) -> int:
        return farey_distance(self.slope(a), self.slope(b))

    def geodesic(self, a: Curve, b: Curve) -> List[Curve]:
        """Lexicographically least Farey geodesic from a to b (by coordinates)."""
        sa, sb = self.slope(a), self.slope(b)
        if sa == sb:
            return [a]
        verts = ladder(sa, sb)
        da = _bfs(verts, sa)
        db = _bfs(verts, sb)
        D = da[sb]
        on = [v for v in verts if da.get(v, -1) + db.get(v, -1) == D]
        curves = {v: self.curve(v) for v in on}
        curves[sa], curves[sb] = a, b
        path = [sa]
        while path[-1] != sb:
            cur = path[-1]
            nbrs = [v for v in on if db[v] == db[cur] - 1 and farey_adjacent(v, cur)]
            path.append(min(nbrs, key=lambda v: curves[v].coords))
        return [curves[v] for v in path]


def _bfs(verts: Sequence[Slope], src: Slope) -> Dict[Slope, int]:
    dist = {src: 0}
    q = deque([src])
    while q:
        u = q.popleft()
        for v in verts:
            if v not in dist and farey_adjacent(u, v):
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def _mobius_to_inf(s: Slope):
    """SL2(Z) matrix sending slope s to 1/0, with its inverse."""
    p, q = s
    # find u, v with p v - q u = 1
    def egcd(a, b):
        if b == 0:
            return a, 1, 0
        g, x, y = egcd(b, a % b)
        return g, y, x - (a // b) * y
    g, x, y = egcd(p, q)  # p x + q y = g = +-1
    if g < 0:
        x, y = -x, -y
    v, u = x, -y
    M = ((v, -u), (-q, p))
    Minv = ((p, u), (q, v))
    return M, Minv


def _apply(M, s: Slope) -> Slope:
    (a, b), (c, d) = M
    return norm_slope(a * s[0] + b * s[1], c * s[0] + d * s[1])


def ladder(s: Slope, t: Slope) -> List[Slope]:
    """Vertices of the Farey triangles crossed going from s to t."""
    M, Minv = _mobius_to_inf(s)
    x = _apply(M, t)
    out = [(1, 0)]
    if x != (1, 0):
        a, b = x
        a0 = a // b
        left, right = (a0, 1), (a0 + 1, 1)
        out += [left, right]
        if b != 1:
            while True:
                med = (left[0] + right[0], left[1] + right[1])
                out.append(med)
                if med == x:
                    break
                if x[0] * med[1] < med[0] * x[1]:
                    right = med
                else:
                    left = med
    seen = []
    for v in out:
        w = _apply(Minv, v)
        if w not in seen:
            seen.append(w)
    return seen


def farey_distance(s: Slope, t: Slope) -> int:
    s, t = norm_slope(*s), norm_slope(*t)
    if s == t:
        return 0
    return _bfs(ladder(s, t), s)[t]


@lru_cache(maxsize=4096)
def chart_for(domain: SubsurfaceDomain) -> FareyChart:
    return FareyChart(domain)
