"""Explicit drawings of several curves on the reference polygon.

Each curve is placed exactly as the tracing routine lays it out: its axis
crossings at their traced positions and its arcs as semicircles in the upper
or lower half-plane.  Crossings between curves are then literally counted
(two semicircles in the same half-plane cross iff their endpoints
interleave) and bigons are removed one at a time until none is left.

A bigon that is innermost is a strip of axis edges, each carrying a pair of
adjacent points (one from each curve) whose chords run parallel, capped at
both ends by a pair of crossing chords.  Swapping every pair in the strip
removes the two crossings.

The same drawing answers the complementary-region questions needed for
filling checks and for subsurface projection.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .curves import Curve

Point = Tuple[int, int]  # (curve index, position in its word)


class DrawingError(RuntimeError):
    pass


class _UnionFind:
    def __init__(self):
        self.parent: Dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


class Drawing:
    def __init__(self, curves: Sequence[Curve], minimize: bool = True, max_steps: int = 10**7):
        if not curves:
            raise DrawingError("nothing to draw")
        self.surface = curves[0].surface
        self.n = self.surface.punctures
        self.curves = list(curves)
        self.words: List[Tuple[int, ...]] = []
        self.order: List[List[Point]] = [[] for _ in range(self.n)]
        for ci, c in enumerate(self.curves):
            tr = c.traced
            self.words.append(tuple(e for e, _, _ in tr))
            per_edge: Dict[int, List[Tuple[int, int]]] = {}
            for k, (e, _, idx) in enumerate(tr):
                per_edge.setdefault(e, []).append((idx, k))
            # later curves sit to the left of earlier ones
            for e, pts in per_edge.items():
                self.order[e] = [(ci, k) for _, k in sorted(pts)] + self.order[e]
        self._reindex()
        self.bigons_removed = 0
        if minimize:
            self.remove_bigons(max_steps)

    # ------------------------------------------------------------ positions

    def _reindex(self):
        self.where: Dict[Point, Tuple[int, int]] = {}
        for e, pts in enumerate(self.order):
            for r, p in enumerate(pts):
                self.where[p] = (e, r)

    def _offsets(self) -> List[int]:
        off, acc = [], 0
        for pts in self.order:
            off.append(acc)
            acc += len(pts)
        return off

    def gpos(self, p: Point, off=None) -> int:
        """Position of a point along the whole axis, left to right."""
        off = off or self._offsets()
        e, r = self.where[p]
        return off[e] + r

    def _partner(self, p: Point, half: int) -> Point:
        """Other endpoint of p's chord in ``half`` (0 lower, 1 upper)."""
        ci, k = p
        m = len(self.words[ci])
        forward_half = 0 if k % 2 == 0 else 1
        if forward_half == half:
            return (ci, (k + 1) % m)
        return (ci, (k - 1) % m)

    def _crossing(self, p, p2, q, q2) -> bool:
        # all four on the axis; compare by (edge, rank)
        a, b = self.where[p], self.where[p2]
        c, d = self.where[q], self.where[q2]
        if len({a, b, c, d}) < 4:
            return False
        lo, hi = (a, b) if a < b else (b, a)
        return (lo < c < hi) != (lo < d < hi)

    # ------------------------------------------------------------ bigons

    def _strip(self, p: Point, q: Point) -> Optional[List[Tuple[Point, Point]]]:
        """The bigon strip through adjacent points p, q, or None."""
        strip = [(p, q)]
        ends = 0
        for half in (0, 1):
            cur_p, cur_q, h = p, q, half
            steps = 0
            while True:
                p2, q2 = self._partner(cur_p, h), self._partner(cur_q, h)
                if self._crossing(cur_p, p2, cur_q, q2):
                    ends += 1
                    break
                ep, rp = self.where[p2]
                eq, rq = self.where[q2]
                if ep != eq or abs(rp - rq) != 1:
                    return None
                if {p2, q2} == {p, q}:
                    return None  # parallel all the way round
                strip.append((p2, q2))
                cur_p, cur_q, h = p2, q2, 1 - h
                steps += 1
                if steps > len(self.where):
                    return None
        return strip if ends == 2 else None

    def _swap(self, pair: Tuple[Point, Point]):
        p, q = pair
        e, rp = self.where[p]
        _, rq = self.where[q]
        self.order[e][rp], self.order[e][rq] = q, p
        self.where[p] = (e, rq)
        self.where[q] = (e, rp)

    def remove_bigons(self, max_steps: int = 10**7) -> int:
        steps = 0
        changed = True
        while changed:
            changed = False
            for e in range(self.n):
                r = 0
                while r < len(self.order[e]) - 1:
                    p, q = self.order[e][r], self.order[e][r + 1]
                    if p[0] != q[0]:
                        strip = self._strip(p, q)
                        if strip is not None:
                            for pair in strip:
                                self._swap(pair)
                            self.bigons_removed += 1
                            changed = True
                            steps += 1
                            if steps > max_steps:
                                raise DrawingError("bigon removal did not terminate")
                    r += 1
        return self.bigons_removed

    # ------------------------------------------------------------ counting

    def chord_arrays(self, ci: int):
        """(half, lo, hi) arrays of global positions of curve ci's chords."""
        off = self._offsets()
        w = self.words[ci]
        m = len(w)
        pos = np.array([self.gpos((ci, k), off) for k in range(m)], dtype=np.int64)
        nxt = np.roll(pos, -1)
        half = np.array([0 if k % 2 == 0 else 1 for k in range(m)], dtype=np.int64)
        return half, np.minimum(pos, nxt), np.maximum(pos, nxt)

    def crossings(self, i: int, j: int) -> int:
        h1, lo1, hi1 = self.chord_arrays(i)
        h2, lo2, hi2 = self.chord_arrays(j)
        same = h1[:, None] == h2[None, :]
        a = (lo1[:, None] < lo2[None, :]) & (lo2[None, :] < hi1[:, None]) & (hi1[:, None] < hi2[None, :])
        b = (lo2[None, :] < lo1[:, None]) & (lo1[:, None] < hi2[None, :]) & (hi2[None, :] < hi1[:, None])
        return int((same & (a | b)).sum())

    # ------------------------------------------------------------ regions

    def gap_regions(self):
        """Union-find over axis gaps; returns (find, gap list, puncture gaps).

        Gap (e, r) is the stretch of edge e just left of its r-th point.
        """
        off = self._offsets()
        halves = []
        for ci in range(len(self.curves)):
            halves.append(self.chord_arrays(ci))
        gaps = [(e, r) for e in range(self.n) for r in range(len(self.order[e]) + 1)]
        gx = np.array([off[e] + r - 0.5 for e, r in gaps])
        uf = _UnionFind()
        for half in (0, 1):
            los = np.concatenate([lo[h == half] for h, lo, _ in halves])
            his = np.concatenate([hi[h == half] for h, _, hi in halves])
            inside = (los[None, :] < gx[:, None]) & (gx[:, None] < his[None, :])
            first = {}
            for gi, row in enumerate(inside):
                key = row.tobytes()
                if key in first:
                    uf.union(gaps[gi], gaps[first[key]])
                else:
                    first[key] = gi
        # puncture p_k (k < n) touches the first gap of e_k and the last gap of e_{k-1}
        punct_gap = {}
        for k in range(1, self.n):
            punct_gap[k] = (k, 0)
            last = (k - 1, len(self.order[k - 1]))
            uf.union((k, 0), last)
        punct_gap[self.n] = (0, 0)
        uf.union((0, 0), (self.n - 1, len(self.order[self.n - 1])))
        return uf, gaps, punct_gap

    def puncture_faces(self) -> Dict[int, object]:
        uf, _, pg = self.gap_regions()
        return {p: uf.find(g) for p, g in pg.items()}

    def point_side(self, p: Point, ref: int) -> bool:
        """True iff point p is on the inside of curve ``ref`` (the side away from p_n).

        Walk along p's edge to its left endpoint counting points of ``ref``.
        """
        e, r = self.where[p]
        crossings = sum(1 for q in self.order[e][:r] if q[0] == ref)
        left_puncture = e if e >= 1 else self.n
        inside = left_puncture in self.curves[ref].inside
        return inside != (crossings % 2 == 1)

    def chord_events(self, ci: int, k: int, others: Iterable[int]):
        """Chords of ``others`` crossing chord k of curve ci, ordered from its start.

        Returns (other curve, other chord index, forward_is_left) triples;
        forward_is_left says the other curve's forward direction points to
        the left of ci's direction of travel.
        """
        off = self._offsets()
        m = len(self.words[ci])
        half = 0 if k % 2 == 0 else 1
        P = self.gpos((ci, k), off)
        P2 = self.gpos((ci, (k + 1) % m), off)
        total = sum(len(o) for o in self.order)
        out = []
        for oj in others:
            mo = len(self.words[oj])
            for t in range(half, mo, 2):
                Q = self.gpos((oj, t), off)
                Q2 = self.gpos((oj, (t + 1) % mo), off)
                lo, hi = min(P, P2), max(P, P2)
                if (lo < Q < hi) == (lo < Q2 < hi):
                    continue
                # the P-side arc cut off by the other chord; nested arcs order the crossings
                x, y = min(Q, Q2), max(Q, Q2)
                size = (y - x) if x < P < y else (total - (y - x))
                if half == 1:
                    between = (P < Q < P2) if P < P2 else (Q > P or Q < P2)
                else:
                    between = (P2 < Q < P) if P2 < P else (Q < P or Q > P2)
                out.append((size, oj, t, between))
        out.sort()
        return [(oj, t, left) for _, oj, t, left in out]


def oracle_intersection(a: Curve, b: Curve) -> int:
    """Intersection number by explicit drawing and bigon removal."""
    if a == b:
        return 0
    return Drawing([a, b]).crossings(0, 1)
