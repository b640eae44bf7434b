"""Geometric intersection numbers from cutting sequences.

Two reduced cutting sequences fellow-travel along shared runs of axis
crossings.  Realize every chord as a hyperbolic geodesic in its half-plane;
then two curves are in minimal position, and each crossing point shows up
exactly once, either

* inside a single half-plane tile, as two interleaved chords that share no
  axis edge, or
* at the end of a maximal shared run, where the curves enter on one side
  of each other and leave on the other.

On an axis edge z, a chord ending there from edge x lies further left than
one from edge y exactly when (x - z) mod n > (y - z) mod n, in both
half-planes.
"""

from __future__ import annotations

import threading
from typing import Dict, Sequence, Tuple

from .curves import Curve


class IntersectionError(ValueError):
    pass


def _interleave(a: int, b: int, c: int, d: int) -> bool:
    lo, hi = (a, b) if a < b else (b, a)
    return (lo < c < hi) != (lo < d < hi)


def _tile_crossings(a: Sequence[int], b: Sequence[int]) -> int:
    m, k = len(a), len(b)
    total = 0
    for i in range(m):
        p, q = a[i], a[(i + 1) % m]
        for j in range(i % 2, k, 2):
            r, s = b[j], b[(j + 1) % k]
            if len({p, q, r, s}) == 4 and _interleave(p, q, r, s):
                total += 1
    return total


def _run_crossings(a: Sequence[int], b: Sequence[int], n: int) -> int:
    m, k = len(a), len(b)
    total = 0
    cap = m + k
    for i in range(m):
        ai = a[i]
        prev_a = a[i - 1]
        for j in range(i % 2, k, 2):
            if b[j] != ai or b[j - 1] == prev_a:
                continue
            L = 1
            while a[(i + L) % m] == b[(j + L) % k]:
                L += 1
                if L > cap:
                    raise IntersectionError("curves share their whole cutting sequence")
            z = ai
            left_start = (b[j - 1] - z) % n > (prev_a - z) % n
            down_start = i % 2 == 0
            w = a[(i + L - 1) % m]
            nxt_a, nxt_b = a[(i + L) % m], b[(j + L) % k]
            left_end = (nxt_b - w) % n > (nxt_a - w) % n
            down_end = (i + L - 1) % 2 == 0
            if (left_start != down_start) != (left_end != down_end):
                total += 1
    return total


def word_intersection(a: Sequence[int], b: Sequence[int], n: int) -> int:
    """Minimal intersection number of two reduced t-words of distinct curves."""
    if not a or not b:
        return 0
    rb = tuple(reversed(b))
    return (
        _tile_crossings(a, b)
        + _run_crossings(a, b, n)
        + _run_crossings(a, rb, n)
    )


def _same_cycle(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        return False
    aa = tuple(a) + tuple(a)
    for w in (tuple(b), tuple(reversed(b))):
        for r in range(0, len(a)):
            if aa[r:r + len(a)] == w:
                return True
    return False


class IntersectionMemo:
    """Symmetric memo table; reads are lock-free, insertion is serialized."""

    def __init__(self):
        self._table: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int] = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._table.get(key)

    def put(self, key, value):
        with self._lock:
            self._table[key] = value

    def __len__(self):
        return len(self._table)

    def clear(self):
        with self._lock:
            self._table.clear()


MEMO = IntersectionMemo()


def intersection_number(a: Curve, b: Curve) -> int:
    """Geometric intersection number i(a, b)."""
    if a.surface != b.surface:
        raise IntersectionError("curves live on different surfaces")
    if a == b:
        return 0
    key = (a.coords, b.coords) if a.coords <= b.coords else (b.coords, a.coords)
    hit = MEMO.get(key)
    if hit is not None:
        return hit
    value = word_intersection(a.word, b.word, a.surface.punctures)
    MEMO.put(key, value)
    return value
