"""Subsurface projection by explicit surgery.

A curve is determined up to homotopy by its cyclic sequence of axis
crossings, so a surgered curve can be written down as a concatenation of
crossing runs: a piece of c between two of its intersections with the
boundary of Y, followed by a piece (or a whole loop) of the boundary.
Reducing the concatenation gives the word of the surgered curve.
"""

from __future__ import annotations

from typing import FrozenSet, List, Optional, Sequence, Tuple

from ..surface.curves import (Curve, CurveError, canonical_rotation, is_peripheral_or_trivial,
                              normalize_word, word_to_coords)
from ..surface.domains import SubsurfaceDomain
from ..surface.drawing import Drawing
from ..surface.intersection import intersection_number

Letter = Tuple[int, bool]


class ProjectionError(ValueError):
    pass


def _flip(letters: Sequence[Letter]) -> List[Letter]:
    return [(e, not d) for e, d in reversed(letters)]


def simple_curve_from_letters(surface, letters: Sequence[Letter]) -> Optional[Curve]:
    """The curve with this crossing sequence, or None if it is not an essential simple curve."""
    n = surface.punctures
    try:
        word = normalize_word(list(letters))
    except CurveError:
        return None
    if len(word) == 0:
        return None
    try:
        c = Curve(surface, word_to_coords(word, n))
        if canonical_rotation(c.word) != canonical_rotation(word):
            return None
    except CurveError:
        return None
    if is_peripheral_or_trivial(c.word, n):
        return None
    return c


def _run(letters: Sequence[Letter], start: int, stop: int) -> List[Letter]:
    """Points start+1 .. stop (cyclic, inclusive) of a closed crossing sequence."""
    m = len(letters)
    out = []
    k = start
    while True:
        k = (k + 1) % m
        out.append(letters[k])
        if k == stop % m:
            return out


def _events(d: Drawing, ci: int, others: Sequence[int]):
    """All crossings of curve ci with ``others`` in order along ci: (chord, other, other chord)."""
    out = []
    for k in range(len(d.words[ci])):
        for oj, t, _ in d.chord_events(ci, k, others):
            out.append((k, oj, t))
    return out


def _arc_forward(c_letters, m, ev_a, ev_b, wraps_whole):
    k1, k2 = ev_a[0], ev_b[0]
    if k1 == k2 and not wraps_whole:
        return []
    if k1 == k2:
        return _run(c_letters, k1, k1 + m)
    return _run(c_letters, k1, k2)


def _beta_piece(b_letters, t_from, t_to, forward: bool, from_first: bool = True):
    """Letters of the boundary curve from a point in chord t_from to a point in chord t_to.

    When both points share a chord, ``from_first`` says the start point comes
    first along that chord.
    """
    m = len(b_letters)
    if t_from == t_to:
        if forward == from_first:
            return []
        return _beta_loop(b_letters, t_from, forward)
    if forward:
        return _run(b_letters, t_from, t_to)
    # backward: points t_from, t_from-1, ..., t_to+1 with directions flipped
    pts = []
    k = t_from
    while k != t_to:
        pts.append(b_letters[k])
        k = (k - 1) % m
    return [(e, not dn) for e, dn in pts]


def _beta_loop(b_letters, t, forward: bool):
    m = len(b_letters)
    run = _run(b_letters, t, t + m)
    return run if forward else _flip(run)


def arcs_in_domain(c: Curve, y: SubsurfaceDomain):
    """(drawing, events, arc list) where each arc is a pair of consecutive event indices inside Y."""
    boundary = list(y.boundary)
    d = Drawing([c] + boundary)
    others = list(range(1, len(boundary) + 1))
    ev = _events(d, 0, others)
    if not ev:
        return d, ev, []
    # sides at point 0 of c; each crossing flips one bit
    cur = [d.point_side((0, 0), j) for j in others]
    want = [y.side_of_boundary(b) for b in boundary]
    arcs = []
    for i in range(len(ev)):
        oj = ev[i][1]
        cur[oj - 1] = not cur[oj - 1]
        if cur == want:
            arcs.append((i, (i + 1) % len(ev)))
    return d, ev, arcs


def subsurface_projection(c: Curve, y: SubsurfaceDomain) -> FrozenSet[Curve]:
    """Curves of Y obtained by surgering the arcs of c in Y along the boundary of Y."""
    if c in y.cut_curves:
        raise ProjectionError("cannot project a cut curve of the domain")
    if c.surface != y.surface:
        raise ProjectionError("curve and domain live on different surfaces")
    if y.is_whole:
        return frozenset([c])
    boundary = list(y.boundary)
    if all(intersection_number(c, b) == 0 for b in boundary):
        return frozenset([c]) if y.contains(c) else frozenset()
    d, ev, arcs = arcs_in_domain(c, y)
    c_letters = [(e, dn) for e, dn, _ in c.traced]
    m = len(c_letters)
    b_letters = {j + 1: [(e, dn) for e, dn, _ in b.traced] for j, b in enumerate(boundary)}
    out = set()
    for i, i2 in arcs:
        ea, eb = ev[i], ev[i2]
        a = _arc_forward(c_letters, m, ea, eb, i2 <= i)
        if ea[1] == eb[1]:
            bl = b_letters[ea[1]]
            first = True
            if ea[2] == eb[2]:
                along = [t for _, t, _ in d.chord_events(ea[1], ea[2], [0])]
                first = along.index(eb[0]) < along.index(ea[0])
            for fwd in (True, False):
                piece = _beta_piece(bl, eb[2], ea[2], fwd, first)
                cand = simple_curve_from_letters(c.surface, a + piece)
                if cand is not None and y.contains(cand):
                    out.add(cand)
        else:
            b1, b2 = b_letters[ea[1]], b_letters[eb[1]]
            for f1 in (True, False):
                for f2 in (True, False):
                    letters = a + _beta_loop(b2, eb[2], f2) + _flip(a) + _beta_loop(b1, ea[2], f1)
                    cand = simple_curve_from_letters(c.surface, letters)
                    if cand is not None and y.contains(cand):
                        out.add(cand)
    return frozenset(out)
