"""Curves on the surface versus strings, closed curves versus band powers.

A curve is recorded by its ordered crossings x_0..x_s with the internal
arcs, together with the triangles T_0..T_{s+1} it passes through: T_0 holds
the start point, T_i (0 < i <= s) lies between x_{i-1} and x_i, and T_{s+1}
holds the end point.  The triangles matter only when two arcs share two
triangles (as in the annulus with one point on each boundary); when they are
omitted they are recovered from the endpoints.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable

from .errors import ArcHomotopicCurve, NotReduced, NotReducedClosed, WordNotBand, WordNotString
from .quiver import BoundQuiver, QuiverWithPotential, jacobian_presentation, medial_quiver
from .strings import FORWARD, INVERSE, Band, Letter, Word, can_follow, is_band, is_string, primitive_root
from .surface import Triangulation, check_valid


@dataclass(frozen=True)
class Curve:
    start: int
    end: int
    crossings: tuple
    triangles: tuple | None = None

    def reversed(self) -> "Curve":
        tris = tuple(reversed(self.triangles)) if self.triangles is not None else None
        return Curve(self.end, self.start, tuple(reversed(self.crossings)), tris)

    def key(self) -> tuple:
        """Orientation-free identity of the curve."""
        a = (self.start, self.end, self.crossings, self.triangles)
        r = self.reversed()
        b = (r.start, r.end, r.crossings, r.triangles)
        return min(a, b, key=repr)

    def as_dict(self) -> dict:
        return {
            "from": self.start,
            "to": self.end,
            "crossings": list(self.crossings),
            "triangles": list(self.triangles) if self.triangles is not None else None,
        }


@dataclass(frozen=True)
class ClosedCurve:
    """Cyclic crossing sequence; ``triangles[i]`` lies between x_i and x_{i+1}."""

    crossings: tuple
    triangles: tuple | None = None

    def as_dict(self) -> dict:
        return {
            "crossings": list(self.crossings),
            "triangles": list(self.triangles) if self.triangles is not None else None,
        }


class _Medial:
    """Medial quiver of T with arrow lookup by (triangle, side pair)."""

    def __init__(self, T: Triangulation):
        check_valid(T)
        self.T = T
        self.qp: QuiverWithPotential = medial_quiver(T)
        self.bq: BoundQuiver = jacobian_presentation(*self.qp)
        self.q = self.bq.quiver
        self.by_triangle = {}
        for aid, t in self.qp.arrow_triangle.items():
            a = self.q.arrow[aid]
            self.by_triangle[(t, a.source, a.target)] = aid

    def letter(self, t: int, x, y) -> Letter | None:
        """Letter from side x to side y inside triangle t."""
        if (t, x, y) in self.by_triangle:
            return Letter(self.by_triangle[(t, x, y)], FORWARD)
        if (t, y, x) in self.by_triangle:
            return Letter(self.by_triangle[(t, y, x)], INVERSE)
        return None

    def across(self, t: int, arc) -> int:
        """Triangle reached from t by crossing ``arc``."""
        i = self.T.triangles[t].index(arc)
        return self.T.other_occurrence(t, i)[0]


@lru_cache(maxsize=64)
def _medial(T: Triangulation) -> _Medial:
    return _Medial(T)


def intersection_vector(T: Triangulation, c: Curve | ClosedCurve) -> dict:
    counts = Counter(c.crossings)
    return {a: counts.get(a, 0) for a in T.internal_arcs}


def string_to_curve(T: Triangulation, w: Word) -> Curve:
    m = _medial(T)
    try:
        ok = is_string(m.bq, w)
    except Exception as exc:
        raise WordNotString(str(exc)) from exc
    if not ok:
        raise WordNotString(f"{w} is not a string of the Jacobian algebra")
    xs = tuple(w.vertices(m.q))
    if not w.letters:
        t0, t1 = T.triangles_of(xs[0])
        tris = (t0, t1)
    else:
        inner = [m.qp.arrow_triangle[L.arrow] for L in w.letters]
        tris = (m.across(inner[0], xs[0]), *inner, m.across(inner[-1], xs[-1]))
    P = T.opposite_point(tris[0], xs[0])
    Q = T.opposite_point(tris[-1], xs[-1])
    return Curve(P, Q, xs, tris)


def _propagate(m: _Medial, xs: tuple, t0: int) -> list[int] | None:
    tris = [t0]
    for i, x in enumerate(xs):
        if x not in m.T.triangles[tris[-1]]:
            return None
        nxt = m.across(tris[-1], x)
        if i + 1 < len(xs) and xs[i + 1] not in m.T.triangles[nxt]:
            return None
        tris.append(nxt)
    return tris


def _curve_triangles(m: _Medial, c: Curve) -> tuple:
    T, xs = m.T, c.crossings
    if c.triangles is not None:
        tris = tuple(c.triangles)
        if len(tris) != len(xs) + 1 or _propagate(m, xs, tris[0]) != list(tris):
            raise NotReduced("triangle sequence does not follow the crossings")
        return tris
    for t0 in T.triangles_of(xs[0]):
        tris = _propagate(m, xs, t0)
        if tris and T.opposite_point(t0, xs[0]) == c.start and T.opposite_point(tris[-1], xs[-1]) == c.end:
            return tuple(tris)
    raise NotReduced("no triangle sequence joins the endpoints through these crossings")


def curve_to_string(T: Triangulation, c: Curve) -> Word:
    if not c.crossings:
        raise ArcHomotopicCurve("curve crosses no arc of the triangulation")
    xs = tuple(c.crossings)
    for x in xs:
        if not T.is_internal(x):
            raise NotReduced(f"crossing {x!r} is not an internal arc")
    for i in range(len(xs) - 1):
        if xs[i] == xs[i + 1]:
            raise NotReduced(f"crossings {i} and {i + 1} are equal ({xs[i]!r})")
    m = _medial(T)
    tris = _curve_triangles(m, c)
    if T.opposite_point(tris[0], xs[0]) != c.start:
        raise NotReduced("start point is not opposite the first crossing")
    if T.opposite_point(tris[-1], xs[-1]) != c.end:
        raise NotReduced("end point is not opposite the last crossing")
    letters = []
    for i in range(1, len(xs)):
        L = m.letter(tris[i], xs[i - 1], xs[i])
        if L is None:
            raise NotReduced(f"crossings {i - 1} and {i} do not share triangle {tris[i]}")
        if letters and not can_follow(m.bq, letters[-1], L):
            raise NotReduced(f"walk is not reduced at crossing {i}")
        letters.append(L)
    return Word(xs[0], tuple(letters))


def band_to_closed_curve(T: Triangulation, b: Band | Word, n: int = 1) -> ClosedCurve:
    m = _medial(T)
    w = b.word if isinstance(b, Band) else b
    if n < 1:
        raise WordNotBand("band power must be positive")
    try:
        ok = is_band(m.bq, w)
    except Exception as exc:
        raise WordNotBand(str(exc)) from exc
    if not ok:
        raise WordNotBand(f"{w} is not a band of the Jacobian algebra")
    xs = tuple(w.vertices(m.q)[:-1])
    tris = tuple(m.qp.arrow_triangle[L.arrow] for L in w.letters)
    return ClosedCurve(xs * n, tris * n)


def _closed_triangles(m: _Medial, xs: tuple) -> tuple:
    s = len(xs)
    for t0 in m.T.triangles_of(xs[0]):
        # t0 must lie between x_{s-1} and x_0; crossing x_0 leads to the triangle before x_1
        if xs[-1] not in m.T.triangles[t0]:
            continue
        tris, cur, ok = [], t0, True
        for i in range(s):
            cur = m.across(cur, xs[i])
            if xs[(i + 1) % s] not in m.T.triangles[cur]:
                ok = False
                break
            tris.append(cur)
        if ok and tris[-1] == t0:
            return tuple(tris)
    raise NotReducedClosed("crossing sequence does not close up")


def closed_curve_to_band(T: Triangulation, c: ClosedCurve) -> tuple[Band, int]:
    xs = tuple(c.crossings)
    s = len(xs)
    if s == 0:
        raise NotReducedClosed("closed curve crosses no arc")
    for i in range(s):
        if xs[i] == xs[(i + 1) % s]:
            raise NotReducedClosed(f"cyclic crossings {i} and {(i + 1) % s} are equal ({xs[i]!r})")
    m = _medial(T)
    tris = tuple(c.triangles) if c.triangles is not None else _closed_triangles(m, xs)
    if len(tris) != s:
        raise NotReducedClosed("need one triangle per crossing")
    letters = []
    for i in range(s):
        L = m.letter(tris[i], xs[i], xs[(i + 1) % s])
        if L is None:
            raise NotReducedClosed(f"crossings {i} and {(i + 1) % s} do not share triangle {tris[i]}")
        letters.append(L)
    for i in range(s):
        if not can_follow(m.bq, letters[i - 1], letters[i]):
            raise NotReducedClosed(f"cyclic walk is not reduced at crossing {i}")
    root, n = primitive_root(tuple(letters))
    return Band(Word(xs[0], root)), n
