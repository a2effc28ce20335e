"""Triangulations of unpunctured marked surfaces as combinatorial data.

A triangulation is a list of triangles, each a cyclic triple of arc ids.
Internal arcs occur in exactly two triangles, boundary arcs in exactly one.
Gluing two occurrences of an arc is always orientation reversing, so the
triples alone determine the oriented surface.

Orientation convention: in a stored triple ``(a, b, c)`` each side is followed
by its clockwise successor at the marked point they share.  For a planar
polygon drawn with the y axis pointing up this is the counterclockwise
traversal of the triangle's boundary, and it yields an arrow ``a -> b`` in the
medial quiver for every consecutive pair of internal sides.
"""

from __future__ import annotations

import json
import random
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import InvalidTriangulation, NotInternalArc, TooFewMarkedPoints

ArcId = Hashable
Corner = tuple[int, int]


def id_key(x):
    """Sort key that orders ints numerically and puts them before strings."""
    if isinstance(x, bool) or not isinstance(x, int):
        return (1, 0, str(x))
    return (0, x, "")


def parse_id(text: str):
    """Interpret a command-line token as an int id when it looks like one."""
    try:
        return int(text)
    except ValueError:
        return text


def rotate_to(tri: Sequence, arc) -> tuple:
    i = list(tri).index(arc)
    return tuple(tri[i:]) + tuple(tri[:i])


def canonical_triangle(tri: Sequence) -> tuple:
    start = min(tri, key=id_key)
    return rotate_to(tri, start)


@dataclass(frozen=True)
class SurfaceInvariants:
    genus: int
    boundary_components: int
    marked_points: int
    internal_arcs: int

    def as_dict(self) -> dict:
        return {
            "g": self.genus,
            "b": self.boundary_components,
            "c": self.marked_points,
            "n": self.internal_arcs,
        }


@dataclass(frozen=True)
class MarkedPoint:
    id: int
    corners: tuple[Corner, ...]
    first_boundary: ArcId  # boundary arc met walking backwards from the chain start
    last_boundary: ArcId  # boundary arc met walking forwards from the chain end


@dataclass(frozen=True)
class Triangulation:
    internal_arcs: tuple
    boundary_arcs: tuple
    triangles: tuple[tuple, ...]

    @classmethod
    def build(cls, internal_arcs: Iterable, boundary_arcs: Iterable, triangles: Iterable[Sequence]):
        return cls(
            tuple(sorted(internal_arcs, key=id_key)),
            tuple(sorted(boundary_arcs, key=id_key)),
            tuple(tuple(t) for t in triangles),
        )

    @cached_property
    def internal_set(self) -> frozenset:
        return frozenset(self.internal_arcs)

    @cached_property
    def boundary_set(self) -> frozenset:
        return frozenset(self.boundary_arcs)

    def is_internal(self, arc) -> bool:
        return arc in self.internal_set

    @cached_property
    def occurrences(self) -> dict:
        """arc -> list of (triangle index, position)."""
        occ = defaultdict(list)
        for t, tri in enumerate(self.triangles):
            for i, a in enumerate(tri):
                occ[a].append((t, i))
        return dict(occ)

    def other_occurrence(self, t: int, i: int) -> tuple[int, int]:
        arc = self.triangles[t][i]
        for occ in self.occurrences[arc]:
            if occ != (t, i):
                return occ
        raise InvalidTriangulation(f"arc {arc!r} has no second occurrence")

    def triangles_of(self, arc) -> list[int]:
        return [t for t, _ in self.occurrences.get(arc, [])]

    def canonical(self) -> tuple:
        """Relabeling-free normal form used for equality up to triangle order."""
        return (
            self.internal_arcs,
            self.boundary_arcs,
            tuple(sorted((canonical_triangle(t) for t in self.triangles), key=lambda t: [id_key(a) for a in t])),
        )

    def relabel(self, mapping: dict) -> "Triangulation":
        f = lambda a: mapping.get(a, a)
        return Triangulation.build(
            (f(a) for a in self.internal_arcs),
            (f(a) for a in self.boundary_arcs),
            (tuple(f(a) for a in tri) for tri in self.triangles),
        )

    # corner rotation

    def _forward(self, corner: Corner) -> Corner | None:
        t, i = corner
        j = (i + 1) % 3
        if not self.is_internal(self.triangles[t][j]):
            return None
        return self.other_occurrence(t, j)

    @cached_property
    def _corner_structure(self) -> tuple[tuple[MarkedPoint, ...], tuple[Corner, ...]]:
        seen: set[Corner] = set()
        points = []
        corners = [(t, i) for t in range(len(self.triangles)) for i in range(3)]
        for t, i in corners:
            if self.is_internal(self.triangles[t][i]):
                continue
            chain = [(t, i)]
            seen.add((t, i))
            cur = (t, i)
            while True:
                nxt = self._forward(cur)
                if nxt is None or nxt in seen:
                    break
                chain.append(nxt)
                seen.add(nxt)
                cur = nxt
            last_t, last_i = chain[-1]
            points.append(
                MarkedPoint(
                    id=len(points),
                    corners=tuple(chain),
                    first_boundary=self.triangles[t][i],
                    last_boundary=self.triangles[last_t][(last_i + 1) % 3],
                )
            )
        interior = tuple(c for c in corners if c not in seen)
        return tuple(points), interior

    @property
    def marked_points(self) -> tuple[MarkedPoint, ...]:
        return self._corner_structure[0]

    @cached_property
    def corner_point(self) -> dict[Corner, int]:
        return {c: p.id for p in self.marked_points for c in p.corners}

    def opposite_point(self, t: int, arc) -> int:
        """Marked point of triangle ``t`` not lying on ``arc``."""
        i = self.triangles[t].index(arc)
        return self.corner_point[(t, (i + 1) % 3)]

    def boundary_components(self) -> list[list]:
        parent = {a: a for a in self.boundary_arcs}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for p in self.marked_points:
            ra, rb = find(p.first_boundary), find(p.last_boundary)
            if ra != rb:
                parent[ra] = rb
        comps = defaultdict(list)
        for a in self.boundary_arcs:
            comps[find(a)].append(a)
        return sorted(comps.values(), key=lambda c: id_key(c[0]))


def validate_triangulation(T: Triangulation) -> list[str]:
    """Every violated structural condition, as readable messages; empty iff valid."""
    problems = []
    both = T.internal_set & T.boundary_set
    for a in sorted(both, key=id_key):
        problems.append(f"arc {a!r} declared both internal and boundary")
    if not T.triangles:
        problems.append("no triangles")
    if not T.boundary_arcs:
        problems.append("no boundary arcs (surface must have boundary)")
    declared = T.internal_set | T.boundary_set
    for t, tri in enumerate(T.triangles):
        if len(tri) != 3:
            problems.append(f"triangle {t} has {len(tri)} sides")
            continue
        if len(set(tri)) != 3:
            problems.append(f"repeated arc in triangle {t}: {list(tri)!r}")
        for a in tri:
            if a not in declared:
                problems.append(f"unknown arc {a!r} in triangle {t}")
    if problems:
        return problems

    counts = Counter(a for tri in T.triangles for a in tri)
    for a in T.internal_arcs:
        if counts[a] != 2:
            problems.append(f"arc multiplicity: internal arc {a!r} occurs {counts[a]} times")
    for a in T.boundary_arcs:
        if counts[a] != 1:
            problems.append(f"arc multiplicity: boundary arc {a!r} occurs {counts[a]} times")
    if problems:
        return problems

    # connectivity through internal arcs
    adj = defaultdict(set)
    for a in T.internal_arcs:
        t1, t2 = T.triangles_of(a)
        adj[t1].add(t2)
        adj[t2].add(t1)
    seen, stack = {0}, [0]
    while stack:
        for u in adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != len(T.triangles):
        problems.append("triangulation is disconnected")

    _, interior = T._corner_structure
    if interior:
        problems.append(f"interior marked point (puncture) at corners {list(interior)!r}")
    return problems


def check_valid(T: Triangulation) -> None:
    problems = validate_triangulation(T)
    if problems:
        raise InvalidTriangulation("; ".join(problems))


def surface_invariants(T: Triangulation) -> SurfaceInvariants:
    check_valid(T)
    c = len(T.marked_points)
    if c != len(T.boundary_arcs):
        raise InvalidTriangulation(f"corner rotation found {c} marked points but there are {len(T.boundary_arcs)} boundary arcs")
    b = len(T.boundary_components())
    edges = len(T.internal_arcs) + len(T.boundary_arcs)
    chi = c - edges + len(T.triangles)
    twice_g = 2 - b - chi
    if twice_g < 0 or twice_g % 2:
        raise InvalidTriangulation(f"Euler characteristic {chi} incompatible with {b} boundary components")
    g = twice_g // 2
    n = len(T.internal_arcs)
    if n != 6 * g + 3 * b + c - 6:
        raise InvalidTriangulation(f"arc count {n} != 6g+3b+c-6 for g={g}, b={b}, c={c}")
    return SurfaceInvariants(g, b, c, n)


@dataclass(frozen=True)
class FlipResult:
    triangulation: Triangulation
    old_arc: ArcId
    new_arc: ArcId


def fresh_id(used: Iterable, hint):
    used = set(used)
    if isinstance(hint, int) and not isinstance(hint, bool):
        ints = [u for u in used if isinstance(u, int)]
        return max(ints, default=-1) + 1
    name = f"{hint}*"
    while name in used:
        name += "*"
    return name


def flip(T: Triangulation, d) -> FlipResult:
    """Replace internal arc ``d`` by the other diagonal of its quadrilateral.

    With the two triangles rotated to start at ``d`` as (d, x, y) and
    (d, z, w), the new triangles are (d*, y, z) and (d*, w, x).
    """
    if not T.is_internal(d):
        raise NotInternalArc(f"arc {d!r} is not an internal arc")
    (t1, i1), (t2, i2) = T.occurrences[d]
    _, x, y = rotate_to(T.triangles[t1], d)
    _, z, w = rotate_to(T.triangles[t2], d)
    new = fresh_id(T.internal_arcs + T.boundary_arcs, d)
    triangles = list(T.triangles)
    triangles[t1] = (new, y, z)
    triangles[t2] = (new, w, x)
    internal = [a for a in T.internal_arcs if a != d] + [new]
    return FlipResult(Triangulation.build(internal, T.boundary_arcs, triangles), d, new)


# constructions


def polygon_triangulation(
    n_vertices: int,
    diagonals: Sequence[tuple[int, int]],
    side_labels: Sequence | None = None,
    diagonal_labels: Sequence | None = None,
) -> Triangulation:
    """Triangulated convex polygon with vertices 0..N-1 in counterclockwise order.

    Side i joins vertex i to i+1.  Sides sharing a label are glued into one
    internal arc (the caller is responsible for orientability: glued sides
    must be traversed in opposite directions).
    """
    N = n_vertices
    if side_labels is None:
        side_labels = [f"s{i}" for i in range(N)]
    if diagonal_labels is None:
        diagonal_labels = [f"d{k}" for k in range(len(diagonals))]
    label = {}
    for i in range(N):
        label[frozenset((i, (i + 1) % N))] = side_labels[i]
    for (i, j), name in zip(diagonals, diagonal_labels):
        label[frozenset((i, j))] = name
    triangles = []
    for i, j, k in combinations(range(N), 3):
        e = [frozenset(p) for p in ((i, j), (j, k), (k, i))]
        if all(x in label for x in e):
            triangles.append(tuple(label[x] for x in e))
    side_count = Counter(side_labels)
    internal = set(diagonal_labels) | {s for s, m in side_count.items() if m == 2}
    boundary = {s for s, m in side_count.items() if m == 1}
    return Triangulation.build(internal, boundary, triangles)


def generate_disc_fan(c: int) -> Triangulation:
    """Disc with ``c`` marked points, all diagonals from one vertex.

    Internal arcs are 0..c-4 (arc k joins the apex to vertex k+2), boundary
    arcs c-3..2c-4.
    """
    if c < 4:
        raise TooFewMarkedPoints(f"a disc fan needs at least 4 marked points, got {c}")
    n = c - 3
    diagonals = [(0, k) for k in range(2, c - 1)]
    return polygon_triangulation(c, diagonals, side_labels=list(range(n, n + c)), diagonal_labels=list(range(n)))


def generate_annulus(p: int, q: int) -> Triangulation:
    """Annulus with p and q marked points on its two boundary circles.

    Cut along one arc this is a strip with p points on the bottom edge and q
    on the top; one fan joins the first bottom point to every top point and
    the other joins the last top point to every bottom point.
    """
    if p < 1 or q < 1:
        raise TooFewMarkedPoints(f"annulus needs p, q >= 1, got p={p}, q={q}")
    # ccw polygon: B0..Bp along the bottom, then Tq..T0 along the top
    N = p + q + 2
    B = lambda i: i
    Tv = lambda j: p + 1 + (q - j)
    cut = 0
    sides = [None] * N
    next_id = p + q
    for i in range(p):
        sides[B(i)] = next_id
        next_id += 1
    sides[B(p)] = cut  # right edge Bp -> Tq
    for j in range(q, 0, -1):
        sides[Tv(j)] = next_id
        next_id += 1
    sides[Tv(0)] = cut  # left edge T0 -> B0
    diagonals, names = [], []
    k = 1
    for j in range(1, q + 1):
        diagonals.append((B(0), Tv(j)))
        names.append(k)
        k += 1
    for i in range(1, p):
        diagonals.append((Tv(q), B(i)))
        names.append(k)
        k += 1
    return polygon_triangulation(N, diagonals, side_labels=sides, diagonal_labels=names)


def fan_glued_polygon(word: Sequence[tuple[object, int]]) -> Triangulation:
    """Fan-triangulate the polygon whose sides read ``word``.

    ``word`` lists (label, exponent) pairs; a label appearing as +1 and -1 is
    glued, a label appearing once is a boundary arc.  Integer labels are
    required so that the fan diagonals can be numbered after them.
    """
    N = len(word)
    labels = [lab for lab, _ in word]
    start = max(labels) + 1
    diagonals = [(0, k) for k in range(2, N - 1)]
    names = list(range(start, start + len(diagonals)))
    return polygon_triangulation(N, diagonals, side_labels=labels, diagonal_labels=names)


def surface_word(genus: int, boundary_points: Sequence[int]) -> list[tuple[int, int]]:
    """Polygon word for a genus ``genus`` surface whose i-th boundary carries
    ``boundary_points[i]`` marked points."""
    b = len(boundary_points)
    if b < 1 or any(k < 1 for k in boundary_points):
        raise TooFewMarkedPoints("need at least one boundary component, each with a marked point")
    word = []
    nid = 0

    def new():
        nonlocal nid
        nid += 1
        return nid - 1

    for _ in range(genus):
        a, c = new(), new()
        word += [(a, 1), (c, 1), (a, -1), (c, -1)]
    for k in boundary_points[:-1]:
        h = new()
        word.append((h, 1))
        word += [(new(), 1) for _ in range(k)]
        word.append((h, -1))
    word += [(new(), 1) for _ in range(boundary_points[-1])]
    return word


def generate_surface(genus: int, boundary_points: Sequence[int]) -> Triangulation:
    T = fan_glued_polygon(surface_word(genus, boundary_points))
    if len(T.internal_arcs) == 0:
        raise TooFewMarkedPoints("surface has no internal arcs")
    check_valid(T)
    return T


def random_flips(T: Triangulation, count: int, rng: random.Random) -> Triangulation:
    for _ in range(count):
        d = rng.choice(T.internal_arcs)
        T = flip(T, d).triangulation
    return T


def random_triangulation(genus: int, b: int, rng: random.Random, max_extra_points: int = 3, flips: int | None = None) -> Triangulation:
    """Random triangulation of a genus ``genus`` surface with ``b`` boundary circles."""
    while True:
        pts = [1 + rng.randrange(max_extra_points + 1) for _ in range(b)]
        if genus == 0 and b == 1 and pts[0] < 4:
            pts[0] = 4 + rng.randrange(max_extra_points + 1)
        if genus == 0 and b == 2 and sum(pts) < 2:
            continue
        break
    T = generate_surface(genus, pts)
    n = len(T.internal_arcs)
    return random_flips(T, 3 * n if flips is None else flips, rng)


# text format


def triangulation_to_dict(T: Triangulation) -> dict:
    return {
        "boundary_arcs": list(T.boundary_arcs),
        "internal_arcs": list(T.internal_arcs),
        "triangles": [list(t) for t in T.triangles],
    }


def triangulation_from_dict(data: dict) -> Triangulation:
    try:
        return Triangulation.build(data["internal_arcs"], data["boundary_arcs"], data["triangles"])
    except (KeyError, TypeError) as exc:
        raise InvalidTriangulation(f"malformed triangulation document: {exc}") from exc


def load_triangulation(path) -> Triangulation:
    with open(path) as fh:
        return triangulation_from_dict(json.load(fh))


def dump_triangulation(T: Triangulation, path) -> None:
    with open(path, "w") as fh:
        json.dump(triangulation_to_dict(T), fh, indent=2)
        fh.write("\n")
