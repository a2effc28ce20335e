"""Medial quivers with potential, Jacobian presentations and quiver mutation."""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import DiGraphMatcher

from .errors import (
    GentleSurfError,
    LoopAtVertex,
    TwoCycleAtVertex,
    TwoCyclePresent,
    UnknownVertex,
)
from .surface import Triangulation, check_valid, id_key


@dataclass(frozen=True)
class Arrow:
    id: Hashable
    source: Hashable
    target: Hashable


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple[Arrow, ...]

    @classmethod
    def build(cls, vertices: Iterable, arrows: Iterable) -> "Quiver":
        arrows = [a if isinstance(a, Arrow) else Arrow(*a) for a in arrows]
        vs = tuple(sorted(set(vertices), key=id_key))
        vset = set(vs)
        for a in arrows:
            if a.source not in vset or a.target not in vset:
                raise UnknownVertex(f"arrow {a.id!r} uses unknown vertex")
        ids = [a.id for a in arrows]
        if len(set(ids)) != len(ids):
            raise GentleSurfError("duplicate arrow ids")
        return cls(vs, tuple(sorted(arrows, key=lambda a: id_key(a.id))))

    @cached_property
    def arrow(self) -> dict:
        return {a.id: a for a in self.arrows}

    @cached_property
    def _out(self) -> dict:
        d = defaultdict(list)
        for a in self.arrows:
            d[a.source].append(a)
        return d

    @cached_property
    def _in(self) -> dict:
        d = defaultdict(list)
        for a in self.arrows:
            d[a.target].append(a)
        return d

    def out_arrows(self, v) -> list[Arrow]:
        return self._out.get(v, [])

    def in_arrows(self, v) -> list[Arrow]:
        return self._in.get(v, [])

    def arrow_counts(self) -> Counter:
        """Multiset of (source, target) pairs; the quiver up to arrow names."""
        return Counter((a.source, a.target) for a in self.arrows)

    def loops(self) -> list[Arrow]:
        return [a for a in self.arrows if a.source == a.target]

    def two_cycles(self) -> list[tuple]:
        c = self.arrow_counts()
        return sorted(
            {tuple(sorted((s, t), key=id_key)) for (s, t) in c if s != t and (t, s) in c},
            key=lambda p: (id_key(p[0]), id_key(p[1])),
        )

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, tuple(Arrow(a.id, a.target, a.source) for a in self.arrows))

    def relabel_vertices(self, mapping: dict) -> "Quiver":
        f = lambda v: mapping.get(v, v)
        return Quiver.build((f(v) for v in self.vertices), (Arrow(a.id, f(a.source), f(a.target)) for a in self.arrows))


@dataclass(frozen=True)
class Potential:
    """Sum of oriented 3-cycles, each an arrow triple composing head to tail."""

    cycles: tuple[tuple, ...] = ()


@dataclass(frozen=True)
class BoundQuiver:
    quiver: Quiver
    relations: tuple[tuple, ...] = ()

    @classmethod
    def build(cls, quiver: Quiver, relations: Iterable[Sequence]) -> "BoundQuiver":
        rels = {tuple(r) for r in relations}
        for r in rels:
            if len(r) != 2 or r[0] not in quiver.arrow or r[1] not in quiver.arrow:
                raise GentleSurfError(f"relation {list(r)!r} is not a pair of known arrows")
        return cls(quiver, tuple(sorted(rels, key=lambda r: (id_key(r[0]), id_key(r[1])))))

    @cached_property
    def relation_set(self) -> frozenset:
        return frozenset(self.relations)

    def is_relation(self, first, second) -> bool:
        return (first, second) in self.relation_set

    def opposite(self) -> "BoundQuiver":
        return BoundQuiver.build(self.quiver.opposite(), ((b, a) for a, b in self.relations))


@dataclass(frozen=True)
class QuiverWithPotential:
    quiver: Quiver
    potential: Potential
    arrow_triangle: dict = field(default_factory=dict, compare=False)

    def __iter__(self):
        return iter((self.quiver, self.potential))


def medial_quiver(T: Triangulation) -> QuiverWithPotential:
    """Quiver of internal arcs: one arrow a -> b for each triangle in which b
    follows a, plus one potential term per triangle with three internal sides."""
    check_valid(T)
    arrows = []
    arrow_triangle = {}
    cycles = []
    for t, tri in enumerate(T.triangles):
        ids = []
        for i in range(3):
            a, b = tri[i], tri[(i + 1) % 3]
            if T.is_internal(a) and T.is_internal(b):
                aid = len(arrows)
                arrows.append(Arrow(aid, a, b))
                arrow_triangle[aid] = t
                ids.append(aid)
        if len(ids) == 3:
            cycles.append(tuple(ids))
    Q = Quiver.build(T.internal_arcs, arrows)
    return QuiverWithPotential(Q, Potential(tuple(cycles)), arrow_triangle)


def jacobian_presentation(Q: Quiver, W: Potential) -> BoundQuiver:
    """Bound quiver whose relations are the length-2 subpaths of each cycle of W."""
    rels = []
    for a, b, c in W.cycles:
        rels += [(a, b), (b, c), (c, a)]
    return BoundQuiver.build(Q, rels)


def jacobian_algebra(T: Triangulation) -> BoundQuiver:
    return jacobian_presentation(*medial_quiver(T))


def _fresh_arrow_ids(existing: Iterable, pairs: list[tuple]) -> list:
    existing = list(existing)
    if all(isinstance(x, int) and not isinstance(x, bool) for x in existing):
        start = max(existing, default=-1) + 1
        return list(range(start, start + len(pairs)))
    used = set(map(str, existing))
    out = []
    for a, b in pairs:
        name = f"[{a}{b}]"
        while name in used:
            name += "'"
        used.add(name)
        out.append(name)
    return out


def mutate(Q: Quiver, k) -> Quiver:
    """Quiver mutation at ``k``: compose paths through k, reverse arrows at k,
    then cancel the 2-cycles created by the composites."""
    if k not in set(Q.vertices):
        raise UnknownVertex(f"unknown vertex {k!r}")
    if any(a.source == k for a in Q.loops()):
        raise LoopAtVertex(f"loop at vertex {k!r}")
    ins, outs = Q.in_arrows(k), Q.out_arrows(k)
    if {a.source for a in ins} & {b.target for b in outs}:
        raise TwoCycleAtVertex(f"2-cycle through vertex {k!r}")

    kept = [a for a in Q.arrows if a.source != k and a.target != k]
    reversed_ = [Arrow(a.id, a.target, a.source) for a in Q.arrows if a.source == k or a.target == k]
    pairs = [(a, b) for a in ins for b in outs]
    new_ids = _fresh_arrow_ids(Q.arrow, [(a.id, b.id) for a, b in pairs])
    composites = [Arrow(nid, a.source, b.target) for nid, (a, b) in zip(new_ids, pairs)]

    arrows = kept + reversed_ + composites
    touched = {(c.source, c.target) for c in composites}
    by_pair = defaultdict(list)
    for a in arrows:
        by_pair[(a.source, a.target)].append(a)
    # composites i->j and j->i cannot both occur, since that needs a 2-cycle at k
    drop = set()
    for s, t in touched:
        fwd, back = by_pair[(s, t)], by_pair[(t, s)]
        m = min(len(fwd), len(back))
        # drop composites before original arrows
        fresh = set(new_ids)
        for group in (fwd, back):
            for a in sorted(group, key=lambda a: (a.id in fresh, id_key(a.id)))[len(group) - m:]:
                drop.add(a.id)
    return Quiver.build(Q.vertices, (a for a in arrows if a.id not in drop))


@dataclass(frozen=True)
class SkewMatrix:
    vertices: tuple
    matrix: np.ndarray = field(compare=False)

    def __eq__(self, other):
        return (
            isinstance(other, SkewMatrix)
            and self.vertices == other.vertices
            and np.array_equal(self.matrix, other.matrix)
        )

    def index(self, v) -> int:
        return self.vertices.index(v)

    def mutate(self, v) -> "SkewMatrix":
        return SkewMatrix(self.vertices, matrix_mutation(self.matrix, self.index(v)))

    def to_list(self) -> list[list[int]]:
        return self.matrix.astype(int).tolist()


def to_matrix(Q: Quiver) -> SkewMatrix:
    """Entry (a, b) = #arrows a->b minus #arrows b->a."""
    if Q.loops():
        raise LoopAtVertex(f"loop at vertex {Q.loops()[0].source!r}")
    cycles = Q.two_cycles()
    if cycles:
        raise TwoCyclePresent(f"2-cycle between {cycles[0][0]!r} and {cycles[0][1]!r}")
    idx = {v: i for i, v in enumerate(Q.vertices)}
    B = np.zeros((len(Q.vertices), len(Q.vertices)), dtype=int)
    for a in Q.arrows:
        B[idx[a.source], idx[a.target]] += 1
        B[idx[a.target], idx[a.source]] -= 1
    return SkewMatrix(Q.vertices, B)


def from_matrix(M: SkewMatrix) -> Quiver:
    arrows = []
    for i, s in enumerate(M.vertices):
        for j, t in enumerate(M.vertices):
            for _ in range(max(int(M.matrix[i, j]), 0)):
                arrows.append(Arrow(len(arrows), s, t))
    return Quiver.build(M.vertices, arrows)


def matrix_mutation(B: np.ndarray, k: int) -> np.ndarray:
    """Fomin-Zelevinsky mutation of a skew-symmetric integer matrix at index k."""
    B = np.asarray(B, dtype=int)
    n = B.shape[0]
    out = B.copy()
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                out[i, j] = -B[i, j]
            else:
                out[i, j] = B[i, j] + (abs(B[i, k]) * B[k, j] + B[i, k] * abs(B[k, j])) // 2
    return out


# isomorphism


def _encode(bq: BoundQuiver) -> nx.DiGraph:
    G = nx.DiGraph()
    for v in bq.quiver.vertices:
        G.add_node(("v", v), kind="vertex")
    for a in bq.quiver.arrows:
        G.add_node(("a", a.id), kind="arrow")
        G.add_edge(("v", a.source), ("a", a.id), kind="source")
        G.add_edge(("a", a.id), ("v", a.target), kind="target")
    for x, y in bq.relations:
        G.add_edge(("a", x), ("a", y), kind="relation")
    return G


def bound_quiver_isomorphism(bq1: BoundQuiver, bq2: BoundQuiver, fix_vertices: bool = False) -> dict | None:
    """Vertex and arrow bijections carrying incidences and relations of
    ``bq1`` onto ``bq2``, as ``{"vertices": ..., "arrows": ...}``; None when
    no isomorphism exists.  ``fix_vertices`` demands the identity on vertices."""
    q1, q2 = bq1.quiver, bq2.quiver
    if (len(q1.vertices), len(q1.arrows), len(bq1.relations)) != (len(q2.vertices), len(q2.arrows), len(bq2.relations)):
        return None
    G1, G2 = _encode(bq1), _encode(bq2)

    def node_match(n1, n2):
        if n1["kind"] != n2["kind"]:
            return False
        return True

    if fix_vertices:
        if set(q1.vertices) != set(q2.vertices):
            return None
        for v in q1.vertices:
            G1.nodes[("v", v)]["label"] = v
            G2.nodes[("v", v)]["label"] = v

        def node_match(n1, n2):  # noqa: F811
            return n1["kind"] == n2["kind"] and n1.get("label") == n2.get("label")

    gm = DiGraphMatcher(G1, G2, node_match=node_match, edge_match=lambda e1, e2: e1["kind"] == e2["kind"])
    for m in gm.isomorphisms_iter():
        return {
            "vertices": {k[1]: v[1] for k, v in m.items() if k[0] == "v"},
            "arrows": {k[1]: v[1] for k, v in m.items() if k[0] == "a"},
        }
    return None


def is_isomorphic(bq1: BoundQuiver, bq2: BoundQuiver, fix_vertices: bool = False) -> bool:
    return bound_quiver_isomorphism(bq1, bq2, fix_vertices) is not None


# text format


def bound_quiver_to_dict(bq: BoundQuiver, potential: Potential | None = None) -> dict:
    d = {
        "vertices": list(bq.quiver.vertices),
        "arrows": [[a.id, a.source, a.target] for a in bq.quiver.arrows],
        "relations": [list(r) for r in bq.relations],
    }
    if potential is not None:
        d["potential"] = [list(c) for c in potential.cycles]
    return d


def quiver_to_dict(Q: Quiver) -> dict:
    return {"vertices": list(Q.vertices), "arrows": [[a.id, a.source, a.target] for a in Q.arrows]}


def bound_quiver_from_dict(data: dict) -> BoundQuiver:
    try:
        Q = Quiver.build(data["vertices"], [Arrow(*a) for a in data["arrows"]])
        rels = [tuple(r) for r in data.get("relations", [])]
        for cyc in data.get("potential", []):
            a, b, c = cyc
            rels += [(a, b), (b, c), (c, a)]
    except (KeyError, TypeError, ValueError) as exc:
        raise GentleSurfError(f"malformed quiver document: {exc}") from exc
    return BoundQuiver.build(Q, rels)


def load_bound_quiver(path) -> BoundQuiver:
    with open(path) as fh:
        return bound_quiver_from_dict(json.load(fh))


def dump_json(data: dict, path) -> None:
    with open(path, "w") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")
