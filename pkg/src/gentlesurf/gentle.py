"""Gentleness, tilted and cluster-tilted recognition, blocks and surface reconstruction."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Hashable

import networkx as nx

from .errors import (
    GentleSurfError,
    InconsistentGluing,
    LoopAtVertex,
    NotGentle,
    NotTiltedAOrAtilde,
    RelationOffCycle,
    TwoCyclePresent,
    VertexMultiplicityExceeded,
)
from .quiver import Arrow, BoundQuiver, Quiver
from .strings import FORWARD, INVERSE, Letter, Word, can_follow, is_cyclic_string, letter_end, letters_from
from .surface import SurfaceInvariants, Triangulation, id_key, surface_invariants, validate_triangulation


@dataclass(frozen=True)
class GentleReport:
    satisfied: dict
    witnesses: dict
    finite_dimensional: bool

    @property
    def is_gentle(self) -> bool:
        return all(self.satisfied.values())

    def as_dict(self) -> dict:
        return {
            "gentle": self.is_gentle,
            "finite_dimensional": self.finite_dimensional,
            "satisfied": dict(self.satisfied),
            "witnesses": {k: [list(map(str, w)) if isinstance(w, (list, tuple)) else str(w) for w in v] for k, v in self.witnesses.items()},
        }


def _finite_dimensional(bq: BoundQuiver) -> bool:
    """No oriented cycle of arrows avoiding the relations."""
    q = bq.quiver
    g = nx.DiGraph()
    g.add_nodes_from(a.id for a in q.arrows)
    for a in q.arrows:
        for b in q.out_arrows(a.target):
            if not bq.is_relation(a.id, b.id):
                g.add_edge(a.id, b.id)
    return nx.is_directed_acyclic_graph(g)


def check_gentle(bq: BoundQuiver) -> GentleReport:
    q = bq.quiver
    w = {"G1": [], "G2": [], "G3": [], "G4": []}
    for v in q.vertices:
        if len(q.out_arrows(v)) > 2:
            w["G1"].append(("out", v))
        if len(q.in_arrows(v)) > 2:
            w["G1"].append(("in", v))
    for a, b in bq.relations:
        if q.arrow[a].target != q.arrow[b].source:
            w["G2"].append((a, b))
    for beta in q.arrows:
        ins = q.in_arrows(beta.source)
        outs = q.out_arrows(beta.target)
        zero_in = [a.id for a in ins if bq.is_relation(a.id, beta.id)]
        zero_out = [g.id for g in outs if bq.is_relation(beta.id, g.id)]
        free_in = [a.id for a in ins if not bq.is_relation(a.id, beta.id)]
        free_out = [g.id for g in outs if not bq.is_relation(beta.id, g.id)]
        if len(zero_in) > 1:
            w["G3"].append(("before", beta.id, *zero_in))
        if len(zero_out) > 1:
            w["G3"].append(("after", beta.id, *zero_out))
        if len(free_in) > 1:
            w["G4"].append(("before", beta.id, *free_in))
        if len(free_out) > 1:
            w["G4"].append(("after", beta.id, *free_out))
    satisfied = {k: not v for k, v in w.items()}
    fd = _finite_dimensional(bq) if satisfied["G2"] else False
    return GentleReport(satisfied, {k: v for k, v in w.items() if v}, fd)


def _require_gentle(bq: BoundQuiver) -> None:
    rep = check_gentle(bq)
    if not rep.is_gentle:
        bad = ", ".join(k for k, ok in rep.satisfied.items() if not ok)
        raise NotGentle(f"presentation violates {bad}")


# double zeros


def _connecting_walk(bq: BoundQuiver, beta, gamma) -> tuple[Letter, ...] | None:
    """Shortest relation-free walk omega with beta omega gamma a string."""
    q = bq.quiver
    first = Letter(beta, FORWARD)
    goal = Letter(gamma, FORWARD)
    start = (q.arrow[beta].target, first)
    prev = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        v, last = state
        if v == q.arrow[gamma].source and can_follow(bq, last, goal):
            out = []
            while prev[state] is not None:
                state, L = prev[state]
                out.append(L)
            return tuple(reversed(out))
        for L in letters_from(q, v):
            if can_follow(bq, last, L):
                nxt = (letter_end(q, L), L)
                if nxt not in prev:
                    prev[nxt] = (state, L)
                    queue.append(nxt)
    return None


def find_double_zeros(bq: BoundQuiver) -> list[Word]:
    """One shortest witness alpha beta omega gamma delta per ordered pair of relations."""
    _require_gentle(bq)
    q = bq.quiver
    found = []
    for a, b in bq.relations:
        for g, d in bq.relations:
            if b == g:
                letters = (a, b, d)
                found.append(Word(q.arrow[a].source, tuple(Letter(x, FORWARD) for x in letters)))
                continue
            omega = _connecting_walk(bq, b, g)
            if omega is None:
                continue
            letters = (Letter(a, FORWARD), Letter(b, FORWARD)) + omega + (Letter(g, FORWARD), Letter(d, FORWARD))
            found.append(Word(q.arrow[a].source, letters))
    return sorted(found, key=Word.key)


# tilted recognition


@dataclass(frozen=True)
class TiltedClass:
    tag: str  # TypeA | TypeAtilde | No
    evidence: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"tag": self.tag, "evidence": self.evidence}


def _underlying(q: Quiver) -> nx.MultiGraph:
    g = nx.MultiGraph()
    g.add_nodes_from(q.vertices)
    for a in q.arrows:
        g.add_edge(a.source, a.target, key=a.id)
    return g


def _cycle_core(q: Quiver) -> tuple[set, list[Arrow]]:
    """Vertices and arrows left after repeatedly removing leaves."""
    g = _underlying(q)
    leaves = [v for v in g if g.degree(v) <= 1]
    while leaves:
        g.remove_nodes_from(leaves)
        leaves = [v for v in g if g.degree(v) <= 1]
    core = set(g.nodes)
    return core, [a for a in q.arrows if a.source in core and a.target in core]


def cycle_word(q: Quiver) -> Word:
    """The unique cycle of a unicyclic quiver as a closed walk."""
    core, arrows = _cycle_core(q)
    start = min(core, key=id_key)
    unused = sorted(arrows, key=lambda a: id_key(a.id))
    letters, v = [], start
    while unused:
        a = next(a for a in unused if v in (a.source, a.target))
        unused.remove(a)
        if a.source == v:
            letters.append(Letter(a.id, FORWARD))
            v = a.target
        else:
            letters.append(Letter(a.id, INVERSE))
            v = a.source
    return Word(start, tuple(letters))


def classify_tilted(bq: BoundQuiver) -> TiltedClass:
    q = bq.quiver
    rep = check_gentle(bq)
    if not rep.is_gentle:
        return TiltedClass("No", {"reason": "not gentle", "gentle": rep.as_dict()})
    if not rep.finite_dimensional:
        return TiltedClass("No", {"reason": "infinite dimensional"})
    g = _underlying(q)
    if not q.vertices or not nx.is_connected(g):
        return TiltedClass("No", {"reason": "disconnected"})
    cyclomatic = len(q.arrows) - len(q.vertices) + 1
    dz = find_double_zeros(bq)
    if dz:
        return TiltedClass("No", {"reason": "double zero", "double_zero": str(dz[0])})
    if cyclomatic == 0:
        return TiltedClass("TypeA", {"cycles": []})
    if cyclomatic > 1:
        return TiltedClass("No", {"reason": "more than one cycle", "cyclomatic_number": cyclomatic})
    w = cycle_word(q)
    ev = {"cycles": [str(w)], "cycle_is_band": False}
    if is_cyclic_string(bq, w):
        ev["cycle_is_band"] = True
        core = {w.start} | {letter_end(q, L) for L in w.letters}
        on_cycle = {L.arrow for L in w.letters}
        attached = [a for a in q.arrows if a.id not in on_cycle and ((a.source in core) != (a.target in core))]
        entering = {a.target in core for a in attached}
        if len(entering) > 1:
            ev["reason"] = "attached arrows both enter and leave the band"
            return TiltedClass("No", ev)
    return TiltedClass("TypeAtilde", ev)


def _new_arrow_ids(q: Quiver, rels) -> list:
    ids = [a.id for a in q.arrows]
    if all(isinstance(i, int) for i in ids):
        base = max(ids, default=-1) + 1
        return list(range(base, base + len(rels)))
    used = set(map(str, ids))
    out = []
    for a, b in rels:
        name = f"xi_{a}_{b}"
        while name in used:
            name += "'"
        used.add(name)
        out.append(name)
    return out


def relation_extension(bq: BoundQuiver) -> BoundQuiver:
    """One new arrow a -> c per relation (c -> b -> a), closing a zero 3-cycle."""
    cls = classify_tilted(bq)
    if cls.tag not in ("TypeA", "TypeAtilde"):
        raise NotTiltedAOrAtilde(f"not tilted of type A or Atilde ({cls.evidence.get('reason', 'unknown')})")
    q = bq.quiver
    rels = list(bq.relations)
    new_ids = _new_arrow_ids(q, rels)
    arrows = list(q.arrows)
    relations = list(rels)
    for xi, (a, b) in zip(new_ids, rels):
        arrows.append(Arrow(xi, q.arrow[b].target, q.arrow[a].source))
        relations += [(b, xi), (xi, a)]
    return BoundQuiver.build(Quiver.build(q.vertices, arrows), relations)


# blocks


@dataclass(frozen=True)
class Block:
    kind: str  # "I" or "II"
    vertices: tuple
    arrows: tuple

    def as_dict(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices), "arrows": list(self.arrows)}


@dataclass(frozen=True)
class Matching:
    """Pairs of block-vertex occurrences (block index, position) glued together.

    ``unmatched`` lists occurrences with no partner and ``isolated`` the
    vertices lying in no block at all; both become capped boundary."""

    pairs: tuple
    unmatched: tuple = ()
    isolated: tuple = ()

    def as_dict(self) -> dict:
        return {
            "pairs": [[list(p), list(r)] for p, r in self.pairs],
            "unmatched": [list(p) for p in self.unmatched],
            "isolated": list(self.isolated),
        }


def zero_triangles(bq: BoundQuiver) -> list[tuple]:
    """Oriented 3-cycles (a, b, c) all of whose length-2 subpaths are relations."""
    out = set()
    for a, b in bq.relations:
        for c in bq.quiver.out_arrows(bq.quiver.arrow[b].target):
            if bq.is_relation(b, c.id) and bq.is_relation(c.id, a):
                cyc = (a, b, c.id)
                i = min(range(3), key=lambda k: id_key(cyc[k]))
                out.add(cyc[i:] + cyc[:i])
    return sorted(out, key=lambda c: tuple(map(id_key, c)))


def block_decompose(bq: BoundQuiver) -> tuple[list[Block], Matching]:
    q = bq.quiver
    if q.loops():
        raise LoopAtVertex(f"loop at vertex {q.loops()[0].source!r}")
    if q.two_cycles():
        raise TwoCyclePresent(f"2-cycle between {q.two_cycles()[0]!r}")
    _require_gentle(bq)
    tris = zero_triangles(bq)
    covered = {}
    for t in tris:
        for x in t:
            if x in covered:
                raise RelationOffCycle(f"arrow {x!r} lies on two zero 3-cycles")
            covered[x] = t
    for a, b in bq.relations:
        if a not in covered or covered[a] != covered.get(b):
            raise RelationOffCycle(f"relation ({a!r}, {b!r}) is not on a radical-square-zero 3-cycle")
    blocks = [Block("II", tuple(q.arrow[x].source for x in t), t) for t in tris]
    blocks += [Block("I", (a.source, a.target), (a.id,)) for a in q.arrows if a.id not in covered]
    occ: dict = {}
    for bi, blk in enumerate(blocks):
        for pos, v in enumerate(blk.vertices):
            occ.setdefault(v, []).append((bi, pos))
    pairs, unmatched = [], []
    for v in sorted(occ, key=id_key):
        o = occ[v]
        if len(o) > 2:
            raise VertexMultiplicityExceeded(f"vertex {v!r} lies in {len(o)} blocks")
        if len(o) == 2:
            pairs.append(tuple(o))
        else:
            unmatched.append(o[0])
    isolated = tuple(v for v in q.vertices if v not in occ)
    return blocks, Matching(tuple(pairs), tuple(unmatched), isolated)


def _boundary_ids(vertices, count: int) -> list:
    if all(isinstance(v, int) for v in vertices):
        base = max(vertices, default=-1) + 1
        return list(range(base, base + count))
    used = set(map(str, vertices))
    out, i = [], 0
    while len(out) < count:
        name = f"bd{i}"
        if name not in used:
            out.append(name)
        i += 1
    return out


def reconstruct_triangulation(blocks: list[Block], matching: Matching) -> Triangulation:
    """Glue one triangle per block along the matching and cap the rest."""
    vertex_of = {}
    for bi, blk in enumerate(blocks):
        for pos, v in enumerate(blk.vertices):
            vertex_of[(bi, pos)] = v
    count = Counter()
    for p, r in matching.pairs:
        if p[0] == r[0]:
            raise InconsistentGluing(f"matching glues block {p[0]} to itself")
        if vertex_of.get(p) is None or vertex_of.get(p) != vertex_of.get(r):
            raise InconsistentGluing(f"matched occurrences {p} and {r} carry different vertices")
    for v in vertex_of.values():
        count[v] += 1
    for v in matching.isolated:
        count.setdefault(v, 0)
    if any(c > 2 for c in count.values()):
        raise InconsistentGluing("a vertex occurs more than twice")
    vertices = sorted(count, key=id_key)
    n_bnd = sum(1 for b in blocks if b.kind == "I") + 2 * sum(2 - count[v] for v in vertices)
    fresh = iter(_boundary_ids(vertices, n_bnd))
    triangles, boundary = [], []
    for blk in blocks:
        if blk.kind == "II":
            triangles.append(tuple(blk.vertices))
        else:
            e = next(fresh)
            boundary.append(e)
            triangles.append((blk.vertices[0], blk.vertices[1], e))
    for v in vertices:
        for _ in range(2 - count[v]):
            e1, e2 = next(fresh), next(fresh)
            boundary += [e1, e2]
            triangles.append((v, e1, e2))
    T = Triangulation.build(vertices, boundary, triangles)
    problems = validate_triangulation(T)
    if problems:
        raise InconsistentGluing("; ".join(problems))
    return T


@dataclass(frozen=True)
class ClusterTiltedClass:
    tag: str
    evidence: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"tag": self.tag, "evidence": self.evidence}


def classify_cluster_tilted(bq: BoundQuiver) -> ClusterTiltedClass:
    try:
        blocks, matching = block_decompose(bq)
        T = reconstruct_triangulation(blocks, matching)
        inv = surface_invariants(T)
    except GentleSurfError as e:
        return ClusterTiltedClass("No", {"reason": f"{type(e).__name__}: {e}"})
    ev = {"invariants": inv.as_dict()}
    if inv.genus == 0 and inv.boundary_components == 1:
        return ClusterTiltedClass("TypeA", ev)
    if inv.genus == 0 and inv.boundary_components == 2:
        return ClusterTiltedClass("TypeAtilde", ev)
    ev["reason"] = "surface is neither a disc nor an annulus"
    return ClusterTiltedClass("No", ev)
