"""Worked-example checks plus seeded random flip/mutation and round-trip cases."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import fixtures as F
from .corpus import SURFACE_TYPES
from .curves import band_to_closed_curve, closed_curve_to_band, curve_to_string, intersection_vector, string_to_curve
from .gentle import (
    block_decompose,
    check_gentle,
    classify_cluster_tilted,
    classify_tilted,
    find_double_zeros,
    reconstruct_triangulation,
    relation_extension,
)
from .quiver import is_isomorphic, jacobian_algebra, medial_quiver, mutate
from .strings import (
    canonical_band,
    composable_at,
    dim_vector,
    enumerate_bands,
    enumerate_strings,
    growth_report,
    injective_string,
    parse_word,
    projective_string,
    verify_gorenstein_one,
)
from .surface import flip, generate_annulus, generate_disc_fan, random_triangulation, surface_invariants


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class SelftestConfig:
    seed: int = 1
    cases: int = 25
    curve_len: int = 8


@dataclass
class SelftestReport:
    config: SelftestConfig
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "seed": self.config.seed,
            "cases": self.config.cases,
            "ok": self.ok,
            "passed": sum(c.ok for c in self.checks),
            "total": len(self.checks),
            "checks": [c.as_dict() for c in self.checks],
        }


def _same_word(q, w, v) -> bool:
    return v == w or v == w.inverse(q)


def _invariants_tuple(T) -> tuple:
    i = surface_invariants(T)
    return (i.genus, i.boundary_components, i.marked_points, i.internal_arcs)


def flip_commutes(T) -> tuple[bool, str]:
    Q = medial_quiver(T).quiver
    for d in T.internal_arcs:
        fr = flip(T, d)
        Q2 = medial_quiver(fr.triangulation).quiver.relabel_vertices({fr.new_arc: d})
        if mutate(Q, d).arrow_counts() != Q2.arrow_counts():
            return False, f"arc {d!r}"
        if _invariants_tuple(fr.triangulation) != _invariants_tuple(T):
            return False, f"invariants change at arc {d!r}"
    return True, f"{len(T.internal_arcs)} arcs"


def round_trip(T) -> tuple[bool, str]:
    bq = jacobian_algebra(T)
    blocks, m = block_decompose(bq)
    R = reconstruct_triangulation(blocks, m)
    same_inv = _invariants_tuple(R) == _invariants_tuple(T)
    iso = is_isomorphic(jacobian_algebra(R), bq)
    return same_inv and iso, f"invariants {'match' if same_inv else 'differ'}, algebra {'isomorphic' if iso else 'differs'}"


def curve_dictionary(T, max_len: int) -> tuple[bool, str]:
    bq = jacobian_algebra(T)
    q = bq.quiver
    words = enumerate_strings(bq, max_len)
    for w in words:
        c = string_to_curve(T, w)
        if intersection_vector(T, c) != dim_vector(bq, w):
            return False, f"intersection vector differs for {w}"
        if not _same_word(q, w, curve_to_string(T, c)):
            return False, f"round trip fails for {w}"
    bands = enumerate_bands(bq, max_len)
    for b in bands:
        for n in (1, 2):
            if closed_curve_to_band(T, band_to_closed_curve(T, b, n)) != (b, n):
                return False, f"closed round trip fails for {b}^{n}"
    return True, f"{len(words)} strings, {len(bands)} bands"


def _fixture_checks() -> list[Check]:
    out = []
    add = lambda name, ok, detail="": out.append(Check(name, bool(ok), detail))

    inv = surface_invariants(F.octagon())
    add("octagon invariants", (inv.genus, inv.boundary_components, inv.marked_points, inv.internal_arcs) == (0, 1, 8, 5))
    add("octagon quiver", is_isomorphic(jacobian_algebra(F.octagon()), F.octagon_quiver(), fix_vertices=True))

    sq = F.square()
    d = sq.internal_arcs[0]
    fr = flip(sq, d)
    fr2 = flip(fr.triangulation, fr.new_arc)
    back = fr2.triangulation.relabel({fr2.new_arc: d})
    add("square flip involution", back.canonical() == sq.canonical())

    e = F.elevengon_quiver()
    add("11-gon quiver", is_isomorphic(jacobian_algebra(F.elevengon()), e, fix_vertices=True))
    rep = next(r for r in verify_gorenstein_one(e) if r.side == "injective" and r.vertex == "x")
    cover = sorted(y for y, _ in rep.cover)
    kernel = sorted(str(y) for y, _ in rep.kernel)
    add("11-gon resolution of I_x", cover == ["a1", "b2"] and kernel == ["e1", "x"] and rep.kernel_is_projective,
        f"cover {cover}, kernel {kernel}")
    add("11-gon P_e1 simple", len(projective_string(e, "e1")) == 0)
    add("11-gon I_x", _same_word(e.quiver, injective_string(e, "x"), parse_word(e.quiver, "au1 aalpha1 Aalpha2")))

    for p, q, n in ((1, 1, 2), (2, 1, 3)):
        A = generate_annulus(p, q)
        bq = jacobian_algebra(A)
        add(f"annulus({p},{q}) arcs", len(A.internal_arcs) == n and not medial_quiver(A).potential.cycles)
        add(f"annulus({p},{q}) cluster-tilted", classify_cluster_tilted(bq).tag == "TypeAtilde")
        add(f"annulus({p},{q}) one band", len(enumerate_bands(bq, 3 * n)) == 1)

    ex34 = F.double_zero_example()
    dz = [str(w) for w in find_double_zeros(ex34)]
    add("double-zero example", "aphi apsi Abeta aphi apsi" in dz and classify_tilted(ex34).tag == "No")
    add("tilted A example", classify_tilted(F.tilted_a()).tag == "TypeA")
    add("tilted Atilde example", classify_tilted(F.tilted_atilde()).tag == "TypeAtilde")
    add("tilted A relation-extension", is_isomorphic(relation_extension(F.tilted_a()), F.tilted_a_extension(), fix_vertices=True))
    add("tilted Atilde relation-extension", is_isomorphic(relation_extension(F.tilted_atilde()), F.tilted_atilde_extension(), fix_vertices=True))

    S = F.sphere3()
    add("sphere invariants", _invariants_tuple(S) == (0, 3, 3, 6))
    sbq = jacobian_algebra(S)
    add("sphere quiver", is_isomorphic(sbq, F.sphere3_quiver(), fix_vertices=True))
    fq = F.sphere3_quiver()
    q = fq.quiver
    expected = {canonical_band(q, parse_word(q, s)) for s in (F.SPHERE_XI, F.SPHERE_ETA, F.SPHERE_ZETA)}
    got = {b.word for b in enumerate_bands(fq, 4)}
    add("sphere bands of length 4", got == expected, f"{len(got)} bands")
    xi, eta = parse_word(q, F.SPHERE_XI), parse_word(q, F.SPHERE_ETA)
    add("sphere xi, eta composable at b2", composable_at(fq, xi, eta, "b2") is not None)
    add("sphere growth", growth_report(fq, 8).growth_class == "NonPolynomial")
    add("sphere not cluster-tilted", classify_cluster_tilted(fq).tag == "No")
    add("sphere Gorenstein", all(r.kernel_is_projective for r in verify_gorenstein_one(fq)))

    for c in (5, 8):
        bq = jacobian_algebra(generate_disc_fan(c))
        add(f"disc fan {c} cluster-tilted A", classify_cluster_tilted(bq).tag == "TypeA")
        add(f"disc fan {c} no bands", not enumerate_bands(bq, 2 * c))
    return out


def run_selftest(cfg: SelftestConfig = SelftestConfig()) -> SelftestReport:
    report = SelftestReport(cfg)
    report.checks += _fixture_checks()
    for name in ("square", "octagon", "annulus_2_1", "sphere3"):
        ok, detail = curve_dictionary(F.TRIANGULATIONS[name](), cfg.curve_len)
        report.checks.append(Check(f"curve dictionary on {name}", ok, detail))
    rng = random.Random(cfg.seed)
    for k in range(cfg.cases):
        g, b = SURFACE_TYPES[k % len(SURFACE_TYPES)]
        T = random_triangulation(g, b, rng)
        i = surface_invariants(T)
        label = f"case {k} (g={i.genus}, b={i.boundary_components}, c={i.marked_points}, n={i.internal_arcs})"
        formula = i.internal_arcs == 6 * i.genus + 3 * i.boundary_components + i.marked_points - 6
        bq = jacobian_algebra(T)
        gentle = check_gentle(bq).is_gentle
        gor = all(r.kernel_is_projective for r in verify_gorenstein_one(bq))
        fc, fdetail = flip_commutes(T)
        rt, rdetail = round_trip(T)
        ok = formula and gentle and gor and fc and rt and (i.genus, i.boundary_components) == (g, b)
        detail = f"formula={formula} gentle={gentle} gorenstein={gor} flip={fc} ({fdetail}) roundtrip={rt} ({rdetail})"
        report.checks.append(Check(label, ok, detail))
    return report
