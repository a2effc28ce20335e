import random

import pytest
from hypothesis import given

from conftest import triangulations
from gentlesurf import fixtures as F
from gentlesurf.errors import InvalidTriangulation, NotInternalArc, TooFewMarkedPoints
from gentlesurf.surface import (
    Triangulation,
    check_valid,
    flip,
    generate_annulus,
    generate_disc_fan,
    load_triangulation,
    surface_invariants,
    triangulation_from_dict,
    triangulation_to_dict,
    validate_triangulation,
)


def inv(T):
    i = surface_invariants(T)
    return (i.genus, i.boundary_components, i.marked_points, i.internal_arcs)


def test_disc_fan_eight_points():
    T = generate_disc_fan(8)
    assert validate_triangulation(T) == []
    assert inv(T) == (0, 1, 8, 5)


@pytest.mark.parametrize("c", [4, 5, 6, 11])
def test_disc_fan_arc_count(c):
    assert inv(generate_disc_fan(c)) == (0, 1, c, c - 3)


def test_disc_fan_too_small():
    with pytest.raises(TooFewMarkedPoints):
        generate_disc_fan(3)


@pytest.mark.parametrize("p,q", [(1, 1), (2, 1), (1, 3), (3, 2)])
def test_annulus(p, q):
    assert inv(generate_annulus(p, q)) == (0, 2, p + q, p + q)


def test_sphere_with_three_holes():
    assert inv(F.sphere3()) == (0, 3, 3, 6)


def test_repeated_arc_in_triangle():
    T = Triangulation.build([0], [1, 2], [(0, 0, 1), (2, 1, 2)])
    assert any("repeated arc in triangle" in m for m in validate_triangulation(T))


def test_arc_multiplicity():
    T = Triangulation.build([0], [1, 2, 3, 4, 5, 6], [(0, 1, 2), (0, 3, 4), (0, 5, 6)])
    assert any("arc multiplicity" in m for m in validate_triangulation(T))
    with pytest.raises(InvalidTriangulation):
        surface_invariants(T)


def test_puncture_rejected():
    # two triangles glued along all three sides: a sphere with three punctures
    T = Triangulation.build([0, 1, 2], [], [(0, 1, 2), (0, 2, 1)])
    assert validate_triangulation(T)


def test_flip_boundary_arc_rejected():
    T = generate_disc_fan(5)
    with pytest.raises(NotInternalArc):
        flip(T, T.boundary_arcs[0])


def test_flip_formula():
    T = generate_disc_fan(4)
    (d,) = T.internal_arcs
    fr = flip(T, d)
    (t1, t2) = [t for t in T.triangles if d in t]
    i1, i2 = t1.index(d), t2.index(d)
    _, x, y = t1[i1:] + t1[:i1]
    _, z, w = t2[i2:] + t2[:i2]
    tris = {tuple(t) for t in fr.triangulation.triangles}
    rot = lambda t: {t, t[1:] + t[:1], t[2:] + t[:2]}
    assert rot((fr.new_arc, y, z)) & tris
    assert rot((fr.new_arc, w, x)) & tris


def test_square_flip_twice_restores():
    T = F.square()
    d = T.internal_arcs[0]
    f1 = flip(T, d)
    f2 = flip(f1.triangulation, f1.new_arc)
    assert f2.triangulation.relabel({f2.new_arc: d}).canonical() == T.canonical()


@given(triangulations())
def test_arc_count_identity(T):
    i = surface_invariants(T)
    assert i.internal_arcs == 6 * i.genus + 3 * i.boundary_components + i.marked_points - 6
    # Euler characteristic from the rotation system
    E = len(T.internal_arcs) + len(T.boundary_arcs)
    assert i.marked_points - E + len(T.triangles) == 2 - 2 * i.genus - i.boundary_components


@given(triangulations())
def test_flip_is_an_involution_and_preserves_invariants(T):
    for d in T.internal_arcs:
        f1 = flip(T, d)
        assert inv(f1.triangulation) == inv(T)
        f2 = flip(f1.triangulation, f1.new_arc)
        assert f2.triangulation.relabel({f2.new_arc: d}).canonical() == T.canonical()


@given(triangulations())
def test_json_round_trip(T):
    assert triangulation_from_dict(triangulation_to_dict(T)) == T


def test_fixture_files_load(fixtures_dir):
    for path in sorted(fixtures_dir.glob("*.tri")):
        check_valid(load_triangulation(path))
    assert inv(load_triangulation(fixtures_dir / "sphere3.tri")) == (0, 3, 3, 6)


def test_random_triangulation_types():
    rng = random.Random(3)
    from gentlesurf.surface import random_triangulation

    for g in (0, 1):
        for b in (1, 2, 3):
            i = surface_invariants(random_triangulation(g, b, rng))
            assert (i.genus, i.boundary_components) == (g, b)
