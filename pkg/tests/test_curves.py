import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import triangulations
from gentlesurf import fixtures as F
from gentlesurf.curves import (
    ClosedCurve,
    Curve,
    band_to_closed_curve,
    closed_curve_to_band,
    curve_to_string,
    intersection_vector,
    string_to_curve,
)
from gentlesurf.errors import ArcHomotopicCurve, NotReduced, NotReducedClosed, WordNotBand, WordNotString
from gentlesurf.quiver import bound_quiver_isomorphism, jacobian_algebra
from gentlesurf.strings import Band, Letter, Word, canonical_band, dim_vector, enumerate_bands, enumerate_strings, parse_word
from gentlesurf.surface import generate_annulus


def same_word(q, w, v):
    return v == w or v == w.inverse(q)


def sphere_word(T, text):
    """A named sphere word moved onto the integer arrow ids of the medial quiver."""
    named = F.sphere3_quiver()
    iso = bound_quiver_isomorphism(named, jacobian_algebra(T), fix_vertices=True)
    w = parse_word(named.quiver, text)
    return Word(w.start, tuple(Letter(iso["arrows"][L.arrow], L.direction) for L in w.letters))


@pytest.mark.parametrize("name", ["square", "octagon", "elevengon", "annulus_1_1", "annulus_2_1", "sphere3"])
def test_string_curve_round_trip(name):
    T = F.TRIANGULATIONS[name]()
    b = jacobian_algebra(T)
    keys = set()
    for w in enumerate_strings(b, 7):
        c = string_to_curve(T, w)
        assert intersection_vector(T, c) == dim_vector(b, w)
        assert same_word(b.quiver, w, curve_to_string(T, c))
        # triangles are optional on input
        assert same_word(b.quiver, w, curve_to_string(T, Curve(c.start, c.end, c.crossings)))
        keys.add(c.key())
    assert len(keys) == len(enumerate_strings(b, 7))


@given(triangulations(max_extra_points=1))
def test_round_trip_random(T):
    b = jacobian_algebra(T)
    for w in enumerate_strings(b, 4):
        c = string_to_curve(T, w)
        assert same_word(b.quiver, w, curve_to_string(T, c))
        assert same_word(b.quiver, w, curve_to_string(T, c.reversed()))


def test_trivial_string_is_a_diagonal_crossing():
    T = F.square()
    (d,) = T.internal_arcs
    c = string_to_curve(T, parse_word(jacobian_algebra(T).quiver, f"e{d}"))
    assert c.crossings == (d,) and c.start != c.end


def test_curve_errors():
    T = F.octagon()
    b = jacobian_algebra(T)
    w = next(w for w in enumerate_strings(b, 3) if len(w) == 2)
    c = string_to_curve(T, w)
    with pytest.raises(ArcHomotopicCurve):
        curve_to_string(T, Curve(c.start, c.end, ()))
    x = c.crossings[0]
    with pytest.raises(NotReduced):
        curve_to_string(T, Curve(c.start, c.end, (x, x) + c.crossings[1:]))
    with pytest.raises(NotReduced):
        curve_to_string(T, Curve(c.end, c.end, c.crossings, c.triangles))
    with pytest.raises(NotReduced):
        curve_to_string(T, Curve(c.start, c.end, c.crossings[:1] + ("nope",)))


def test_non_string_rejected():
    T = F.octagon()
    b = jacobian_algebra(T)
    a, c = b.relations[0]
    with pytest.raises(WordNotString):
        string_to_curve(T, Word(b.quiver.arrow[a].source, (Letter(a, 1), Letter(c, 1))))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_annulus_band_powers(n):
    T = generate_annulus(2, 1)
    (band,) = enumerate_bands(jacobian_algebra(T), 9)
    cc = band_to_closed_curve(T, band, n)
    assert len(cc.crossings) == n * len(band)
    assert closed_curve_to_band(T, cc) == (band, n)
    b2, k = closed_curve_to_band(T, ClosedCurve(cc.crossings))
    assert k == n and canonical_band(jacobian_algebra(T).quiver, b2.word) == band.word


def test_sphere_xi_eta_closed_curve():
    T = F.sphere3()
    q = jacobian_algebra(T).quiver
    xi = canonical_band(q, sphere_word(T, F.SPHERE_XI))
    eta = canonical_band(q, sphere_word(T, F.SPHERE_ETA))
    from gentlesurf.strings import composable_at

    r1, r2 = composable_at(jacobian_algebra(T), xi, eta, "b2")
    w = r1 + r2
    cc = band_to_closed_curve(T, Band(w))
    assert len(cc.crossings) == 8
    back, n = closed_curve_to_band(T, cc)
    assert n == 1 and back.word == w


@given(st.sampled_from(["annulus_1_1", "annulus_2_1", "sphere3"]), st.integers(1, 3))
def test_band_dictionary(name, n):
    T = F.TRIANGULATIONS[name]()
    b = jacobian_algebra(T)
    for band in enumerate_bands(b, 6):
        cc = band_to_closed_curve(T, band, n)
        assert intersection_vector(T, cc) == {k: n * v for k, v in dim_vector(b, band).items()}
        assert closed_curve_to_band(T, cc) == (band, n)


def test_band_errors():
    T = F.sphere3()
    xi = sphere_word(T, F.SPHERE_XI)
    with pytest.raises(WordNotBand):
        band_to_closed_curve(T, xi + xi)
    with pytest.raises(WordNotBand):
        band_to_closed_curve(T, xi, 0)
    with pytest.raises(NotReducedClosed):
        closed_curve_to_band(T, ClosedCurve(()))
    cc = band_to_closed_curve(T, xi)
    with pytest.raises(NotReducedClosed):
        closed_curve_to_band(T, ClosedCurve(cc.crossings[:1] * 2))
