import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import triangulations
from gentlesurf import fixtures as F
from gentlesurf.errors import LoopAtVertex, TwoCycleAtVertex, TwoCyclePresent, UnknownVertex
from gentlesurf.quiver import (
    Arrow,
    BoundQuiver,
    Potential,
    Quiver,
    SkewMatrix,
    bound_quiver_from_dict,
    bound_quiver_to_dict,
    from_matrix,
    is_isomorphic,
    jacobian_algebra,
    jacobian_presentation,
    matrix_mutation,
    medial_quiver,
    mutate,
    to_matrix,
)
from gentlesurf.surface import flip, generate_annulus, generate_disc_fan


def linear_a3():
    return Quiver.build([1, 2, 3], [(0, 1, 2), (1, 2, 3)])


def fz_mutation(B, k):
    """Entry-wise matrix mutation, written independently of the library."""
    n = len(B)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -B[i][j]
            else:
                out[i][j] = B[i][j] + (abs(B[i][k]) * B[k][j] + B[i][k] * abs(B[k][j])) // 2
    return out


def test_mutate_linear_a3_at_middle():
    M = mutate(linear_a3(), 2)
    assert sorted(M.arrow_counts().elements()) == [(1, 3), (2, 1), (3, 2)]


def test_mutate_is_an_involution():
    Q = linear_a3()
    for k in Q.vertices:
        assert mutate(mutate(Q, k), k).arrow_counts() == Q.arrow_counts()


def test_mutate_errors():
    with pytest.raises(UnknownVertex, match="unknown vertex"):
        mutate(linear_a3(), 99)
    with pytest.raises(LoopAtVertex):
        mutate(Quiver.build([1], [(0, 1, 1)]), 1)
    with pytest.raises(TwoCycleAtVertex):
        mutate(Quiver.build([1, 2], [(0, 1, 2), (1, 2, 1)]), 1)


def test_matrix_examples():
    assert to_matrix(Quiver.build([1, 2], [(0, 1, 2)])).to_list() == [[0, 1], [-1, 0]]
    kron = medial_quiver(generate_annulus(1, 1)).quiver
    B = to_matrix(kron).to_list()
    assert B in ([[0, 2], [-2, 0]], [[0, -2], [2, 0]])
    with pytest.raises(TwoCyclePresent):
        to_matrix(Quiver.build([1, 2], [(0, 1, 2), (1, 2, 1)]))


def test_from_matrix_round_trip():
    Q = medial_quiver(F.sphere3()).quiver
    assert from_matrix(to_matrix(Q)).arrow_counts() == Q.arrow_counts()


def test_octagon_medial_quiver_matches_drawing():
    assert is_isomorphic(jacobian_algebra(F.octagon()), F.octagon_quiver(), fix_vertices=True)


def test_elevengon_medial_quiver_matches_drawing():
    assert is_isomorphic(jacobian_algebra(F.elevengon()), F.elevengon_quiver(), fix_vertices=True)


def test_mirrored_convention_is_detected():
    # reversing every triangle mirrors the surface and reverses every arrow
    from gentlesurf.surface import Triangulation

    T = F.elevengon()
    M = Triangulation.build(T.internal_arcs, T.boundary_arcs, [tuple(reversed(t)) for t in T.triangles])
    assert not is_isomorphic(jacobian_algebra(M), F.elevengon_quiver(), fix_vertices=True)


def test_sphere_potential_and_relations():
    Q, W = medial_quiver(F.sphere3())
    assert len(W.cycles) == 2
    bq = jacobian_presentation(Q, W)
    assert len(bq.relations) == 6
    assert is_isomorphic(bq, F.sphere3_quiver(), fix_vertices=True)


def test_small_cases():
    Q, W = medial_quiver(generate_disc_fan(4))
    assert (len(Q.vertices), len(Q.arrows), W.cycles) == (1, 0, ())
    Q, W = medial_quiver(generate_disc_fan(5))
    assert (len(Q.vertices), len(Q.arrows)) == (2, 1)
    assert jacobian_presentation(Q, Potential()).relations == ()
    for p, q in ((1, 1), (2, 1), (3, 4)):
        assert medial_quiver(generate_annulus(p, q)).potential.cycles == ()


def test_disc_fan_is_linear():
    Q = medial_quiver(generate_disc_fan(8)).quiver
    assert sorted(Q.arrow_counts()) == [(1, 0), (2, 1), (3, 2), (4, 3)]


def test_one_cycle_relations():
    Q = Quiver.build([1, 2, 3], [("a", 1, 2), ("b", 2, 3), ("c", 3, 1)])
    bq = jacobian_presentation(Q, Potential((("a", "b", "c"),)))
    assert set(bq.relations) == {("a", "b"), ("b", "c"), ("c", "a")}


def test_json_round_trip():
    bq = F.sphere3_quiver()
    assert bound_quiver_from_dict(bound_quiver_to_dict(bq)) == bq
    Q, W = medial_quiver(F.sphere3())
    doc = bound_quiver_to_dict(BoundQuiver.build(Q, []), W)
    assert bound_quiver_from_dict(doc) == jacobian_presentation(Q, W)


@given(triangulations())
def test_no_short_cycles_and_degree_bound(T):
    Q = medial_quiver(T).quiver
    assert Q.loops() == [] and Q.two_cycles() == []
    for v in Q.vertices:
        assert len(Q.in_arrows(v)) <= 2 and len(Q.out_arrows(v)) <= 2


@given(triangulations())
def test_flip_commutes_with_mutation(T):
    Q = medial_quiver(T).quiver
    for d in T.internal_arcs:
        fr = flip(T, d)
        Q2 = medial_quiver(fr.triangulation).quiver.relabel_vertices({fr.new_arc: d})
        assert mutate(Q, d).arrow_counts() == Q2.arrow_counts()


@st.composite
def skew_quivers(draw):
    n = draw(st.integers(2, 6))
    arrows = []
    for i in range(n):
        for j in range(i + 1, n):
            m = draw(st.integers(-2, 2))
            s, t = (i, j) if m > 0 else (j, i)
            arrows += [(s, t)] * abs(m)
    return Quiver.build(range(n), [(k, s, t) for k, (s, t) in enumerate(arrows)])


@given(skew_quivers(), st.data())
def test_matrix_of_mutation(Q, data):
    k = data.draw(st.sampled_from(Q.vertices))
    B = to_matrix(Q)
    assert to_matrix(mutate(Q, k)) == B.mutate(k)
    assert to_matrix(mutate(Q, k)).to_list() == fz_mutation(B.to_list(), B.index(k))
    assert np.array_equal(matrix_mutation(np.array(B.to_list()), B.index(k)), np.array(fz_mutation(B.to_list(), B.index(k))))


@given(skew_quivers(), st.data())
def test_mutation_involution_random(Q, data):
    k = data.draw(st.sampled_from(Q.vertices))
    assert mutate(mutate(Q, k), k).arrow_counts() == Q.arrow_counts()


def test_string_arrow_ids_in_mutation():
    Q = Quiver.build(["x", "y", "z"], [("p", "x", "y"), ("r", "y", "z"), ("s", "z", "x")])
    M = mutate(Q, "y")
    # the composite x -> z cancels against s: z -> x
    assert sorted(M.arrow_counts().elements()) == [("y", "x"), ("z", "y")]
