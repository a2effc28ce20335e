"""Worked examples used by the tests, the acceptance run and ``selftest``.

Polygon examples are built from vertex coordinates so that arc names match
the labels of the original drawings; vertices are listed counterclockwise.
"""

from __future__ import annotations

from .quiver import BoundQuiver, Quiver
from .surface import Triangulation, generate_annulus, generate_disc_fan, polygon_triangulation

# octagon: vertices counterclockwise around a 120x120 square with cut corners
OCTAGON_POINTS = [(40, 0), (80, 0), (120, 40), (120, 80), (80, 120), (40, 120), (0, 80), (0, 40)]
OCTAGON_DIAGONALS = {"d64": (6, 4), "d74": (7, 4), "d71": (7, 1), "d14": (1, 4), "d13": (1, 3)}
OCTAGON_ARROWS = [("d74", "d64"), ("d14", "d74"), ("d74", "d71"), ("d71", "d14"), ("d14", "d13")]
# d14, d74, d71 bound an internal triangle
OCTAGON_RELATIONS = [("d14_d74", "d74_d71"), ("d74_d71", "d71_d14"), ("d71_d14", "d14_d74")]

ELEVEN_POINTS = [
    (0, 0), (40, 0), (80, 0), (120, 0), (120, 40), (120, 80),
    (120, 120), (80, 120), (0, 120), (0, 80), (0, 40),
]
ELEVEN_DIAGONALS = {
    "e1": (1, 10),
    "a1": (2, 10),
    "b1": (2, 9),
    "c1": (9, 7),
    "x": (2, 7),
    "b2": (5, 7),
    "c2": (2, 5),
    "d2": (2, 4),
}
ELEVEN_ARROWS = {
    "u1": ("a1", "b1"),
    "gamma1": ("a1", "e1"),
    "alpha1": ("b1", "x"),
    "delta1": ("c1", "b1"),
    "beta1": ("x", "c1"),
    "beta2": ("x", "c2"),
    "alpha2": ("b2", "x"),
    "delta2": ("c2", "b2"),
    "v2": ("c2", "d2"),
}
ELEVEN_RELATIONS = [
    ("alpha1", "beta1"), ("beta1", "delta1"), ("delta1", "alpha1"),
    ("alpha2", "beta2"), ("beta2", "delta2"), ("delta2", "alpha2"),
]


def _polygon(points, diagonals: dict) -> Triangulation:
    names = list(diagonals)
    return polygon_triangulation(len(points), [diagonals[k] for k in names], diagonal_labels=names)


def octagon() -> Triangulation:
    return _polygon(OCTAGON_POINTS, OCTAGON_DIAGONALS)


def octagon_quiver() -> BoundQuiver:
    arrows = [(f"{s}_{t}", s, t) for s, t in OCTAGON_ARROWS]
    return BoundQuiver.build(Quiver.build(OCTAGON_DIAGONALS, arrows), OCTAGON_RELATIONS)


def elevengon() -> Triangulation:
    return _polygon(ELEVEN_POINTS, ELEVEN_DIAGONALS)


def elevengon_quiver() -> BoundQuiver:
    arrows = [(k, s, t) for k, (s, t) in ELEVEN_ARROWS.items()]
    return BoundQuiver.build(Quiver.build(ELEVEN_DIAGONALS, arrows), ELEVEN_RELATIONS)


def square() -> Triangulation:
    return generate_disc_fan(4)


def annulus_1_1() -> Triangulation:
    return generate_annulus(1, 1)


def annulus_2_1() -> Triangulation:
    return generate_annulus(2, 1)


def sphere3() -> Triangulation:
    """Sphere with three holes, one marked point on each."""
    return Triangulation.build(
        ["a1", "b1", "c1", "a2", "b2", "c2"],
        ["dA", "dB", "dC"],
        [("a1", "b1", "c1"), ("b2", "a2", "c2"), ("a1", "a2", "dA"), ("b1", "b2", "dB"), ("c1", "c2", "dC")],
    )


SPHERE_ARROWS = {
    "rho1": ("a1", "b1"),
    "sigma1": ("b1", "c1"),
    "eps1": ("c1", "a1"),
    "sigma2": ("b2", "a2"),
    "eps2": ("a2", "c2"),
    "rho2": ("c2", "b2"),
    "alpha": ("a1", "a2"),
    "beta": ("b1", "b2"),
    "gamma": ("c1", "c2"),
}
SPHERE_RELATIONS = [
    ("eps1", "rho1"), ("rho1", "sigma1"), ("sigma1", "eps1"),
    ("eps2", "rho2"), ("rho2", "sigma2"), ("sigma2", "eps2"),
]
# the two bands of length four, read from b2
SPHERE_XI = "asigma2 Aalpha arho1 abeta"
SPHERE_ETA = "Arho2 Agamma Asigma1 abeta"
# a third band of length four, around the remaining pair of tubes
SPHERE_ZETA = "aalpha aeps2 Agamma aeps1"


def sphere3_quiver() -> BoundQuiver:
    arrows = [(k, s, t) for k, (s, t) in SPHERE_ARROWS.items()]
    return BoundQuiver.build(Quiver.build(["a1", "b1", "c1", "a2", "b2", "c2"], arrows), SPHERE_RELATIONS)


def double_zero_example() -> BoundQuiver:
    """Gentle algebra with one cycle and a double zero."""
    arrows = [
        ("beta", "P1", "P2"),
        ("phi", "P1", "M"),
        ("alpha", "L", "P1"),
        ("gamma", "L", "B1"),
        ("psi", "M", "P2"),
        ("eps", "M", "B2"),
        ("delta", "B1", "M"),
    ]
    q = Quiver.build(["P1", "P2", "M", "L", "B1", "B2"], arrows)
    return BoundQuiver.build(q, [("alpha", "beta"), ("phi", "psi"), ("delta", "eps")])


def tilted_a() -> BoundQuiver:
    arrows = [("alpha", "A", "M"), ("beta", "M", "C"), ("gamma", "M", "E"), ("delta", "E", "D")]
    return BoundQuiver.build(Quiver.build(["A", "M", "C", "E", "D"], arrows), [("alpha", "beta")])


def tilted_a_extension() -> BoundQuiver:
    arrows = [("alpha", "A", "M"), ("beta", "M", "C"), ("gamma", "M", "E"), ("delta", "E", "D"), ("iota", "C", "A")]
    rels = [("alpha", "beta"), ("iota", "alpha"), ("beta", "iota")]
    return BoundQuiver.build(Quiver.build(["A", "M", "C", "E", "D"], arrows), rels)


def tilted_atilde() -> BoundQuiver:
    arrows = [
        ("phi", "P", "Q"),
        ("beta", "Q", "R"),
        ("alpha", "L", "Q"),
        ("gamma", "L", "B"),
        ("psi", "S", "B"),
        ("delta", "B", "R"),
    ]
    q = Quiver.build(["P", "Q", "R", "L", "B", "S"], arrows)
    return BoundQuiver.build(q, [("alpha", "beta"), ("gamma", "delta")])


def tilted_atilde_extension() -> BoundQuiver:
    base = tilted_atilde()
    arrows = list(base.quiver.arrows) + [("rho", "R", "L"), ("sigma", "R", "L")]
    rels = list(base.relations) + [("rho", "alpha"), ("beta", "rho"), ("sigma", "gamma"), ("delta", "sigma")]
    return BoundQuiver.build(Quiver.build(base.quiver.vertices, arrows), rels)


TRIANGULATIONS = {
    "square": square,
    "octagon": octagon,
    "elevengon": elevengon,
    "annulus_1_1": annulus_1_1,
    "annulus_2_1": annulus_2_1,
    "sphere3": sphere3,
}

BOUND_QUIVERS = {
    "double_zero_example": double_zero_example,
    "tilted_a": tilted_a,
    "tilted_a_ext": tilted_a_extension,
    "tilted_atilde": tilted_atilde,
    "tilted_atilde_ext": tilted_atilde_extension,
    "sphere3_quiver": sphere3_quiver,
    "elevengon_quiver": elevengon_quiver,
}
