import random
import re

import pytest
from hypothesis import given, settings, strategies as st

from orjsj import oracle
from orjsj.errors import EmptyInputError, EmptyWordError, NotASummandError, NotInDerivedSubgroupError
from orjsj.polytope import (
    UNIT_SQUARE,
    LatticePolytope,
    Point,
    PolytopeClass,
    classify,
    convex_hull,
    erode_unit_square,
    ft_polytope,
    minkowski_sum,
    trace_loop,
    trace_polytope,
)
from orjsj.subgroup import find_representative
from orjsj.svg import render_svg
from orjsj.whitehead import commutator_power, shortest_orbit_set
from orjsj.words import Word, concat, cyclic_reduce, free_reduce, invert, max_root

P = Point
PENTAGON = LatticePolytope((P(0, 0), P(2, 0), P(2, 2), P(1, 2), P(0, 1)))
TRIANGLE = LatticePolytope((P(0, 0), P(1, 0), P(1, 1)))


def _inside(poly, q):
    vs = poly.vertices
    if len(vs) < 3:
        return q in vs
    n = len(vs)
    return all(
        (vs[(i + 1) % n].x - vs[i].x) * (q.y - vs[i].y)
        - (vs[(i + 1) % n].y - vs[i].y) * (q.x - vs[i].x) >= 0
        for i in range(n)
    )


def erosion_oracle(poly):
    """Lattice points x with x + corner inside ``poly`` for all four corners."""
    xs = [v.x for v in poly.vertices]
    ys = [v.y for v in poly.vertices]
    pts = [
        P(x, y)
        for x in range(min(xs) - 1, max(xs) + 1)
        for y in range(min(ys) - 1, max(ys) + 1)
        if all(_inside(poly, P(x, y) + c) for c in UNIT_SQUARE.vertices)
    ]
    return convex_hull(pts)


def test_trace_loop_figure():
    assert trace_loop(Word("aabbABAB")) == [
        P(0, 0), P(1, 0), P(2, 0), P(2, 1), P(2, 2), P(1, 2), P(1, 1), P(0, 1), P(0, 0)
    ]
    assert trace_loop(Word("abAB")) == [P(0, 0), P(1, 0), P(1, 1), P(0, 1), P(0, 0)]
    loop = trace_loop(Word("ab"))
    assert loop == [P(0, 0), P(1, 0), P(1, 1)] and loop[0] != loop[-1]


def test_convex_hull_examples():
    assert convex_hull(trace_loop(Word("aabbABAB"))) == PENTAGON
    assert convex_hull([P(0, 0)]).dim == 0
    seg = convex_hull([P(0, 0), P(1, 0), P(2, 0)])
    assert seg.vertices == (P(0, 0), P(2, 0)) and seg.dim == 1
    with pytest.raises(EmptyInputError):
        convex_hull([])


def test_erode_examples():
    assert erode_unit_square(PENTAGON) == TRIANGLE
    assert erode_unit_square(UNIT_SQUARE) == LatticePolytope((P(0, 0),))
    rect = convex_hull([P(-2, -1), P(0, -1), P(0, 0), P(-2, 0)])
    assert erosion_oracle(rect).vertices == (P(-2, -1), P(-1, -1))
    assert erode_unit_square(rect).vertices == (P(-2, -1), P(-1, -1))
    assert convex_hull(trace_loop(Word("AABaab"))) == rect


def test_erode_rejects_non_summands():
    with pytest.raises(NotASummandError):
        erode_unit_square(convex_hull([P(0, 0), P(2, 0), P(0, 2)]))
    with pytest.raises(NotASummandError):
        erode_unit_square(convex_hull([P(0, 0), P(3, 0)]))


def test_minkowski_examples():
    assert minkowski_sum(TRIANGLE, UNIT_SQUARE) == PENTAGON
    assert minkowski_sum(LatticePolytope((P(2, 3),)), TRIANGLE) == TRIANGLE.translate(P(2, 3))
    assert minkowski_sum(convex_hull([P(0, 0), P(1, 0)]), convex_hull([P(0, 0), P(0, 1)])) == UNIT_SQUARE


def test_ft_polytope_examples():
    assert ft_polytope(Word("aabbABAB")) == TRIANGLE
    cube = free_reduce("aabbABAB" * 3)
    assert ft_polytope(cube).vertices == (P(0, 0), P(3, 0), P(3, 3))
    assert ft_polytope(Word("AABaab")).vertices == (P(0, 0), P(1, 0))


def test_ft_polytope_errors():
    with pytest.raises(EmptyWordError):
        ft_polytope(Word())
    with pytest.raises(NotInDerivedSubgroupError):
        ft_polytope(Word("ab"))


def test_classify_examples():
    assert classify(ft_polytope(Word("abAB"))) is PolytopeClass.Point
    assert classify(ft_polytope(Word("AABaab"))) is PolytopeClass.Segment
    assert classify(ft_polytope(Word("aabbABAB"))) is PolytopeClass.TwoDimensional


def test_json_form():
    assert ft_polytope(Word("aabbABAB")).to_json() == {
        "class": "2d",
        "vertices": [[0, 0], [1, 0], [1, 1]],
    }
    assert ft_polytope(Word("abAB")).to_json()["class"] == "point"


def _ft_markers(svg):
    panel = re.search(r'<g id="panel-ft">(.*?)</g>', svg).group(1)
    return panel.count('class="ft-vertex"')


@pytest.mark.parametrize("w, markers", [("aabbABAB", 3), ("abAB", 1), ("AABaab", 2)])
def test_render_svg(w, markers):
    svg = render_svg(Word(w))
    assert svg.startswith("<?xml") and svg.rstrip().endswith("</svg>")
    assert svg.count("<g id=") == 4
    assert _ft_markers(svg) == markers
    assert svg == render_svg(Word(w))


def test_render_svg_is_wellformed_xml():
    import xml.etree.ElementTree as ET

    ET.fromstring(render_svg(Word("aabbABAB")).split("\n", 1)[1])


def test_render_svg_rejects_non_derived():
    with pytest.raises(NotInDerivedSubgroupError):
        render_svg(Word("ab"))


derived = st.integers(0, 100_000).flatmap(
    lambda seed: st.just(oracle.random_derived_word(seed, 4 + 2 * (seed % 12)))
)


@settings(max_examples=80, deadline=None)
@given(derived)
def test_erosion_matches_lattice_oracle(w):
    hull = convex_hull(trace_loop(w))
    assert erode_unit_square(hull) == erosion_oracle(hull)


@settings(max_examples=80, deadline=None)
@given(derived)
def test_round_trip(w):
    assert minkowski_sum(trace_polytope(w), UNIT_SQUARE) == convex_hull(trace_loop(w))


@settings(max_examples=60, deadline=None)
@given(derived, st.text(alphabet="aAbB", max_size=6))
def test_conjugation_invariance(w, u):
    u = free_reduce(u)
    assert ft_polytope(concat(concat(u, w), invert(u))) == ft_polytope(w)


@settings(max_examples=40, deadline=None)
@given(derived, st.integers(1, 4))
def test_power_scaling(w, n):
    # w may itself be a proper power.
    _, k = max_root(w)
    base = trace_polytope(w)
    raw = ft_polytope(free_reduce(w.letters * n))
    assert raw == base.scale(k * n).normalized()
    assert all(isinstance(c, int) for v in raw.vertices for c in v)


def test_point_iff_commutator_power():
    rng = random.Random(5)
    words = [oracle.random_derived_word(rng, rng.randrange(4, 24, 2)) for _ in range(150)]
    words += [free_reduce("abAB" * k) for k in (1, 2, 3)]
    words += [free_reduce("ba" + "baBA" * 2 + "AB")]
    for w in words:
        point = classify(ft_polytope(w)) is PolytopeClass.Point
        assert point == (commutator_power(w) is not None), w


def test_line_iff_orbit_meets_subgroup():
    for w in oracle.theorem_a_corpus(9, 90, max_len=24):
        line = classify(ft_polytope(w)) is not PolytopeClass.TwoDimensional
        rep = find_representative(shortest_orbit_set(cyclic_reduce(w)[1]))
        assert line == (rep is not None), w
