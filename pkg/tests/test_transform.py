import random

import pytest

from panoptigon.core import convex_hull
from panoptigon.transform import (
    Functional,
    UnimodularMap,
    are_equivalent,
    canonical_form,
    lattice_diameter,
    lattice_width,
    width_wrt,
)

from conftest import random_polygon_2d


def test_functional_normalization():
    assert Functional.normalized(2, 4) == Functional(1, 2)
    assert Functional.normalized(-1, 3) == Functional(1, -3)
    assert Functional.normalized(0, -5) == Functional(0, 1)
    with pytest.raises(ValueError):
        Functional.normalized(0, 0)


def test_unimodular_map_requires_unit_determinant():
    with pytest.raises(ValueError):
        UnimodularMap(((2, 0), (0, 1)))
    m = UnimodularMap(((1, 1), (0, 1)), (3, -2))
    assert m.determinant == 1
    assert m.apply_point((1, 1)) == (5, -1)


def test_unimodular_inverse_roundtrip():
    rng = random.Random(99)
    for _ in range(50):
        m = UnimodularMap.random(rng)
        inv = m.inverse()
        for p in [(0, 0), (3, -2), (7, 11)]:
            assert inv.apply_point(m.apply_point(p)) == p


def test_lattice_width_of_standard_shapes():
    t3 = convex_hull([(0, 0), (3, 0), (0, 3)])
    assert lattice_width(t3)[0] == 3
    strip = convex_hull([(0, 0), (5, 0), (5, 1), (0, 1)])
    w, dirs = lattice_width(strip)
    assert w == 1
    assert Functional(0, 1) in dirs


def test_lattice_width_unimodular_invariance():
    rng = random.Random(7)
    for _ in range(40):
        poly = random_polygon_2d(rng)
        m = UnimodularMap.random(rng)
        assert lattice_width(poly)[0] == lattice_width(m(poly))[0]


def test_lattice_width_doubled_bound_oracle():
    rng = random.Random(13)
    for _ in range(40):
        poly = random_polygon_2d(rng, span=4)
        w, _ = lattice_width(poly)
        xmin, ymin, xmax, ymax = poly.bounding_box()
        bound = 2 * (max(xmax - xmin, ymax - ymin) + 1)
        assert w == lattice_width(poly, bound=bound)[0]


def test_lattice_diameter_examples():
    t3 = convex_hull([(0, 0), (3, 0), (0, 3)])
    assert lattice_diameter(t3)[0] == 3
    seg_heavy = convex_hull([(0, 0), (6, 0), (0, 1)])
    assert lattice_diameter(seg_heavy)[0] == 6


def test_canonical_form_idempotent_and_invariant():
    rng = random.Random(2024)
    for _ in range(40):
        poly = random_polygon_2d(rng)
        canon = canonical_form(poly)
        assert canonical_form(canon) == canon
        m = UnimodularMap.random(rng)
        assert canonical_form(m(poly)) == canon


def test_canonical_form_rejects_degenerate():
    with pytest.raises(ValueError):
        canonical_form(convex_hull([(0, 0), (1, 0)]))


def test_are_equivalent():
    t3 = convex_hull([(0, 0), (3, 0), (0, 3)])
    sheared = convex_hull([(0, 0), (3, 3), (-3, 0)])  # x -> x+y, y -> -x image
    assert are_equivalent(t3, UnimodularMap(((1, 1), (0, 1)))(t3))
    square = convex_hull([(0, 0), (3, 0), (3, 3), (0, 3)])
    assert not are_equivalent(t3, square)


def test_width_wrt():
    poly = convex_hull([(0, 0), (4, 0), (0, 2)])
    assert width_wrt(poly, Functional(1, 0)) == 4
    assert width_wrt(poly, Functional(0, 1)) == 2
