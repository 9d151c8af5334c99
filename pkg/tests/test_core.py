import random

import pytest

from panoptigon.core import Polygon, convex_hull, is_visible, visible_from

from conftest import random_polygon


def bbox_lattice_points(poly: Polygon) -> frozenset:
    xmin, ymin, xmax, ymax = poly.bounding_box()
    return frozenset(
        (x, y)
        for x in range(xmin, xmax + 1)
        for y in range(ymin, ymax + 1)
        if poly.contains((x, y))
    )


def test_visibility_is_gcd_one():
    assert is_visible((0, 0), (1, 0))
    assert is_visible((0, 0), (2, 3))
    assert not is_visible((0, 0), (2, 2))
    assert not is_visible((1, 1), (3, 5))  # difference (2,4)
    assert is_visible((4, 7), (4, 7))  # self-visibility by convention


def test_visible_from_filters():
    pts = [(0, 0), (1, 0), (2, 0), (1, 1), (2, 2)]
    assert visible_from((0, 0), pts) == frozenset({(0, 0), (1, 0), (1, 1)})


def test_hull_orientation_and_start_vertex():
    poly = convex_hull([(2, 2), (0, 0), (2, 0), (0, 2), (1, 1)])
    assert poly.vertices == ((0, 0), (2, 0), (2, 2), (0, 2))


def test_hull_drops_collinear_boundary_points():
    poly = convex_hull([(0, 0), (1, 0), (2, 0), (0, 2)])
    assert poly.vertices == ((0, 0), (2, 0), (0, 2))


def test_degenerate_dimensions():
    assert convex_hull([(3, 4)]).dimension == 0
    assert convex_hull([(0, 0), (2, 4), (1, 2)]).dimension == 1
    assert convex_hull([(0, 0), (1, 0), (0, 1)]).dimension == 2


def test_double_area_shoelace():
    assert convex_hull([(0, 0), (1, 0), (0, 1)]).double_area == 1
    assert convex_hull([(0, 0), (3, 0), (0, 3)]).double_area == 9
    assert convex_hull([(0, 0), (2, 0), (2, 2), (0, 2)]).double_area == 8


def test_contains_boundary_and_exterior():
    poly = convex_hull([(0, 0), (4, 0), (0, 4)])
    assert poly.contains((0, 0))
    assert poly.contains((2, 2))  # on the slanted edge
    assert poly.contains((1, 1))
    assert not poly.contains((3, 3))
    assert not poly.contains((-1, 0))


def test_lattice_points_of_standard_triangle():
    poly = convex_hull([(0, 0), (3, 0), (0, 3)])
    assert len(poly.lattice_point_set) == 10
    assert poly.interior_point_set == frozenset({(1, 1)})
    assert poly.genus == 1


def test_row_scan_matches_bbox_oracle_on_random_polygons():
    rng = random.Random(20260826)
    for _ in range(300):
        poly = random_polygon(rng)
        if poly.dimension == 2:
            assert poly.lattice_point_set == bbox_lattice_points(poly), poly


def test_pick_identity_on_random_polygons():
    rng = random.Random(4711)
    for _ in range(300):
        poly = random_polygon(rng)
        if poly.dimension == 2:
            b = len(poly.boundary_point_set)
            assert poly.double_area == 2 * poly.genus + b - 2, poly


def test_interior_polygon():
    t4 = convex_hull([(0, 0), (4, 0), (0, 4)])
    assert t4.interior_polygon().vertices == ((1, 1), (2, 1), (1, 2))
    square = convex_hull([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert square.interior_polygon() is None


def test_translate():
    poly = convex_hull([(0, 0), (2, 0), (0, 2)])
    moved = poly.translate(3, -1)
    assert moved.vertices == ((3, -1), (5, -1), (3, 1))
    assert moved.genus == poly.genus
