from fractions import Fraction

import pytest

from panoptigon.classify import HyperellipticForm
from panoptigon.core import convex_hull
from panoptigon.formats import (
    PolygonParseError,
    hyperelliptic_form_from_json,
    hyperelliptic_form_to_json,
    parse_polygon_text,
    polygon_from_json,
    polygon_to_json,
    polygon_to_text,
    rational_polygon_from_json,
    rational_polygon_to_json,
    unimodular_map_from_json,
    unimodular_map_to_json,
)
from panoptigon.relaxation import RationalPolygon
from panoptigon.transform import UnimodularMap


def test_polygon_text_roundtrip():
    poly = convex_hull([(0, 0), (3, 0), (0, 3)])
    assert parse_polygon_text(polygon_to_text(poly)) == poly
    assert parse_polygon_text("0,3 0,0 3,0") == poly  # order-insensitive


def test_polygon_text_negative_coordinates():
    assert parse_polygon_text("-1,-1 2,-1 -1,2").vertices == (
        (-1, -1),
        (2, -1),
        (-1, 2),
    )


def test_parse_errors():
    with pytest.raises(PolygonParseError):
        parse_polygon_text("")
    with pytest.raises(PolygonParseError):
        parse_polygon_text("1,2 3")
    with pytest.raises(PolygonParseError):
        parse_polygon_text("1,2 a,b")


def test_polygon_json_roundtrip():
    poly = convex_hull([(0, 0), (3, 0), (0, 3)])
    assert polygon_from_json(polygon_to_json(poly)) == poly


def test_unimodular_map_json_roundtrip():
    m = UnimodularMap(((1, 2), (0, 1)), (3, -4))
    assert unimodular_map_from_json(unimodular_map_to_json(m)) == m


def test_rational_polygon_json():
    poly = RationalPolygon(
        ((Fraction(-1), Fraction(-1)), (Fraction(5, 2), Fraction(0)))
    )
    data = rational_polygon_to_json(poly)
    assert data["is_lattice"] is False
    assert data["vertices"][1] == ["5/2", "0"]
    assert rational_polygon_from_json(data).vertices == poly.vertices


def test_hyperelliptic_form_json():
    t2 = HyperellipticForm(kind="Type2", g=3, i=2, j=1)
    assert "k" not in hyperelliptic_form_to_json(t2)
    assert hyperelliptic_form_from_json(hyperelliptic_form_to_json(t2)) == t2
    t3 = HyperellipticForm(kind="Type3", g=3, i=1, j=1, k=2)
    assert hyperelliptic_form_from_json(hyperelliptic_form_to_json(t3)) == t3
