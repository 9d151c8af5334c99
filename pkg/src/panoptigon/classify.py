"""Panoptigon predicates and the width-1/width-2 family classifications.

A panoptigon is a convex lattice polygon containing a point from which
every other lattice point of the polygon is visible.  Polygons of lattice
width 1 are trapezoids T(a, b); width-2 polygons of genus >= 2 fall into
three parameterized families living in the strip R x [0, 2] with their g
interior points at height 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .core import Point, Polygon, convex_hull, visible_from
from .transform import canonical_form


@dataclass(frozen=True)
class PanoptigonReport:
    is_panoptigon: bool
    panoptigon_points: frozenset[Point]


def is_panoptigon(poly: Polygon) -> PanoptigonReport:
    """Brute-force check over all lattice points of the polygon.

    Degenerate polygons (dimension <= 1) use the same definition on their
    point set: some point must see all the others.
    """
    pts = poly.lattice_point_set
    seers = frozenset(p for p in pts if visible_from(p, pts) == pts)
    return PanoptigonReport(bool(seers), seers)


def trapezoid(a: int, b: int) -> Polygon:
    """T(a, b) = conv((0,0), (0,1), (a,1), (b,0)) with 0 <= a <= b, b >= 1."""
    if not (0 <= a <= b and b >= 1):
        raise ValueError("trapezoid requires 0 <= a <= b and b >= 1")
    return convex_hull([(0, 0), (0, 1), (a, 1), (b, 0)])


def standard_triangle(d: int) -> Polygon:
    """T_d = conv((0,0), (d,0), (0,d)) with d >= 1."""
    if d < 1:
        raise ValueError("standard triangle requires d >= 1")
    return convex_hull([(0, 0), (d, 0), (0, d)])


def genus0_panoptigon_predicate(a: int, b: int) -> bool:
    """T(a, b) is a panoptigon iff a <= 2 (a row of 4 blocks all views)."""
    if not (0 <= a <= b and b >= 1):
        raise ValueError("trapezoid requires 0 <= a <= b and b >= 1")
    return a <= 2


def is_hyperelliptic(poly: Polygon) -> bool:
    """Interior polygon has dimension <= 1 (empty interior counts)."""
    inner = poly.interior_polygon()
    return inner is None or inner.dimension <= 1


@dataclass(frozen=True)
class HyperellipticForm:
    """Parameters of a genus >= 2 lattice-width-2 polygon.

    Type1 is the quadrilateral with no lattice vertex at height 1, Type2 the
    pentagon with one, Type3 the hexagon with two.  Type3 triples are stored
    as canonical representatives of the symmetry orbit (i <-> j swap and
    k <-> 2g+2-i-j-k reflection); see :func:`type3_orbit`.
    """

    kind: str  # "Type1" | "Type2" | "Type3"
    g: int
    i: int
    j: int = 0
    k: int = 0

    def __post_init__(self):
        if not is_valid_form(self):
            raise ValueError("invalid hyperelliptic form parameters: %r" % (self,))

    def lattice_point_count(self) -> int:
        if self.kind == "Type1":
            return 3 * self.g + 2
        if self.kind == "Type2":
            return self.g + self.i + self.j + 3
        return self.g + self.i + self.j + 4


def type3_orbit(g: int, i: int, j: int, k: int) -> list[tuple[int, int, int]]:
    """Parameter triples describing the same hexagon up to equivalence."""
    kr = 2 * g + 2 - i - j - k
    return [(i, j, k), (j, i, k), (i, j, kr), (j, i, kr)]


def is_valid_form(form: HyperellipticForm) -> bool:
    g, i, j, k = form.g, form.i, form.j, form.k
    if g < 2:
        return False
    if form.kind == "Type1":
        return j == 0 and k == 0 and g <= i <= 2 * g
    if form.kind == "Type2":
        return k == 0 and 0 <= j <= i and i + j <= 2 * g + 1
    if form.kind == "Type3":
        if min(i, j, k) < 0 or i + j + k > 2 * g + 2:
            return False
        return (i, j, k) == min(type3_orbit(g, i, j, k))
    return False


def valid_forms(g: int) -> Iterator[HyperellipticForm]:
    """All hyperelliptic forms of genus g, each equivalence class once."""
    if g < 2:
        raise ValueError("hyperelliptic forms require genus >= 2")
    for i in range(g, 2 * g + 1):
        yield HyperellipticForm("Type1", g, i)
    for i in range(0, 2 * g + 2):
        for j in range(0, min(i, 2 * g + 1 - i) + 1):
            yield HyperellipticForm("Type2", g, i, j)
    for i in range(0, 2 * g + 3):
        for j in range(0, 2 * g + 3 - i):
            for k in range(0, 2 * g + 3 - i - j):
                if (i, j, k) == min(type3_orbit(g, i, j, k)):
                    yield HyperellipticForm("Type3", g, i, j, k)


def hyperelliptic_count(g: int) -> int:
    """(g+3)(2g^2+15g+16)/6, the number of width-2 polygons of genus g >= 2."""
    if g < 2:
        raise ValueError("count defined for genus >= 2")
    num = (g + 3) * (2 * g * g + 15 * g + 16)
    assert num % 6 == 0
    return num // 6


def hyperelliptic_polygon(form: HyperellipticForm) -> Polygon:
    """Concrete polygon in R x [0, 2] with interior points (1,1)..(g,1)."""
    g, i, j, k = form.g, form.i, form.j, form.k
    if form.kind == "Type1":
        pts = [(0, 0), (i, 0), (2 * g + 1 - i, 2), (1, 2)]
    elif form.kind == "Type2":
        pts = [(0, 0), (i, 0), (g + 1, 1), (j + 1, 2), (1, 2)]
    else:
        pts = [(0, 0), (i, 0), (g + 1, 1), (k + j, 2), (k, 2), (0, 1)]
    return convex_hull(pts)


def hyperelliptic_panoptigon_predicate(form: HyperellipticForm) -> bool:
    """Closed-form panoptigon test per family (no brute force).

    Type1 works iff g <= 3; Type2 iff g <= 2 or a one-point bottom row can
    see everything (j = 0, i <= 1); Type3 needs a short extreme row plus a
    parity condition on the top-row offset k.
    """
    g, i, j, k = form.g, form.i, form.j, form.k
    if form.kind == "Type1":
        return g <= 3
    if form.kind == "Type2":
        return g <= 2 or (j == 0 and i <= 1)
    ok_bottom = j == 0 and i <= 2 and (i != 0 or k % 2 == 1) and (i != 2 or k % 2 == 0)
    ok_top = i == 0 and j <= 2 and (j != 0 or k % 2 == 1) and (j != 2 or k % 2 == 0)
    return ok_bottom or ok_top


def hyperelliptic_normal_form(poly: Polygon) -> HyperellipticForm:
    """Recover form parameters by finite template search at the known genus."""
    g = poly.genus
    if g < 2 or not is_hyperelliptic(poly):
        raise ValueError("normal form requires a hyperelliptic polygon of genus >= 2")
    from .transform import lattice_width

    if lattice_width(poly)[0] != 2:
        raise ValueError("normal form requires lattice width 2")
    target = canonical_form(poly)
    for form in valid_forms(g):
        if canonical_form(hyperelliptic_polygon(form)) == target:
            return form
    raise AssertionError("no hyperelliptic template matched; classification incomplete")
