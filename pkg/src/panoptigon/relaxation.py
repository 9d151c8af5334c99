"""Half-plane representations, the relaxed polygon, and maximality tests.

Relaxing a polygon pushes every edge's half-plane out by one lattice unit
(c -> c + 1 with a primitive normal).  The result can fail to be a lattice
polygon, and edges can collapse; both phenomena are detected exactly with
rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from .core import Point, Polygon, convex_hull

RationalPoint = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class HalfPlane:
    """{(x, y) : a*x + b*y <= c} with gcd(|a|, |b|) = 1."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if gcd(abs(self.a), abs(self.b)) != 1:
            raise ValueError("half-plane normal must be primitive")

    def holds(self, x: Fraction, y: Fraction) -> bool:
        return self.a * x + self.b * y <= self.c

    def relaxed(self) -> "HalfPlane":
        return HalfPlane(self.a, self.b, self.c + 1)


@dataclass(frozen=True)
class RationalPolygon:
    """Convex polygon with exact rational vertices in CCW order."""

    vertices: tuple[RationalPoint, ...]
    collapsed_edges: tuple[HalfPlane, ...] = ()

    @property
    def is_lattice(self) -> bool:
        return all(x.denominator == 1 and y.denominator == 1 for x, y in self.vertices)

    def nonlattice_vertices(self) -> list[RationalPoint]:
        return [v for v in self.vertices if v[0].denominator != 1 or v[1].denominator != 1]

    def to_lattice(self) -> Polygon:
        if not self.is_lattice:
            raise ValueError("polygon has non-integral vertices")
        return convex_hull((int(x), int(y)) for x, y in self.vertices)

    def contains(self, p: RationalPoint) -> bool:
        vs = self.vertices
        n = len(vs)
        for i in range(n):
            (ax, ay), (bx, by) = vs[i], vs[(i + 1) % n]
            if (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax) < 0:
                return False
        return True


@dataclass(frozen=True)
class NotLattice:
    """Failed relaxation, carrying one non-integral vertex in lowest terms."""

    witness: RationalPoint
    relaxed: RationalPolygon = field(compare=False)


def edge_halfplanes(poly: Polygon) -> list[HalfPlane]:
    """One primitive half-plane per edge, tight on that edge."""
    if poly.dimension != 2:
        raise ValueError("half-plane representation requires dimension 2")
    return [HalfPlane(a, b, c) for a, b, c in poly.halfplanes()]


def _intersect(h1: HalfPlane, h2: HalfPlane) -> Optional[RationalPoint]:
    det = h1.a * h2.b - h2.a * h1.b
    if det == 0:
        return None
    x = Fraction(h1.c * h2.b - h2.c * h1.b, det)
    y = Fraction(h1.a * h2.c - h2.a * h1.c, det)
    return (x, y)


def _hull_order(pts: list[RationalPoint]) -> tuple[RationalPoint, ...]:
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return tuple(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    if all(cross(pts[0], pts[-1], p) == 0 for p in pts):
        return (pts[0], pts[-1])
    verts = chain(pts)[:-1] + chain(list(reversed(pts)))[:-1]
    start = min(range(len(verts)), key=lambda i: (verts[i][1], verts[i][0]))
    return tuple(verts[start:] + verts[:start])


def relax(poly: Polygon) -> RationalPolygon:
    """Intersection of all edge half-planes pushed out by one unit.

    Vertices are exact rationals.  Edges whose pushed-out line no longer
    supports a one-dimensional face are reported in ``collapsed_edges``.
    """
    planes = [h.relaxed() for h in edge_halfplanes(poly)]
    pts: list[RationalPoint] = []
    n = len(planes)
    for i in range(n):
        for j in range(i + 1, n):
            p = _intersect(planes[i], planes[j])
            if p is not None and all(h.holds(*p) for h in planes):
                pts.append(p)
    verts = _hull_order(pts)
    collapsed = []
    for h in planes:
        on_line = [v for v in verts if h.a * v[0] + h.b * v[1] == h.c]
        if len(on_line) < 2:
            collapsed.append(h)
    return RationalPolygon(verts, tuple(collapsed))


def segment_lattice_point(p: RationalPoint, q: RationalPoint) -> Optional[Point]:
    """Some lattice point on the closed segment pq, or None.

    Used by the edge-collapse invariant: when a relaxed polygon is a lattice
    polygon, every pushed-out edge line must still meet it in a lattice point.
    """
    if p == q:
        if p[0].denominator == 1 and p[1].denominator == 1:
            return (int(p[0]), int(p[1]))
        return None
    dx, dy = q[0] - p[0], q[1] - p[1]
    # walk integer values of the dominant coordinate
    if abs(dx) >= abs(dy):
        lo, hi = min(p[0], q[0]), max(p[0], q[0])
        for x in range(-(-lo.numerator // lo.denominator), hi.numerator // hi.denominator + 1):
            y = p[1] + dy * (x - p[0]) / dx
            if y.denominator == 1:
                return (x, int(y))
    else:
        lo, hi = min(p[1], q[1]), max(p[1], q[1])
        for y in range(-(-lo.numerator // lo.denominator), hi.numerator // hi.denominator + 1):
            x = p[0] + dx * (y - p[1]) / dy
            if x.denominator == 1:
                return (int(x), y)
    return None


def relaxed_lattice(poly: Polygon):
    """Relax and return a lattice Polygon, or NotLattice with a witness."""
    r = relax(poly)
    bad = r.nonlattice_vertices()
    if bad:
        return NotLattice(bad[0], r)
    return r.to_lattice()


def is_maximal(poly: Polygon) -> bool:
    """Containment-maximal among polygons with the same interior points.

    Non-hyperelliptic polygons are maximal exactly when they equal the
    relaxation of their interior polygon.  For hyperelliptic ones (interior
    of dimension <= 1) we search for a single exterior point whose addition
    keeps the interior point set unchanged.
    """
    if poly.genus == 0:
        raise ValueError("maximality undefined without interior points")
    inner = poly.interior_polygon()
    if inner.dimension == 2:
        r = relaxed_lattice(inner)
        return isinstance(r, Polygon) and r == poly
    return _one_point_extension(poly) is None


def _one_point_extension(poly: Polygon, margin_scale: int = 1):
    xmin, ymin, xmax, ymax = poly.bounding_box()
    m = max(xmax - xmin, ymax - ymin) * margin_scale
    interior = poly.interior_point_set
    pts = poly.lattice_point_set
    for x in range(xmin - m, xmax + m + 1):
        for y in range(ymin - m, ymax + m + 1):
            q = (x, y)
            if q in pts or poly.contains(q):
                continue
            bigger = convex_hull(list(poly.vertices) + [q])
            if bigger.interior_point_set == interior:
                return q
    return None
