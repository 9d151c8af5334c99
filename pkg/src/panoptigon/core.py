"""Exact integer primitives: points, visibility, hulls, lattice-point counting.

Every coordinate is a Python int (arbitrary precision) and every operation
here is a pure function; no floats anywhere.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Iterator, Optional

Point = tuple[int, int]


def is_visible(p: Point, q: Point) -> bool:
    """True iff no lattice point lies strictly between p and q.

    Equivalent to gcd(|px-qx|, |py-qy|) == 1.  A point is visible from
    itself by convention.
    """
    if p == q:
        return True
    return gcd(abs(p[0] - q[0]), abs(p[1] - q[1])) == 1


def visible_from(p: Point, points: Iterable[Point]) -> frozenset[Point]:
    """Subset of ``points`` visible from p (p itself included if present)."""
    return frozenset(q for q in points if is_visible(p, q))


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b-a) x (c-a): >0 left turn, <0 right, 0 collinear."""
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _primitive(dx: int, dy: int) -> tuple[int, int]:
    g = gcd(abs(dx), abs(dy))
    return (dx // g, dy // g) if g else (0, 0)


class Polygon:
    """Convex lattice polygon with CCW vertices, lowest-then-leftmost first.

    Degenerate cases are first-class: a single point has dimension 0 and a
    collinear segment dimension 1.  Instances are immutable; derived data is
    computed lazily and cached.  Build via :func:`convex_hull` rather than
    calling the constructor with arbitrary points.
    """

    __slots__ = ("vertices", "_lattice", "_boundary", "_cache")

    def __init__(self, vertices: tuple[Point, ...]):
        self.vertices = vertices
        self._lattice: Optional[frozenset[Point]] = None
        self._boundary: Optional[frozenset[Point]] = None
        self._cache: dict = {}

    def __eq__(self, other) -> bool:
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return "Polygon(%s)" % (" ".join("%d,%d" % v for v in self.vertices))

    @property
    def dimension(self) -> int:
        n = len(self.vertices)
        return 2 if n >= 3 else n - 1

    def edges(self) -> Iterator[tuple[Point, Point]]:
        """Directed edges in CCW order; empty for dimension < 2."""
        vs = self.vertices
        if len(vs) < 3:
            return
        for i, v in enumerate(vs):
            yield v, vs[(i + 1) % len(vs)]

    @property
    def double_area(self) -> int:
        """Twice the Euclidean area by the shoelace formula (0 if degenerate)."""
        vs = self.vertices
        s = 0
        for i, (x0, y0) in enumerate(vs):
            x1, y1 = vs[(i + 1) % len(vs)]
            s += x0 * y1 - x1 * y0
        return s

    def halfplanes(self) -> list[tuple[int, int, int]]:
        """Primitive (a, b, c) with P = {a*x + b*y <= c}; one per edge."""
        out = []
        for (vx, vy), (wx, wy) in self.edges():
            dx, dy = _primitive(wx - vx, wy - vy)
            a, b = dy, -dx  # outward normal for CCW boundary
            out.append((a, b, a * vx + b * vy))
        return out

    def contains(self, p: Point) -> bool:
        if self.dimension == 2:
            return all(a * p[0] + b * p[1] <= c for a, b, c in self.halfplanes())
        if self.dimension == 1:
            (ax, ay), (bx, by) = self.vertices
            if orientation((ax, ay), (bx, by), p) != 0:
                return False
            return min(ax, bx) <= p[0] <= max(ax, bx) and min(ay, by) <= p[1] <= max(ay, by)
        return p == self.vertices[0]

    @property
    def lattice_point_set(self) -> frozenset[Point]:
        """All lattice points inside or on the polygon.

        Dimension 2 uses a row-wise scan between exact rational edge
        intersections (integer floor/ceil arithmetic); the brute-force
        bounding-box scan lives in the tests as the oracle.
        """
        if self._lattice is None:
            self._lattice = frozenset(self._scan())
        return self._lattice

    def _scan(self) -> Iterator[Point]:
        if self.dimension == 0:
            yield self.vertices[0]
            return
        if self.dimension == 1:
            a, b = self.vertices
            dx, dy = _primitive(b[0] - a[0], b[1] - a[1])
            steps = gcd(abs(b[0] - a[0]), abs(b[1] - a[1]))
            for t in range(steps + 1):
                yield (a[0] + t * dx, a[1] + t * dy)
            return
        planes = self.halfplanes()
        ys = [y for _, y in self.vertices]
        for y in range(min(ys), max(ys) + 1):
            lo, hi = None, None
            ok = True
            for a, b, c in planes:
                r = c - b * y
                if a == 0:
                    if r < 0:
                        ok = False
                        break
                elif a > 0:
                    bound = r // a  # floor
                    hi = bound if hi is None else min(hi, bound)
                else:
                    bound = -(r // -a)  # ceil of r/a with a<0
                    lo = bound if lo is None else max(lo, bound)
            if not ok or lo is None or hi is None:
                continue
            for x in range(lo, hi + 1):
                yield (x, y)

    @property
    def boundary_point_set(self) -> frozenset[Point]:
        """Lattice points on the boundary (all points when dimension < 2)."""
        if self._boundary is None:
            if self.dimension < 2:
                self._boundary = self.lattice_point_set
            else:
                pts = []
                for (vx, vy), (wx, wy) in self.edges():
                    dx, dy = _primitive(wx - vx, wy - vy)
                    for t in range(gcd(abs(wx - vx), abs(wy - vy))):
                        pts.append((vx + t * dx, vy + t * dy))
                self._boundary = frozenset(pts)
        return self._boundary

    @property
    def interior_point_set(self) -> frozenset[Point]:
        return self.lattice_point_set - self.boundary_point_set

    @property
    def genus(self) -> int:
        """Number of strictly interior lattice points (0 when degenerate)."""
        return len(self.interior_point_set)

    def interior_polygon(self) -> Optional["Polygon"]:
        """Convex hull of the interior lattice points; None when genus 0."""
        if "interior_polygon" not in self._cache:
            pts = self.interior_point_set
            self._cache["interior_polygon"] = convex_hull(pts) if pts else None
        return self._cache["interior_polygon"]

    def bounding_box(self) -> tuple[int, int, int, int]:
        xs = [x for x, _ in self.vertices]
        ys = [y for _, y in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def translate(self, dx: int, dy: int) -> "Polygon":
        return Polygon(tuple((x + dx, y + dy) for x, y in self.vertices))


def convex_hull(points: Iterable[Point]) -> Polygon:
    """Convex hull via monotone chain, strictly CCW, no collinear vertices.

    Degenerate inputs yield dimension-0/1 polygons; empty input is an error.
    """
    pts = sorted(set(points))
    if not pts:
        raise ValueError("empty point set")
    if len(pts) == 1:
        return Polygon((pts[0],))
    if all(orientation(pts[0], pts[-1], p) == 0 for p in pts):
        return Polygon((pts[0], pts[-1]))

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orientation(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    verts = lower[:-1] + upper[:-1]
    # rotate so the lowest-then-leftmost vertex comes first
    start = min(range(len(verts)), key=lambda i: (verts[i][1], verts[i][0]))
    return Polygon(tuple(verts[start:] + verts[:start]))
