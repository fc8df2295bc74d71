"""Power of a point with respect to axis-aligned hyperbolas.

A hyperbola whose asymptotes are parallel to a fixed direction pair is stored
as a frame map (taking the asymptote directions to the coordinate axes), a
center, and a constant kappa: in frame coordinates relative to the center the
curve is x*y = kappa.  The core quantity of a point (p, q) in those
coordinates is p*q - kappa; the power kappa * |p*q - kappa| equals the
product of asymptotic symmetric areas cut by any secant through the point.

kappa is normalized positive at construction by reflecting one frame axis,
so curves with branches in the second/fourth frame quadrants are handled
transparently.  Note that real tangent lines from an off-axis point exist
exactly when the core quantity is negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CoincidentParameters,
    DegenerateIntersection,
    EmptyRadicalAxis,
    IdenticalCurves,
    InvalidPosition,
    NoRealIntersection,
    NonLinearDifference,
    NotOnCurve,
    ParallelAxes,
    ParallelChords,
    ParallelLines,
)
from .kernel import (
    ABS_EPS,
    PAR_EPS,
    REL_EPS,
    AffineMap,
    DirectionVector,
    Line,
    Point,
    compose_maps,
    intersect_lines,
    invert_map,
)

_ON_CURVE_TOL = 1e-7
_TANGENT_TOL = 1e-10

_REFLECT_X = AffineMap(-1.0, 0.0, 0.0, 1.0)


@dataclass(frozen=True)
class AxisHyperbola:
    """Hyperbola (x - c)(y - d) = kappa in the coordinates of ``frame``.

    ``center`` lives in the original plane; (c, d) is its frame image.
    ``frame`` maps the original plane to the frame where the asymptote
    directions become the coordinate axes.
    """

    center: Point
    kappa: float
    frame: AffineMap

    def __post_init__(self) -> None:
        if not math.isfinite(self.kappa) or self.kappa == 0.0:
            raise ValueError("kappa must be finite and nonzero")
        invert_map(self.frame)  # raises SingularMap for a degenerate frame
        if self.kappa < 0.0:
            object.__setattr__(self, "frame", compose_maps(_REFLECT_X, self.frame))
            object.__setattr__(self, "kappa", -self.kappa)

    @classmethod
    def axis_aligned(cls, center: Point, kappa: float) -> "AxisHyperbola":
        """Curve (x - cx)(y - cy) = kappa with asymptotes parallel to the axes."""
        return cls(center, kappa, AffineMap.identity())

    @classmethod
    def from_directions(
        cls, center: Point, kappa: float, u: DirectionVector, v: DirectionVector
    ) -> "AxisHyperbola":
        """Curve with asymptote directions u, v; the frame sends u, v to the axes."""
        columns = AffineMap(u.dx, v.dx, u.dy, v.dy)
        return cls(center, kappa, invert_map(columns))

    def frame_center(self) -> tuple[float, float]:
        c = self.frame.apply_point(self.center)
        return c.x, c.y

    def relative_coords(self, p: Point) -> tuple[float, float]:
        """Frame coordinates of p relative to the center."""
        q = self.frame.apply_point(p)
        c, d = self.frame_center()
        return q.x - c, q.y - d

    def point_at(self, alpha: float) -> Point:
        """The curve point with center-relative frame abscissa alpha."""
        if alpha == 0.0:
            raise ValueError("abscissa on the asymptote")
        c, d = self.frame_center()
        return invert_map(self.frame).apply_point(Point(c + alpha, d + self.kappa / alpha))


@dataclass(frozen=True)
class SecantResult:
    a: Point
    b: Point
    alpha: float
    beta: float
    tangent: bool = False


def core_quantity(p: Point, h: AxisHyperbola) -> float:
    """p*q - kappa in center-relative frame coordinates; zero iff p is on the curve."""
    x, y = h.relative_coords(p)
    return x * y - h.kappa


def _require_on_curve(p: Point, h: AxisHyperbola) -> tuple[float, float]:
    x, y = h.relative_coords(p)
    residual = x * y - h.kappa
    if abs(residual) > _ON_CURVE_TOL * max(1.0, abs(x * y), h.kappa):
        raise NotOnCurve(f"point is not on the hyperbola (residual {residual!r})")
    return x, y


def secant_intersections(p: Point, direction: DirectionVector, h: AxisHyperbola) -> SecantResult:
    """Both intersections of the line through p with the curve.

    Tangency (a double root within tolerance) is reported via the ``tangent``
    flag with coinciding points, not as an error.  Asymptote-parallel
    directions meet the curve at most once and raise NoRealIntersection.
    """
    px, py = h.relative_coords(p)
    d = h.frame.apply_linear(direction)
    a2 = d.dx * d.dy
    if abs(a2) <= PAR_EPS * d.norm * d.norm:
        raise NoRealIntersection("secant direction is parallel to an asymptote")
    a1 = d.dx * py + d.dy * px
    a0 = px * py - h.kappa
    disc = a1 * a1 - 4.0 * a2 * a0
    scale = a1 * a1 + abs(4.0 * a2 * a0)
    if disc < -_TANGENT_TOL * scale:
        raise NoRealIntersection("line misses the hyperbola")
    tangent = disc <= _TANGENT_TOL * scale
    if tangent:
        t1 = t2 = -a1 / (2.0 * a2)
    else:
        root = math.sqrt(disc)
        q = -(a1 + math.copysign(root, a1)) / 2.0 if a1 != 0.0 else root / 2.0
        t1, t2 = q / a2, a0 / q
        if t1 > t2:
            t1, t2 = t2, t1
    inverse = invert_map(h.frame)
    c, dcenter = h.frame_center()

    def original(t: float) -> tuple[Point, float]:
        alpha = px + t * d.dx
        frame_point = Point(c + alpha, dcenter + (py + t * d.dy))
        return inverse.apply_point(frame_point), alpha

    point_a, alpha = original(t1)
    point_b, beta = original(t2)
    return SecantResult(point_a, point_b, alpha, beta, tangent)


def asymptotic_projections(a: Point, h: AxisHyperbola) -> tuple[Point, Point]:
    """Projections of a curve point onto the two asymptotes, each along the other."""
    x, y = _require_on_curve(a, h)
    c, d = h.frame_center()
    inverse = invert_map(h.frame)
    a1 = inverse.apply_point(Point(c + x, d))
    a2 = inverse.apply_point(Point(c, d + y))
    return a1, a2


def projected_area(p: Point, a: Point, which: int, h: AxisHyperbola) -> float:
    """Parallelogram area of (a - p) with (a_i - p), measured in frame coordinates."""
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    x, y = _require_on_curve(a, h)
    px, py = h.relative_coords(p)
    ax, ay = x - px, y - py
    if which == 1:
        bx, by = x - px, -py
    else:
        bx, by = -px, y - py
    return abs(ax * by - ay * bx)


def symmetric_area(p: Point, a: Point, h: AxisHyperbola) -> float:
    """Geometric mean of the two projected areas."""
    return math.sqrt(projected_area(p, a, 1, h) * projected_area(p, a, 2, h))


def power(p: Point, h: AxisHyperbola) -> float:
    """kappa * |core|; the secant-independent product of symmetric areas."""
    return h.kappa * abs(core_quantity(p, h))


def one_sided_identity(
    p: Point, secant: DirectionVector, h: AxisHyperbola
) -> tuple[float, float, float]:
    """(S_PA*S_PB, S(P,A1)*S(P,B1), S(P,A2)*S(P,B2)) for one secant; all three agree."""
    result = secant_intersections(p, secant, h)
    lhs = symmetric_area(p, result.a, h) * symmetric_area(p, result.b, h)
    mid1 = projected_area(p, result.a, 1, h) * projected_area(p, result.b, 1, h)
    mid2 = projected_area(p, result.a, 2, h) * projected_area(p, result.b, 2, h)
    return lhs, mid1, mid2


def chord_line(t1: float, t2: float, kappa: float) -> Line:
    """Chord of x*y = kappa through the points with abscissae t1, t2."""
    if t1 == 0.0 or t2 == 0.0 or kappa == 0.0:
        raise ValueError("chord parameters and kappa must be nonzero")
    if abs(t1 - t2) <= REL_EPS * max(abs(t1), abs(t2)) + ABS_EPS:
        raise CoincidentParameters("chord parameters coincide")
    base = Point(t1, kappa / t1)
    return Line(base, DirectionVector(t2 - t1, kappa / t2 - kappa / t1))


def chord_intersection_x(t1: float, t2: float, t3: float, t4: float) -> float:
    """x-coordinate of the intersection of the chords (t1, t2) and (t3, t4) of x*y = 1."""
    p12, p34 = t1 * t2, t3 * t4
    if abs(p12 - p34) <= REL_EPS * max(abs(p12), abs(p34)) + ABS_EPS:
        raise ParallelChords("chords with equal parameter products are parallel")
    return ((t3 + t4) * p12 - (t1 + t2) * p34) / (p12 - p34)


def _monic_in_frame(h: AxisHyperbola, frame: AffineMap) -> tuple[float, float, float]:
    """Coefficients (ex, ey, e0) of the monic form w_x*w_y + ex*w_x + ey*w_y + e0
    of ``h`` expressed in the coordinates of ``frame``."""
    m = compose_maps(h.frame, invert_map(frame))
    entries = (abs(m.xx), abs(m.xy), abs(m.yx), abs(m.yy))
    scale = max(entries)
    tol = 1e-9 * scale
    c, d = h.frame_center()
    if abs(m.xy) <= tol and abs(m.yx) <= tol:
        # z_x = m.xx*wx + tx, z_y = m.yy*wy + ty
        gx, gy = m.tx - c, m.ty - d
        return gy / m.yy, gx / m.xx, (gx * gy - h.kappa) / (m.xx * m.yy)
    if abs(m.xx) <= tol and abs(m.yy) <= tol:
        # z_x = m.xy*wy + tx, z_y = m.yx*wx + ty
        gx, gy = m.tx - c, m.ty - d
        return gx / m.xy, gy / m.yx, (gx * gy - h.kappa) / (m.xy * m.yx)
    raise NonLinearDifference("hyperbolas do not share an asymptote direction pair")


def radical_axis(h1: AxisHyperbola, h2: AxisHyperbola) -> Line:
    """Zero set of the difference of the two monic defining quadratics.

    Both curves are expressed in the frame of the first one; the product
    terms cancel, leaving a line on which the two core quantities agree.
    When the curves intersect, the line carries the common chord (or the
    common tangent at a tangency point).
    """
    e1x, e1y, e10 = _monic_in_frame(h1, h1.frame)
    e2x, e2y, e20 = _monic_in_frame(h2, h1.frame)
    ex, ey, e0 = e1x - e2x, e1y - e2y, e10 - e20
    scale = max(1.0, abs(e1x), abs(e1y), abs(e10), abs(e2x), abs(e2y), abs(e20))
    tol = ABS_EPS * scale
    if abs(ex) <= tol and abs(ey) <= tol:
        if abs(e0) <= tol:
            raise IdenticalCurves("the two hyperbolas coincide")
        raise EmptyRadicalAxis("equal centers with different kappa give an empty axis")
    if abs(ex) >= abs(ey):
        base = Point(-e0 / ex, 0.0)
    else:
        base = Point(0.0, -e0 / ey)
    direction = DirectionVector(-ey, ex)
    inverse = invert_map(h1.frame)
    return Line(inverse.apply_point(base), inverse.apply_linear(direction))


def radical_center(h1: AxisHyperbola, h2: AxisHyperbola, h3: AxisHyperbola) -> Point:
    """Common point of the three pairwise radical axes."""
    try:
        l12 = radical_axis(h1, h2)
        l23 = radical_axis(h2, h3)
    except EmptyRadicalAxis as exc:
        raise ParallelAxes("a pairwise radical axis is empty") from exc
    try:
        return intersect_lines(l12, l23)
    except ParallelLines as exc:
        raise ParallelAxes("radical axes are parallel") from exc


def _shoelace(points: list[Point]) -> float:
    total = 0.0
    for i, p in enumerate(points):
        q = points[(i + 1) % len(points)]
        total += p.x * q.y - q.x * p.y
    return 0.5 * abs(total)


def progression_quadrilateral_area(a: float, r: float, p: float, kappa: float) -> float:
    """Area of the chord-intersection quadrilateral over a geometric progression.

    Four points with abscissae a, a*r, a*r^2, a*r^3 sit on x*y = kappa
    (positive branch) together with a probe point at abscissa p.  With Q the
    intersection of chords (a, a*r^2) and (p, a*r) and R that of
    (a*r, a*r^3) and (p, a*r^2), the area of the quadrilateral through the
    second point, third point, R, Q does not depend on p; for kappa = 1 it
    equals (r + 1)|r - 1|^3 / (2 r^2).  The probe must avoid the four node
    abscissae, where the construction degenerates.
    """
    if a <= 0.0 or r <= 0.0 or p <= 0.0 or kappa <= 0.0:
        raise ValueError("a, r, p, kappa must be positive")
    if r == 1.0:
        raise ValueError("r must differ from 1")
    nodes = (a, a * r, a * r * r, a * r**3)
    for node in nodes:
        if abs(p - node) <= REL_EPS * max(p, node):
            raise InvalidPosition("probe abscissa coincides with a progression node")
    x_b, x_c = a * r, a * r * r
    try:
        q = intersect_lines(chord_line(a, x_c, kappa), chord_line(p, x_b, kappa))
        rr = intersect_lines(chord_line(x_b, a * r**3, kappa), chord_line(p, x_c, kappa))
    except (ParallelLines, CoincidentParameters) as exc:
        raise DegenerateIntersection("chord intersection is undefined") from exc
    b_point = Point(x_b, kappa / x_b)
    c_point = Point(x_c, kappa / x_c)
    return _shoelace([b_point, c_point, rr, q])
