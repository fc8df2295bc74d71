"""Isoptic loci of a segment under the direction-pair angle.

For fixed endpoints A, B and a nonzero target angle, the set of vertices P
with angle(P; A, B) equal to the target is a hyperbola through A and B whose
asymptotes are parallel to the reference directions.  In the canonical frame
(A at (-1, 0), B at (1, 0), u along (1, 1), v along (1, -1)) the curve is

    p^2 - (q + beta)^2 = 1 - beta^2,      beta = coth(theta),

with center (0, -beta).  The rapidity parametrization

    p = sinh(t) / sinh(theta),  q = cosh(t) / sinh(theta) - coth(theta)

covers one branch; the other branch is its image under the central
reflection (p, q) -> (-p, -q - 2*beta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .angle import DirectionPair, affine_angle
from .errors import ComponentMismatch, SingularPosition, SingularRay, ThetaTooSmall
from .kernel import (
    AffineMap,
    DirectionVector,
    Point,
    apply_map,
    decompose,
    invert_map,
    normalize_configuration,
    vec,
)

THETA_MIN = 1e-6

# Points whose boundary factors fall below this (relative) threshold sit on
# the singular line pair through the endpoints.
_BOUNDARY_EPS = 1e-10


@dataclass(frozen=True)
class IsopticSpec:
    a: Point
    b: Point
    dirs: DirectionPair
    theta: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.theta) or self.theta == 0.0:
            raise ValueError("theta must be finite and nonzero")
        # Raises DegenerateConfiguration for coincident endpoints or a
        # segment parallel to a reference direction.
        normalize_configuration(self.a, self.b, self.dirs.u, self.dirs.v)


@dataclass(frozen=True)
class ConicCoefficients:
    """c_xx x^2 + c_xy xy + c_yy y^2 + c_x x + c_y y + c_0 = 0.

    Stored normalized: the largest-magnitude coefficient has magnitude 1 and
    the sign is fixed so that c_xx >= 0 (next nonzero positive when c_xx = 0).
    """

    c_xx: float
    c_xy: float
    c_yy: float
    c_x: float
    c_y: float
    c_0: float

    def __post_init__(self) -> None:
        coeffs = [self.c_xx, self.c_xy, self.c_yy, self.c_x, self.c_y, self.c_0]
        if max(abs(c) for c in coeffs[:3]) == 0.0:
            raise ValueError("quadratic part must be nonzero")
        scale = max(abs(c) for c in coeffs)
        coeffs = [c / scale for c in coeffs]
        # Sign: c_xx >= 0, falling back to the first nonzero coefficient.
        for c in coeffs:
            if c != 0.0:
                if c < 0.0:
                    coeffs = [-x for x in coeffs]
                break
        names = ("c_xx", "c_xy", "c_yy", "c_x", "c_y", "c_0")
        for name, value in zip(names, coeffs):
            object.__setattr__(self, name, float(value))

    def as_tuple(self) -> tuple[float, float, float, float, float, float]:
        return (self.c_xx, self.c_xy, self.c_yy, self.c_x, self.c_y, self.c_0)

    def evaluate(self, x: float, y: float) -> float:
        return (
            self.c_xx * x * x
            + self.c_xy * x * y
            + self.c_yy * y * y
            + self.c_x * x
            + self.c_y * y
            + self.c_0
        )

    def evaluation_scale(self, x: float, y: float) -> float:
        """Sum of term magnitudes; a robust denominator for residual checks."""
        return (
            abs(self.c_xx * x * x)
            + abs(self.c_xy * x * y)
            + abs(self.c_yy * y * y)
            + abs(self.c_x * x)
            + abs(self.c_y * y)
            + abs(self.c_0)
        )


@dataclass(frozen=True)
class IsopticCurve:
    normalized_conic: ConicCoefficients
    beta: float
    frame: AffineMap  # canonical frame -> original plane
    original_conic: ConicCoefficients


def _pullback_conic(conic: ConicCoefficients, t: AffineMap) -> ConicCoefficients:
    """Coefficients of x |-> conic(t(x))."""
    h = np.array([[t.xx, t.xy, t.tx], [t.yx, t.yy, t.ty], [0.0, 0.0, 1.0]])
    c = np.array(
        [
            [conic.c_xx, conic.c_xy / 2.0, conic.c_x / 2.0],
            [conic.c_xy / 2.0, conic.c_yy, conic.c_y / 2.0],
            [conic.c_x / 2.0, conic.c_y / 2.0, conic.c_0],
        ]
    )
    m = h.T @ c @ h
    return ConicCoefficients(
        m[0, 0], 2.0 * m[0, 1], m[1, 1], 2.0 * m[0, 2], 2.0 * m[1, 2], m[2, 2]
    )


def conic_center(conic: ConicCoefficients) -> Point:
    """Center of a central conic (gradient zero point)."""
    a = np.array([[2.0 * conic.c_xx, conic.c_xy], [conic.c_xy, 2.0 * conic.c_yy]])
    rhs = np.array([-conic.c_x, -conic.c_y])
    x, y = np.linalg.solve(a, rhs)
    return Point(float(x), float(y))


def asymptote_directions(conic: ConicCoefficients) -> tuple[DirectionVector, DirectionVector]:
    """Null directions of the quadratic part (asymptote directions of a hyperbola)."""
    a, b, c = conic.c_xx, conic.c_xy, conic.c_yy
    disc = b * b - 4.0 * a * c
    if disc <= 0.0:
        raise ValueError("quadratic part has no two real null directions")
    root = math.sqrt(disc)
    if abs(a) >= abs(c):
        # slopes s = dx/dy from a s^2 + b s + c = 0
        q = -(b + math.copysign(root, b)) / 2.0 if b != 0.0 else root / 2.0
        s1 = q / a
        s2 = (c / q) if q != 0.0 else -b / a
        d1, d2 = DirectionVector(s1, 1.0), DirectionVector(s2, 1.0)
    else:
        q = -(b + math.copysign(root, b)) / 2.0 if b != 0.0 else root / 2.0
        t1 = q / c
        t2 = (a / q) if q != 0.0 else -b / c
        d1, d2 = DirectionVector(1.0, t1), DirectionVector(1.0, t2)
    return d1.scaled(1.0 / d1.norm), d2.scaled(1.0 / d2.norm)


def isoptic_curve(spec: IsopticSpec) -> IsopticCurve:
    """The isoptic hyperbola of spec, in the canonical and the original frame."""
    if abs(spec.theta) < THETA_MIN:
        raise ThetaTooSmall(f"|theta| must be at least {THETA_MIN}")
    to_canonical = normalize_configuration(spec.a, spec.b, spec.dirs.u, spec.dirs.v)
    beta = 1.0 / math.tanh(spec.theta)
    # p^2 - (q + beta)^2 = 1 - beta^2  <=>  p^2 - q^2 - 2*beta*q - 1 = 0
    normalized = ConicCoefficients(1.0, 0.0, -1.0, 0.0, -2.0 * beta, -1.0)
    original = _pullback_conic(normalized, to_canonical)
    return IsopticCurve(
        normalized_conic=normalized,
        beta=beta,
        frame=invert_map(to_canonical),
        original_conic=original,
    )


def isoptic_point(theta: float, t: float) -> Point:
    """Rapidity parametrization of the canonical-frame isoptic hyperbola."""
    if abs(theta) < THETA_MIN:
        raise ThetaTooSmall(f"|theta| must be at least {THETA_MIN}")
    sh = math.sinh(theta)
    return Point(math.sinh(t) / sh, math.cosh(t) / sh - 1.0 / math.tanh(theta))


def reflect_branch(p: Point, theta: float) -> Point:
    """Central reflection mapping the parametrized branch onto the second branch."""
    beta = 1.0 / math.tanh(theta)
    return Point(-p.x, -p.y - 2.0 * beta)


def is_admissible(p: Point, spec: IsopticSpec) -> bool:
    """True when both viewing rays from p lie in one component (real angle).

    In the canonical frame the condition is ((p+1)^2 - q^2)((p-1)^2 - q^2) > 0.
    Points on (or numerically at) the singular line pair raise
    SingularPosition.
    """
    to_canonical = normalize_configuration(spec.a, spec.b, spec.dirs.u, spec.dirs.v)
    q = apply_map(to_canonical, p)
    f1 = (q.x + 1.0) ** 2 - q.y * q.y
    f2 = (q.x - 1.0) ** 2 - q.y * q.y
    scale = max(1.0, q.x * q.x + q.y * q.y)
    if abs(f1) <= _BOUNDARY_EPS * scale or abs(f2) <= _BOUNDARY_EPS * scale:
        raise SingularPosition("point lies on the singular line pair through the endpoints")
    return f1 * f2 > 0.0


def sample_locus(spec: IsopticSpec, n: int) -> list[tuple[Point, bool]]:
    """n deterministic samples of the isoptic locus in the original frame.

    The rapidity parameter sweeps [-T, T] with T = |theta| + 2 on the
    parametrized branch for the first ceil(n/2) samples and on the reflected
    branch for the rest; each point is tagged with its admissibility.
    """
    if n < 2:
        raise ValueError("need at least two samples")
    curve = isoptic_curve(spec)
    span = abs(spec.theta) + 2.0

    def t_values(count: int) -> list[float]:
        if count == 1:
            return [0.0]
        step = 2.0 * span / (count - 1)
        return [-span + i * step for i in range(count)]

    n_primary = (n + 1) // 2
    samples: list[tuple[Point, bool]] = []
    for branch in range(2):
        count = n_primary if branch == 0 else n - n_primary
        for t in t_values(count) if count else []:
            canonical = isoptic_point(spec.theta, t)
            if branch == 1:
                canonical = reflect_branch(canonical, spec.theta)
            original = apply_map(curve.frame, canonical)
            try:
                ok = is_admissible(original, spec)
            except SingularPosition:
                ok = False
            samples.append((original, ok))
    return samples


def sector_area_equivalence(
    o: Point, a: Point, b: Point, dirs: DirectionPair
) -> tuple[float, float]:
    """Angle and the matching hyperbolic sector area.

    In the frame with the reference lines as axes, the two rays meet the
    rectangular hyperbola XY = +-1 (sign of the component) at abscissae x_1
    and x_2, and the signed sector area swept from the first ray to the
    second is log(x_2 / x_1).  The returned pair is (angle, sector area) and
    the two values agree up to roundoff.
    """
    d_a = vec(o, a)
    d_b = vec(o, b)
    slopes = []
    for d, name in ((d_a, "OA"), (d_b, "OB")):
        alpha, beta = decompose(d, dirs.u, dirs.v)
        if abs(alpha) * dirs.u.norm <= 1e-10 * d.norm or abs(beta) * dirs.v.norm <= 1e-10 * d.norm:
            raise SingularRay(f"ray {name} is parallel to a reference direction")
        slopes.append(beta / alpha)
    m_a, m_b = slopes
    if m_a * m_b <= 0.0:
        raise ComponentMismatch("rays lie in different components")
    result = affine_angle(o, a, b, dirs)
    if not result.is_real:
        raise ComponentMismatch(result.reason or "angle is not real")
    x_a = 1.0 / math.sqrt(abs(m_a))
    x_b = 1.0 / math.sqrt(abs(m_b))
    return result.theta, math.log(x_b / x_a)
