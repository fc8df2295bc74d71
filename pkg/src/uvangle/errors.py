"""Exception types for degenerate or out-of-domain geometric inputs."""


class GeometryError(Exception):
    """Base class for every domain error raised by this package."""


class ParallelLines(GeometryError):
    """Two lines have no (finite) intersection point."""


class SingularMap(GeometryError):
    """An affine map cannot be inverted because its linear part is singular."""


class DegenerateConfiguration(GeometryError):
    """A construction's defining data is degenerate (dependent directions, coincident points, ...)."""


class LambdaParallel(GeometryError):
    """The auxiliary line fails to meet one of the reference lines or the ray."""


class CoincidentIntersection(GeometryError):
    """Intersection points on the auxiliary line coincide, so the area ratio is undefined."""


class UndefinedCrossRatio(GeometryError):
    """Coinciding entries make the cross ratio an indeterminate 0/0 form."""


class SingularRay(GeometryError):
    """A ray is parallel to one of the reference directions."""


class ComponentMismatch(GeometryError):
    """Two rays lie in different connected components of the direction domain."""


class ThetaTooSmall(GeometryError):
    """The requested angle is below the numerically supported minimum."""


class SingularPosition(GeometryError):
    """A point lies on (or too close to) the singular line pair of a configuration."""


class NotOnCurve(GeometryError):
    """A point expected to lie on a curve does not satisfy its equation."""


class NoRealIntersection(GeometryError):
    """A line misses a curve (no real intersection points)."""


class CoincidentParameters(GeometryError):
    """Two curve parameters coincide where distinct values are required."""


class ParallelChords(GeometryError):
    """Two chords are parallel and have no intersection."""


class IdenticalCurves(GeometryError):
    """Two curves coincide, so their radical axis is undefined."""


class NonLinearDifference(GeometryError):
    """The defining quadratics are incompatible; subtracting them leaves quadratic terms."""


class EmptyRadicalAxis(GeometryError):
    """The quadratic difference is a nonzero constant; no point satisfies it."""


class ParallelAxes(GeometryError):
    """Radical axes are parallel (or empty) and have no common point."""


class InvalidPosition(GeometryError):
    """A point parameter lies on an excluded arc of the curve."""


class DegenerateIntersection(GeometryError):
    """A required auxiliary intersection point does not exist."""


class PoleAtT(GeometryError):
    """The expansion parameter hits (or exceeds) a pole of the rational form."""


class EmptyLocus(GeometryError):
    """There are not enough sampled points to render."""
