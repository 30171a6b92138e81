"""Exceptions and warning categories shared across the package."""


class ExtHypError(Exception):
    """Base class for geometry errors."""


class DimensionMismatch(ExtHypError):
    """Operands live in Minkowski spaces of different dimension."""


class TangencyError(ExtHypError):
    """A bounding hyperplane (or carrier subsphere) is tangent to the
    ideal boundary, or a combinatorial breakpoint of the radial profile
    falls inside the contour strip.  Such configurations are excluded
    from the contour reduction."""


class UnsupportedConfiguration(ExtHypError):
    """The requested quantity is not defined by the model conventions
    implemented here (e.g. distance between two distinct ideal points)."""


class DivergentMeasure(ExtHypError):
    """The region is not mu-measurable: the eps-regularized volumes (or
    the cutoff estimates) fail to converge."""

    def __init__(self, message: str = "", diagnostics=None):
        super().__init__(message or "measure diverges")
        self.diagnostics = diagnostics


class QuadratureError(ExtHypError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class AmbiguousAntipodal(UserWarning):
    """Antipodal endpoints: every great circle through them has the same
    half-length, pi*i, which is returned."""


class FormalBranch(UserWarning):
    """A tangent-line cross ratio was evaluated with the formal branch
    values log(-1) = -pi*i / log(1) = -2*pi*i."""
