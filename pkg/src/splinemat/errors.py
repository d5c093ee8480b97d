"""Exception types shared across the package."""


class SplineError(Exception):
    """Base class for all errors raised by this package."""


class InvalidKnots(SplineError):
    """Knot sequence violates its invariants (decreasing, too short, non-finite)."""


class DomainError(SplineError):
    """Parameter value lies outside the evaluable domain."""


class DegenerateSpan(SplineError):
    """Operation requires a span of positive width."""


class SizeError(SplineError):
    """Requested matrix dimensions cannot hold the data."""


class DegreeTooLarge(SplineError):
    """Degree exceeds the supported cap."""


class NonRationalKnots(SplineError):
    """Exact matrix construction requires rationally-stored knots."""
