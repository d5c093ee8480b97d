"""Knot vectors, span lookup, and the local span-normalization coefficients."""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import DegenerateSpan, DomainError, InvalidKnots

Scalar = Union[int, float, Fraction]

# Relative slack when deciding whether float-stored knots are evenly spaced.
_UNIFORM_RTOL = 1e-12


class KnotVector:
    """Non-decreasing sequence of parameter values defining the spans.

    Values are stored either exactly (ints and Fractions, tagged
    ``"rational"``) or as floats (tagged ``"float"``).  Exact storage is
    required for exact basis-matrix construction; float storage is fine
    for plain evaluation.  Instances are immutable and safe to share.
    """

    __slots__ = ("values", "storage", "is_uniform", "delta")

    def __init__(self, values: Sequence[Scalar]):
        vals = tuple(values)
        if len(vals) < 2:
            raise InvalidKnots("need at least 2 knots, got %d" % len(vals))
        if any(isinstance(v, float) for v in vals):
            storage = "float"
            vals = tuple(float(v) for v in vals)
            if not all(math.isfinite(v) for v in vals):
                raise InvalidKnots("knots must be finite")
        else:
            storage = "rational"
            vals = tuple(Fraction(v) for v in vals)
        for a, b in zip(vals, vals[1:]):
            if not a <= b:
                raise InvalidKnots("knots must be non-decreasing: %r > %r" % (a, b))
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "storage", storage)
        uniform, delta = _uniform_spacing(vals, storage)
        object.__setattr__(self, "is_uniform", uniform)
        object.__setattr__(self, "delta", delta)

    def __setattr__(self, name, value):
        raise AttributeError("KnotVector is immutable")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, KnotVector) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return "KnotVector(%r, storage=%r)" % (list(self.values), self.storage)

    @classmethod
    def uniform(cls, count: int, start: Scalar = 0, step: Scalar = 1) -> "KnotVector":
        """Evenly spaced knots ``start + i*step`` for ``i < count``.

        Exact (rational) when ``start`` and ``step`` are ints or Fractions.
        """
        return cls([start + i * step for i in range(count)])

    def as_rational(self) -> "KnotVector":
        """Exact rational copy of this vector.

        Floats convert exactly (every finite double is a dyadic rational),
        so evaluation results are unchanged; this only switches the storage
        tag so exact construction is permitted.
        """
        if self.storage == "rational":
            return self
        return KnotVector([Fraction(v) for v in self.values])

    def as_float(self) -> "KnotVector":
        if self.storage == "float":
            return self
        return KnotVector([float(v) for v in self.values])

    def domain(self, degree: int) -> tuple:
        """Evaluable parameter range for a spline of the given degree."""
        m = len(self.values)
        if degree < 0 or m - degree - 1 <= degree:
            raise DomainError("no evaluable domain for degree %d with %d knots" % (degree, m))
        return self.values[degree], self.values[m - degree - 1]


def _uniform_spacing(vals, storage):
    diffs = [b - a for a, b in zip(vals, vals[1:])]
    if storage == "rational":
        if diffs[0] > 0 and all(d == diffs[0] for d in diffs):
            return True, diffs[0]
        return False, None
    mean = (vals[-1] - vals[0]) / (len(vals) - 1)
    if mean > 0 and all(abs(d - mean) <= _UNIFORM_RTOL * mean for d in diffs):
        return True, mean
    return False, None


def find_span(kv: KnotVector, degree: int, tau: Scalar) -> int:
    """Index j of the span containing tau, with tau in [tau_j, tau_{j+1}).

    The right end of the evaluable domain clamps to the last span of
    positive width; repeated knots (zero-width spans) are skipped.

    Raises DomainError when tau lies outside [tau_degree, tau_{M-degree-1}]
    or no span of positive width exists there.
    """
    vals = kv.values
    left, right = kv.domain(degree)
    if left >= right:
        raise DomainError("evaluable domain [%s, %s] is degenerate" % (left, right))
    if not left <= tau <= right:
        raise DomainError("tau outside evaluable domain: %s not in [%s, %s]" % (tau, left, right))
    hi = len(vals) - degree - 2
    if tau == right:
        j = hi
        while vals[j] == vals[j + 1]:
            j -= 1
        return j
    return bisect_right(vals, tau) - 1


def normalize(kv: KnotVector, span: int, tau: Scalar) -> Scalar:
    """Map tau affinely onto [0, 1] over the span [tau_span, tau_{span+1}].

    Exact when both inputs are rational.  Raises DegenerateSpan for a
    zero-width span.
    """
    a, b = kv.values[span], kv.values[span + 1]
    if a == b:
        raise DegenerateSpan("span %d has zero width" % span)
    return (tau - a) / (b - a)


@dataclass(frozen=True)
class LocalCoefficients:
    """Span-local interpolation coefficients for one degree level.

    Entry c of ``d0``/``d1`` belongs to basis index ``first + c`` where
    ``first = span - degree``; entry c of ``h0``/``h1`` belongs to basis
    index ``first + c`` as well (one entry fewer, since the h pair of the
    last index multiplies a function with no support on the span).

    Whenever the shared denominators are non-zero the identities
    ``h0[c] == 1 - d0[c+1]`` and ``h1[c] == -d1[c+1]`` hold.
    """

    degree: int
    span: int
    first: int
    d0: tuple
    d1: tuple
    h0: tuple
    h1: tuple


def local_coefficients(kv: KnotVector, degree: int, span: int) -> LocalCoefficients:
    """Coefficient table for raising degree ``degree-1`` functions on a span.

    For basis index i the pairs are

        d_i = ((tau_span - tau_i) / w_i,  (tau_{span+1} - tau_span) / w_i)
        h_i = ((tau_{i+degree+1} - tau_span) / v_i,  -(tau_{span+1} - tau_span) / v_i)

    with w_i = tau_{i+degree} - tau_i and v_i = tau_{i+degree+1} - tau_{i+1}.
    A zero denominator means the factor multiplies a basis function that
    vanishes identically on the span, so the whole pair is set to zero
    (this subsumes the 0/0 = 0 convention).
    """
    vals = kv.values
    if degree < 1:
        raise ValueError("degree must be >= 1")
    first = span - degree
    if first < 0 or span + degree + 1 > len(vals) - 1:
        raise DomainError("span %d invalid for degree %d" % (span, degree))
    tj, tj1 = vals[span], vals[span + 1]
    if tj == tj1:
        raise DegenerateSpan("span %d has zero width" % span)
    width = tj1 - tj
    d0, d1, h0, h1 = [], [], [], []
    for i in range(first, span + 1):
        den = vals[i + degree] - vals[i]
        if den == 0:
            d0.append(_zero_like(den))
            d1.append(_zero_like(den))
        else:
            d0.append((tj - vals[i]) / den)
            d1.append(width / den)
    for i in range(first, span):
        den = vals[i + degree + 1] - vals[i + 1]
        if den == 0:
            h0.append(_zero_like(den))
            h1.append(_zero_like(den))
        else:
            h0.append((vals[i + degree + 1] - tj) / den)
            h1.append(-width / den)
    return LocalCoefficients(
        degree=degree,
        span=span,
        first=first,
        d0=tuple(d0),
        d1=tuple(d1),
        h0=tuple(h0),
        h1=tuple(h1),
    )


def _zero_like(x):
    return Fraction(0) if isinstance(x, (Fraction, int)) else 0.0
