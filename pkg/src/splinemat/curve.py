"""Spline curves in R^d with three mutually cross-checking evaluation paths.

The recursive path sums every basis function against its control point and
serves as the slow reference.  The matrix path looks up the span, maps the
parameter to [0, 1], and applies the span's basis matrix to the k+1 local
control points.  The cumulative path writes the same span value as the
first local point plus weighted differences of consecutive points.  All
three agree to floating-point accuracy on the whole evaluable domain.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import coxdeboor
from .basismatrix import cumulative_matrix, general_basis_matrix, uniform_basis_matrix
from .errors import DomainError
from .knots import KnotVector, find_span, normalize


@dataclass(frozen=True)
class SplineCurve:
    """Degree, knots, and an (N, d) float array of control points.

    Counts are tied: a degree-k curve over M knots carries N = M - k - 1
    control points.  Instances are immutable; evaluation is pure and safe
    to run concurrently (span matrices are cached per span, and a repeated
    insert of the same value is harmless).
    """

    degree: int
    knots: KnotVector
    points: np.ndarray
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __init__(self, degree: int, knots: KnotVector, points):
        if degree < 0:
            raise ValueError("degree must be non-negative")
        pts = np.asarray(points, dtype=float)
        if pts.ndim == 1:
            pts = pts[:, None]
        if pts.ndim != 2 or pts.shape[0] == 0 or pts.shape[1] == 0:
            raise ValueError("control points must form an (N, d) array")
        if not np.all(np.isfinite(pts)):
            raise ValueError("control points must be finite")
        n = pts.shape[0]
        if n < degree + 1:
            raise ValueError("need at least %d control points for degree %d, got %d"
                             % (degree + 1, degree, n))
        if len(knots.values) != n + degree + 1:
            raise ValueError("knot count %d does not match %d points of degree %d (want %d)"
                             % (len(knots.values), n, degree, n + degree + 1))
        pts.setflags(write=False)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "knots", knots)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "_cache", {})

    @property
    def count(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    @property
    def domain(self) -> tuple:
        return self.knots.domain(self.degree)

    def _check_tau(self, tau) -> None:
        lo, hi = self.domain
        if not lo <= tau <= hi:
            raise DomainError("tau outside evaluable domain: %s not in [%s, %s]" % (tau, lo, hi))

    def _span_matrix_rows(self, span: int) -> list:
        key = ("m", span)
        rows = self._cache.get(key)
        if rows is None:
            rows = self._exact_matrix(span).as_float_rows()
            self._cache[key] = rows
        return rows

    def _span_cumulative_rows(self, span: int) -> list:
        key = ("c", span)
        rows = self._cache.get(key)
        if rows is None:
            rows = cumulative_matrix(self._exact_matrix(span)).as_float_rows()
            self._cache[key] = rows
        return rows

    def _exact_matrix(self, span: int):
        if self.knots.is_uniform:
            return uniform_basis_matrix(self.degree)
        rkv = self._cache.get("rkv")
        if rkv is None:
            rkv = self.knots.as_rational()
            self._cache["rkv"] = rkv
        return general_basis_matrix(rkv, self.degree, span)

    def eval_coxdeboor(self, tau) -> np.ndarray:
        """Reference evaluation: sum every basis function times its point."""
        self._check_tau(tau)
        out = np.zeros(self.dim)
        for i in range(self.count):
            w = coxdeboor.basis(self.knots, i, self.degree, tau)
            if w:
                out += float(w) * self.points[i]
        return out

    def eval_matrix(self, tau) -> np.ndarray:
        """Span lookup, parameter normalization, basis matrix times local points."""
        self._check_tau(tau)
        j = find_span(self.knots, self.degree, tau)
        u = float(normalize(self.knots, j, tau))
        return self._matrix_point(j, u)

    def _matrix_point(self, span: int, u: float) -> np.ndarray:
        weights = _horner_row(self._span_matrix_rows(span), u)
        local = self.points[span - self.degree: span + 1]
        return np.asarray(weights) @ local

    def eval_cumulative(self, tau) -> np.ndarray:
        """First local point plus cumulative-weighted differences."""
        self._check_tau(tau)
        j = find_span(self.knots, self.degree, tau)
        u = float(normalize(self.knots, j, tau))
        lam = _horner_row(self._span_cumulative_rows(j), u)
        first = j - self.degree
        out = self.points[first].copy()
        for c in range(1, self.degree + 1):
            out += lam[c] * (self.points[first + c] - self.points[first + c - 1])
        return out

    def eval_derivative(self, tau, order: int) -> np.ndarray:
        """Derivative of the matrix-path polynomial, chain rule per span width.

        Orders above the degree are identically zero.
        """
        if order < 1:
            raise ValueError("order must be >= 1")
        self._check_tau(tau)
        if order > self.degree:
            return np.zeros(self.dim)
        j = find_span(self.knots, self.degree, tau)
        u = float(normalize(self.knots, j, tau))
        rows = self._span_matrix_rows(j)
        k = self.degree
        weights = [0.0] * (k + 1)
        for c in range(k + 1):
            acc = 0.0
            for r in range(k, order - 1, -1):
                scale = 1.0
                for t in range(r, r - order, -1):
                    scale *= t
                acc += scale * u ** (r - order) * rows[r][c]
            weights[c] = acc
        width = float(self.knots.values[j + 1] - self.knots.values[j])
        local = self.points[j - self.degree: j + 1]
        return (np.asarray(weights) @ local) / width ** order

    def sample(self, n: int) -> list:
        """n matrix-path evaluations at evenly spaced parameters, ends included."""
        if n < 2:
            raise ValueError("need at least 2 samples")
        lo, hi = self.domain
        if not lo < hi:
            raise DomainError("evaluable domain [%s, %s] is degenerate" % (lo, hi))
        out = []
        for t in np.linspace(float(lo), float(hi), n):
            # rounding the exact bounds to float may step just outside the
            # domain; pull such parameters back onto the exact endpoints
            tau = float(t)
            if tau < lo:
                tau = lo
            elif tau > hi:
                tau = hi
            out.append((float(tau), self.eval_matrix(tau)))
        return out


def _horner_row(rows: list, u: float) -> list:
    size = len(rows)
    out = []
    for c in range(size):
        acc = rows[size - 1][c]
        for r in range(size - 2, -1, -1):
            acc = acc * u + rows[r][c]
        out.append(acc)
    return out
