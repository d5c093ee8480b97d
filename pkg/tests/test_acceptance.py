"""Acceptance suite: one criterion per test, one printed pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the report lines.
Every tolerance is fixed here; nothing is calibrated at runtime.
"""

import random
import time
from fractions import Fraction
from math import comb, factorial

import numpy as np

from splinemat import (
    KnotVector,
    PowerPoly,
    SplineCurve,
    basis,
    basis_row,
    cumulative_matrix,
    general_basis_matrix,
    poly_mul,
    toeplitz_from_poly,
    uniform_basis_matrix,
)

F = Fraction

GOLDEN_UNIFORM = {
    0: ((F(1),),),
    1: ((F(1), F(0)),
        (F(-1), F(1))),
    2: ((F(1, 2), F(1, 2), F(0)),
        (F(-1), F(1), F(0)),
        (F(1, 2), F(-1), F(1, 2))),
    3: ((F(1, 6), F(4, 6), F(1, 6), F(0)),
        (F(-3, 6), F(0), F(3, 6), F(0)),
        (F(3, 6), F(-6, 6), F(3, 6), F(0)),
        (F(-1, 6), F(3, 6), F(-3, 6), F(1, 6))),
}

GOLDEN_CUMULATIVE_3 = (
    (F(6, 6), F(5, 6), F(1, 6), F(0)),
    (F(0), F(3, 6), F(3, 6), F(0)),
    (F(0), F(-3, 6), F(3, 6), F(0)),
    (F(0), F(1, 6), F(-2, 6), F(1, 6)),
)

# weight polynomials of the cumulative cubic, constant term first
GOLDEN_LAMBDA_3 = (
    (F(1), F(0), F(0), F(0)),
    (F(5, 6), F(3, 6), F(-3, 6), F(1, 6)),
    (F(1, 6), F(3, 6), F(3, 6), F(-2, 6)),
    (F(0), F(0), F(0), F(1, 6)),
)


def _report(num, text, ok, detail=""):
    line = "acceptance %d [%s] %s" % (num, "PASS" if ok else "FAIL", text)
    if detail:
        line += " (%s)" % detail
    print(line)
    return ok


def clamped(degree, interior, last):
    return KnotVector([0] * (degree + 1) + list(interior) + [last] * (degree + 1))


def bernstein_entries(degree):
    rows = []
    for r in range(degree + 1):
        rows.append(tuple(
            F((-1) ** (r - c) * comb(degree, c) * comb(degree - c, r - c)) if r >= c else F(0)
            for c in range(degree + 1)
        ))
    return tuple(rows)


def column_sums_ok(entries):
    n = len(entries)
    sums = [sum(entries[r][c] for c in range(n)) for r in range(n)]
    return sums[0] == 1 and all(s == 0 for s in sums[1:])


def rel_gap_points(a, b):
    scale = max(1.0, float(np.max(np.abs(a))), float(np.max(np.abs(b))))
    return float(np.max(np.abs(a - b))) / scale


def test_criterion_1_golden_uniform_matrices():
    exact = all(uniform_basis_matrix(k).entries == GOLDEN_UNIFORM[k] for k in range(4))
    best = float("inf")
    for _ in range(7):
        uniform_basis_matrix.cache_clear()
        t0 = time.perf_counter()
        for k in range(4):
            uniform_basis_matrix(k)
        best = min(best, time.perf_counter() - t0)
    fast = best < 1e-3
    assert _report(1, "uniform matrices k=0..3 exact, built under 1 ms",
                   exact and fast, "best build %.1f us" % (best * 1e6))


def test_criterion_2_cumulative_golden_and_weight_polynomials():
    cm = cumulative_matrix(uniform_basis_matrix(3))
    matrix_ok = cm.entries == GOLDEN_CUMULATIVE_3
    lambda_ok = all(cm.column(c) == GOLDEN_LAMBDA_3[c] for c in range(4))
    assert _report(2, "cumulative cubic matrix and its weight polynomials exact",
                   matrix_ok and lambda_ok)


def test_criterion_3_matrix_row_matches_recursive_reference():
    tolerance = 1e-12
    rng = random.Random(20250810)
    t0 = time.perf_counter()
    worst = 0.0
    for k in range(1, 11):
        # float storage keeps the reference in plain double arithmetic;
        # the integer knot values are exact either way
        kv = KnotVector.uniform(2 * k + 2).as_float()
        m = uniform_basis_matrix(k)
        for _ in range(1000):
            u = rng.random()
            row = basis_row(m, u)
            ref = [basis(kv, c, k, k + u) for c in range(k + 1)]
            scale = max(abs(v) for v in ref)
            gap = max(abs(a - b) for a, b in zip(row, ref)) / scale
            worst = max(worst, gap)
    elapsed = time.perf_counter() - t0
    ok = worst <= tolerance and elapsed < 5.0
    assert _report(3, "matrix rows match the recursive reference for k=1..10",
                   ok, "max relative gap %.2e, %.2f s" % (worst, elapsed))


def test_criterion_4_general_recursion_on_uniform_and_clamped_knots():
    uniform_ok = True
    for k in range(9):
        kv = KnotVector.uniform(2 * k + 6)
        want = uniform_basis_matrix(k).entries
        for j in range(k, len(kv.values) - k - 1):
            if general_basis_matrix(kv, k, j).entries != want:
                uniform_ok = False
    bezier = general_basis_matrix(KnotVector([0, 0, 0, 0, 1, 1, 1, 1]), 3, 3)
    bezier_ok = bezier.entries == bernstein_entries(3)
    assert _report(4, "arbitrary-knot recursion: span-independent on uniform knots, "
                      "binomial matrix on clamped knots", uniform_ok and bezier_ok)


def test_criterion_5_structural_invariants():
    matrices = [uniform_basis_matrix(k) for k in range(11)]
    vectors = [
        clamped(3, [1, 2, 3], 4),
        clamped(2, [1, 2], 3),
        KnotVector([0, 0, 1, 3, 3, 4, 7, 11, 11, 12]),
        KnotVector([F(-1, 2), F(0), F(1, 3), F(2, 3), F(5, 3), F(2), F(3), F(4)]),
    ]
    for kv in vectors:
        m_count = len(kv.values)
        for k in (1, 2, 3, 4):
            for j in range(k, m_count - k - 1):
                if kv.values[j] < kv.values[j + 1]:
                    matrices.append(general_basis_matrix(kv, k, j))

    sums_ok = all(column_sums_ok(m.entries) for m in matrices)

    integral_ok = all(
        (v * factorial(k)).denominator == 1
        for k in range(13)
        for row in uniform_basis_matrix(k).entries
        for v in row
    )

    telescope_ok = True
    for m in matrices:
        cm = cumulative_matrix(m)
        n = m.degree + 1
        for c in range(n):
            upper = cm.column(c + 1) if c + 1 < n else (F(0),) * n
            diff = tuple(cm.column(c)[r] - upper[r] for r in range(n))
            if diff != m.column(c):
                telescope_ok = False

    assert _report(5, "column sums (1,0,...,0), factorial-scaled integrality, "
                      "suffix-sum telescoping, all exact",
                   sums_ok and integral_ok and telescope_ok,
                   "%d matrices" % len(matrices))


def test_criterion_6_three_path_agreement_and_continuity():
    tolerance = 1e-10
    rng = random.Random(6)
    worst = 0.0
    draws = 0
    for degree in (1, 2, 3, 5):
        for dim in (1, 2, 3):
            for kind in ("uniform", "clamped", "uniform-float"):
                if kind == "uniform":
                    kv = KnotVector.uniform(2 * degree + 6)
                elif kind == "uniform-float":
                    kv = KnotVector([0.5 * i for i in range(2 * degree + 6)])
                else:
                    kv = clamped(degree, [1, 2, 3], 4)
                n = len(kv.values) - degree - 1
                pts = [[rng.uniform(-10.0, 10.0) for _ in range(dim)] for _ in range(n)]
                curve = SplineCurve(degree, kv, pts)
                lo, hi = (float(v) for v in curve.domain)
                for _ in range(28):
                    tau = rng.uniform(lo, hi)
                    a = curve.eval_coxdeboor(tau)
                    b = curve.eval_matrix(tau)
                    c = curve.eval_cumulative(tau)
                    worst = max(worst, rel_gap_points(a, b), rel_gap_points(a, c),
                                rel_gap_points(b, c))
                    draws += 1
    agreement_ok = worst <= tolerance and draws >= 1000

    # position continuity: left and right span limits at every interior knot
    c0_worst = 0.0
    c1_worst = 0.0
    h = 1e-5
    for degree in (1, 2, 3, 5):
        kv = KnotVector([10 * i for i in range(2 * degree + 6)])
        n = len(kv.values) - degree - 1
        curve = SplineCurve(degree, kv, [[rng.random(), rng.random()] for _ in range(n)])
        m_count = len(kv.values)
        for j in range(degree + 1, m_count - degree - 1):
            left = curve._matrix_point(j - 1, 1.0)
            right = curve._matrix_point(j, 0.0)
            c0_worst = max(c0_worst, float(np.max(np.abs(left - right))))
            knot = float(kv.values[j])
            if degree >= 2:
                fd = (curve.eval_matrix(knot + h) - curve.eval_matrix(knot - h)) / (2 * h)
                an = curve.eval_derivative(knot, 1)
                c1_worst = max(c1_worst, float(np.max(np.abs(fd - an))))
        if degree == 1:
            # corners sit at the knots, so probe derivative inside the spans
            lo, hi = (float(v) for v in curve.domain)
            for mid in np.arange(lo + 5.0, hi, 10.0):
                fd = (curve.eval_matrix(float(mid) + h) - curve.eval_matrix(float(mid) - h)) / (2 * h)
                an = curve.eval_derivative(float(mid), 1)
                c1_worst = max(c1_worst, float(np.max(np.abs(fd - an))))
    continuity_ok = c0_worst <= 1e-9 and c1_worst <= 1e-6

    assert _report(6, "three evaluation paths agree; position and slope continuous "
                      "at interior knots",
                   agreement_ok and continuity_ok,
                   "path gap %.2e over %d draws, C0 %.2e, C1 %.2e"
                   % (worst, draws, c0_worst, c1_worst))


def test_criterion_7_toeplitz_product_equals_convolution():
    rng = random.Random(77)

    def draw():
        degree = rng.randint(0, 8)
        coeffs = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(degree)]
        coeffs.append(F(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9)))
        return PowerPoly(coeffs)

    ok = True
    for _ in range(500):
        g, q = draw(), draw()
        direct = [F(0)] * (g.degree + q.degree + 1)
        for i, a in enumerate(g.coeffs):
            for j, b in enumerate(q.coeffs):
                direct[i + j] += a * b
        via_matrix = toeplitz_from_poly(g, len(direct)).apply(q.coeffs)
        if via_matrix != direct or list(poly_mul(g, q).coeffs) != direct:
            ok = False
    assert _report(7, "banded-matrix polynomial product equals direct convolution, "
                      "500 exact cases", ok)
