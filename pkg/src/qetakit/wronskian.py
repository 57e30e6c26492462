"""Wronskian and Vandermonde machinery over exact truncated series.

The Wronskian here always uses the multiplicative derivative q d/dq.  The
determinant is evaluated column by column with memoized row-subset minors, a
division-free scheme that costs k * 2^(k-1) series products: it coincides
with cofactor expansion for small k, never divides by a non-unit pivot, and
keeps every intermediate minor on a single fractional exponent class.  The
independent oracle :func:`wronskian_vandermonde_expand` recomputes the same
determinant as a direct multi-sum over term tuples weighted by Vandermonde
factors.
"""

from __future__ import annotations

from .rationals import Rational, rational
from .series import QSeries


def vandermonde(values):
    """Product of pairwise differences ``prod_{j<i}(x_i - x_j)``; 1 for k <= 1."""
    xs = list(values)
    result = Rational(1)
    for i in range(1, len(xs)):
        xi = xs[i]
        for j in range(i):
            result *= xi - xs[j]
            if not result:
                return result
    return result


def theta_derivative_rows(entries, depth):
    """Rows of successive q d/dq derivatives: row r is the r-th derivative."""
    rows = [list(entries)]
    for _ in range(depth - 1):
        rows.append([y.theta_derive() for y in rows[-1]])
    return rows


def wronskian(entries):
    """Determinant of the q d/dq derivative matrix of the given series."""
    entries = list(entries)
    k = len(entries)
    if k == 0:
        raise ValueError("wronskian needs at least one series")
    if k == 1:
        return entries[0]
    rows = theta_derivative_rows(entries, k)
    # layer[mask] = minor using the row set `mask` and the columns placed so far
    layer = {1 << r: rows[r][0] for r in range(k)}
    for c in range(1, k):
        new = {}
        for mask, minor in layer.items():
            for r in range(k):
                bit = 1 << r
                if mask & bit:
                    continue
                term = rows[r][c] * minor
                if ((mask & (bit - 1)).bit_count() + c) & 1:
                    term = -term
                key = mask | bit
                prev = new.get(key)
                new[key] = term if prev is None else prev + term
        layer = new
    return layer[(1 << k) - 1]


def wronskian_vandermonde_expand(entries):
    """The same Wronskian as a direct sum over one term from each series.

    Each choice of exponents (e_1, ..., e_k) contributes the Vandermonde of
    the exponents times the product of the chosen coefficients at
    ``q^(e_1+...+e_k)``.  Serves as the independent oracle for
    :func:`wronskian`.
    """
    entries = list(entries)
    k = len(entries)
    if k == 0:
        raise ValueError("wronskian needs at least one series")
    lows = [y._low_exponent() for y in entries]
    total_low = sum(lows, Rational(0))
    bound = min(y.precision - low for y, low in zip(entries, lows)) + total_low
    if any(y.is_zero for y in entries):
        return QSeries.zero(bound)
    term_lists = [y.terms() for y in entries]
    suffix_low = [Rational(0)] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix_low[i] = suffix_low[i + 1] + lows[i]
    acc = {}
    chosen_e = [None] * k
    chosen_c = [None] * k

    def descend(i, partial):
        if i == k:
            weight = vandermonde(chosen_e)
            if weight:
                for c in chosen_c:
                    weight *= c
                acc[partial] = acc.get(partial, Rational(0)) + weight
            return
        for e, c in term_lists[i]:
            if not partial + e + suffix_low[i + 1] < bound:
                break
            chosen_e[i] = e
            chosen_c[i] = c
            descend(i + 1, partial + e)

    descend(0, Rational(0))
    return QSeries.from_terms(acc.items(), bound)


def abel_log_derivative_check(entries, expected_f1, order):
    """Check the first-coefficient consequence of the first-order reduction:
    ``theta(W) + f1 * W = 0`` below the given order.

    ``entries`` must carry enough precision for the comparison; a vector
    whose Wronskian vanishes up to precision is rejected.
    """
    w = wronskian(entries)
    if w.is_zero:
        raise ValueError("degenerate fundamental system: Wronskian is zero "
                         "up to its precision")
    residual = w.theta_derive() + expected_f1 * w
    return residual.equal_up_to(QSeries.zero(order), order)


def scale_by_matrix(matrix, entries):
    """Entrywise rational linear combinations: row i of the result is
    ``sum_j matrix[i][j] * entries[j]``."""
    entries = list(entries)
    k = len(entries)
    if len(matrix) != k or any(len(row) != k for row in matrix):
        raise ValueError(f"matrix must be {k}x{k}")
    out = []
    for row in matrix:
        acc = None
        for coeff, y in zip(row, entries):
            term = y._scale(coeff)
            acc = term if acc is None else acc + term
        out.append(acc)
    return out


def matrix_determinant(matrix):
    """Exact determinant of a square rational matrix."""
    k = len(matrix)
    if k == 0:
        return Rational(1)
    if any(len(row) != k for row in matrix):
        raise ValueError(f"matrix must be {k}x{k}")
    rows = [[rational(x) for x in row] for row in matrix]
    layer = {1 << r: rows[r][0] for r in range(k)}
    for c in range(1, k):
        new = {}
        for mask, minor in layer.items():
            for r in range(k):
                bit = 1 << r
                if mask & bit:
                    continue
                term = rows[r][c] * minor
                if ((mask & (bit - 1)).bit_count() + c) & 1:
                    term = -term
                key = mask | bit
                new[key] = new.get(key, Rational(0)) + term
        layer = new
    return layer[(1 << k) - 1]
