"""Builders for the classical named q-series.

Everything here is an exact truncated expansion: the Dedekind eta function
``q^(1/24) * prod(1 - q^i)``, its classical sum-side companions (the
pentagonal-number sum and the cube-identity sum), the weight-two
quasimodular Eisenstein series, and Weber's three half-integer product
functions.  Every infinite sum or product is cut at the analytically forced
bound: the first omitted factor or summand cannot touch any exponent below
the requested order, so all reported coefficients are exact.
"""

from __future__ import annotations

from functools import lru_cache

from .rationals import Rational, largest_int_below, rational
from .series import QSeries

ETA_EXPONENT = Rational(1, 24)
WEBER_F_EXPONENT = Rational(-1, 48)
WEBER_F2_EXPONENT = Rational(1, 24)

#: Names understood by :func:`named_series` (eta powers are ``eta^M``).
NAMED_SERIES = ("eta", "eta^M", "pentagonal_sum", "jacobi_cube_sum", "g2",
                "weber_f", "weber_f1", "weber_f2")


@lru_cache(maxsize=None)
def _euler_product_cached(order):
    acc = QSeries.one(order)
    i = 1
    while i < order:
        acc = acc * QSeries.from_terms([(0, 1), (i, -1)], order)
        i += 1
    return acc


def euler_product(order):
    """``prod_{i>=1} (1 - q^i)`` with all exponents < order exact."""
    return _euler_product_cached(rational(order))


@lru_cache(maxsize=None)
def _euler_inverse_cached(order):
    return _euler_product_cached(order).invert()


def euler_inverse(order):
    """The partition generating function ``1/prod(1 - q^i)``, exact below order."""
    return _euler_inverse_cached(rational(max(rational(order), 1)))


def eta_series(order):
    """Dedekind eta: ``q^(1/24) * prod_{i>=1}(1 - q^i)``, exact below order."""
    order = rational(order)
    if not order > ETA_EXPONENT:
        raise ValueError("order must exceed 1/24")
    return euler_product(order - ETA_EXPONENT).shift(ETA_EXPONENT)


def eta_power(exponent, order):
    """``eta**exponent`` with precision at least ``order``.

    When every exponent of the power lies at or beyond ``order`` the result
    is the empty (zero) series at that precision.
    """
    m = int(exponent)
    if m < 0:
        raise ValueError("eta power exponent must be >= 1")
    order = rational(order)
    if m == 0:
        return QSeries.one(order)
    base = Rational(m, 24)
    if not order > base:
        return QSeries.zero(order)
    eta = eta_series(order - Rational(m - 1, 24))
    result = eta ** m
    assert result.precision >= order
    return result


def pentagonal_sum_series(order):
    """Sum side of the pentagonal-number identity for eta.

    ``q^(1/24) * sum_{n in Z} (-1)^n q^((3n^2-n)/2)`` with every exponent
    below ``order`` present; the summation window is found by exact integer
    search on ``(3n^2 - |n|)/2``.
    """
    order = rational(order)
    if not order > ETA_EXPONENT:
        raise ValueError("order must exceed 1/24")
    rel = order - ETA_EXPONENT
    terms = [(ETA_EXPONENT, 1)]
    n = 1
    while True:
        lo = (3 * n * n - n) // 2
        if not lo < rel:
            break
        sign = -1 if n % 2 else 1
        terms.append((ETA_EXPONENT + lo, sign))
        hi = (3 * n * n + n) // 2
        if hi < rel:
            terms.append((ETA_EXPONENT + hi, sign))
        n += 1
    return QSeries.from_terms(terms, order)


def jacobi_cube_series(order):
    """Sum side of the eta-cube identity.

    ``q^(1/8) * sum_{m>=0} (-1)^m (2m+1) q^(m(m+1)/2)`` truncated below order.
    """
    order = rational(order)
    prefix = Rational(1, 8)
    if not order > prefix:
        raise ValueError("order must exceed 1/8")
    rel = order - prefix
    terms = []
    m = 0
    while True:
        e = m * (m + 1) // 2
        if not e < rel:
            break
        terms.append((prefix + e, (2 * m + 1) * (-1 if m % 2 else 1)))
        m += 1
    return QSeries.from_terms(terms, order)


def eisenstein_g2(order):
    """Weight-two quasimodular Eisenstein series, normalised as
    ``-1/12 + 2 * sum_{m>=1} sigma_1(m) q^m``.

    The divisor sums are sieved directly rather than accumulated from the
    Lambert series, so each coefficient is produced exactly once.
    """
    order = rational(order)
    if not order > 0:
        raise ValueError("order must be positive")
    top = largest_int_below(order)
    sigma = [0] * (top + 1)
    for d in range(1, top + 1):
        for j in range(d, top + 1, d):
            sigma[j] += d
    terms = [(0, Rational(-1, 12))]
    terms.extend((m, 2 * sigma[m]) for m in range(1, top + 1))
    return QSeries.from_terms(terms, order)


def weber_series(which, order):
    """One of Weber's three product functions, exact below order.

    ``which`` is ``"f"`` (plus signs, half-integer steps), ``"f1"`` (minus
    signs, half-integer steps) or ``"f2"`` (plus signs, integer steps).
    """
    key = str(which).lower()
    order = rational(order)
    if key in ("f", "f1"):
        prefix = WEBER_F_EXPONENT
        sign = 1 if key == "f" else -1
        if not order > prefix:
            raise ValueError("order must exceed -1/48")
        rel = order - prefix
        acc = QSeries.one(rel)
        n = 0
        while Rational(2 * n + 1, 2) < rel:
            acc = acc * QSeries.from_terms(
                [(0, 1), (Rational(2 * n + 1, 2), sign)], rel)
            n += 1
        return acc.shift(prefix)
    if key == "f2":
        prefix = WEBER_F2_EXPONENT
        if not order > prefix:
            raise ValueError("order must exceed 1/24")
        rel = order - prefix
        acc = QSeries.one(rel)
        n = 1
        while n < rel:
            acc = acc * QSeries.from_terms([(0, 1), (n, 1)], rel)
            n += 1
        return acc.shift(prefix)
    raise ValueError(f"unknown Weber function {which!r} (use f, f1 or f2)")


def named_series(name, order):
    """Dispatch a builder by name: eta, eta^M, pentagonal_sum,
    jacobi_cube_sum, g2, weber_f, weber_f1, weber_f2."""
    key = str(name).strip().lower()
    if key == "eta":
        return eta_series(order)
    if key.startswith("eta^"):
        m = int(key[4:])
        if m < 1:
            raise ValueError("eta power must be >= 1")
        return eta_power(m, order)
    if key == "pentagonal_sum":
        return pentagonal_sum_series(order)
    if key == "jacobi_cube_sum":
        return jacobi_cube_series(order)
    if key == "g2":
        return eisenstein_g2(order)
    if key in ("weber_f", "weber_f1", "weber_f2"):
        return weber_series(key[6:], order)
    raise ValueError(f"unknown series name {name!r}; "
                     f"known: {', '.join(NAMED_SERIES)}")
