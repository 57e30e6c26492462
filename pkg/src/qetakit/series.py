"""Truncated formal power series in fractional powers of q over exact rationals.

A :class:`QSeries` is a finite collection of terms ``c * q**((a + n)/D)``
together with an explicit precision bound ``P``: every coefficient of an
exponent below ``P`` is exactly known, everything at or beyond ``P`` is
unknown.  All ring operations propagate ``P`` pessimistically, so a reported
coefficient is always exact no matter how long the pipeline that produced it.

Representation invariants (enforced by the constructor):

* every stored exponent ``(a + n)/D`` is strictly below ``P``;
* no stored coefficient is zero;
* the step map is keyed by non-negative integers, step 0 carries the lowest
  term, and ``gcd(D, a, steps)`` is 1, so the grid is canonical;
* ``a/D <= P`` (for the zero series the offset is ``floor(P)`` on grid 1).

Exponents are plain rationals (see :mod:`qetakit.rationals`); values are
immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import numbers
import re
from math import gcd, lcm
from types import MappingProxyType

from .rationals import (
    Rational,
    _RAT_ZERO,
    largest_int_below,
    rat_floor,
    rational,
)


class PrecisionError(ValueError):
    """Raised when a request reaches at or beyond a series' precision bound."""


class NotInvertibleError(ArithmeticError):
    """Raised when inverting a series that is zero up to its precision."""


_HEADER_RE = re.compile(r"^D=(\d+) P=(-?\d+(?:/\d+)?)$")


class QSeries:
    """Exact truncated series in q**(1/D) with a tracked precision bound."""

    __slots__ = ("grid_denominator", "offset", "precision", "_coeffs", "_items")

    def __init__(self, grid_denominator, offset, coefficients, precision):
        D = int(grid_denominator)
        if D <= 0:
            raise ValueError("grid denominator must be positive")
        a = int(offset)
        P = rational(precision)
        coeffs = {}
        for n, c in coefficients.items():
            c = rational(c)
            if c:
                coeffs[int(n)] = c
        if coeffs:
            lo = min(coeffs)
            if lo:
                a += lo
                coeffs = {n - lo: c for n, c in coeffs.items()}
            if not Rational(a + max(coeffs), D) < P:
                raise PrecisionError("term beyond precision")
            g = gcd(D, a)
            if g > 1:
                for n in coeffs:
                    g = gcd(g, n)
                    if g == 1:
                        break
            if g > 1:
                D //= g
                a //= g
                coeffs = {n // g: c for n, c in coeffs.items()}
        else:
            D = 1
            a = rat_floor(P)
        self.grid_denominator = D
        self.offset = a
        self.precision = P
        self._coeffs = coeffs
        self._items = None

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, precision):
        """The zero series known up to the given precision."""
        return cls(1, 0, {}, precision)

    @classmethod
    def one(cls, precision):
        """The constant series 1 (requires precision > 0)."""
        return cls.monomial(1, 0, precision)

    @classmethod
    def monomial(cls, coeff, exponent, precision):
        """Single term ``coeff * q**exponent``; the zero series if coeff = 0."""
        c = rational(coeff)
        P = rational(precision)
        if not c:
            return cls.zero(P)
        e = rational(exponent)
        if not e < P:
            raise PrecisionError("term beyond precision")
        return cls(int(e.denominator), int(e.numerator), {0: c}, P)

    @classmethod
    def from_terms(cls, terms, precision):
        """Build a series from (exponent, coefficient) pairs.

        Pairs with equal exponents are summed; all exponents must lie below
        the precision bound.
        """
        P = rational(precision)
        acc = {}
        for e, c in terms:
            e = rational(e)
            c = rational(c)
            if c:
                acc[e] = acc.get(e, _RAT_ZERO) + c
        acc = {e: c for e, c in acc.items() if c}
        if not acc:
            return cls.zero(P)
        D = 1
        for e in acc:
            D = lcm(D, int(e.denominator))
        coeffs = {int(e.numerator) * (D // int(e.denominator)): c
                  for e, c in acc.items()}
        return cls(D, 0, coeffs, P)

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    @property
    def coefficients(self):
        """Read-only step -> coefficient map (term is coeff * q**((a+n)/D))."""
        return MappingProxyType(self._coeffs)

    @property
    def is_zero(self):
        """True when no term is known below the precision bound."""
        return not self._coeffs

    def terms(self):
        """Sorted list of (exponent, coefficient) pairs."""
        if self._items is None:
            D = self.grid_denominator
            a = self.offset
            self._items = [(Rational(a + n, D), c)
                           for n, c in sorted(self._coeffs.items())]
        return list(self._items)

    def lowest_term(self):
        """(exponent, coefficient) of the lowest term, or None for zero."""
        if not self._coeffs:
            return None
        return Rational(self.offset, self.grid_denominator), self._coeffs[0]

    def _low_exponent(self):
        # the zero series counts as starting at its precision bound
        if not self._coeffs:
            return self.precision
        return Rational(self.offset, self.grid_denominator)

    def coefficient(self, exponent):
        """Exact coefficient at the given exponent (it must lie below P)."""
        e = rational(exponent)
        if not e < self.precision:
            raise PrecisionError("insufficient precision")
        s = e * self.grid_denominator - self.offset
        if s.denominator != 1 or s < 0:
            return _RAT_ZERO
        return self._coeffs.get(int(s), _RAT_ZERO)

    def _terms_below(self, bound):
        D = self.grid_denominator
        a = self.offset
        return {Rational(a + n, D): c for n, c in self._coeffs.items()
                if Rational(a + n, D) < bound}

    def equal_up_to(self, other, bound):
        """True iff all coefficients of exponents < bound agree exactly."""
        b = rational(bound)
        if b > self.precision or b > other.precision:
            raise PrecisionError("insufficient precision")
        return self._terms_below(b) == other._terms_below(b)

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, numbers.Rational):
            other = QSeries.monomial(other, 0, self.precision)
        elif not isinstance(other, QSeries):
            return NotImplemented
        D = lcm(self.grid_denominator, other.grid_denominator)
        fx = D // self.grid_denominator
        fy = D // other.grid_denominator
        P = min(self.precision, other.precision)
        smax = largest_int_below(P * D)
        acc = {}
        for side, f in ((self, fx), (other, fy)):
            a = side.offset
            for n, c in side._coeffs.items():
                s = (a + n) * f
                if s <= smax:
                    acc[s] = acc.get(s, _RAT_ZERO) + c
        return QSeries(D, 0, acc, P)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.grid_denominator, self.offset,
                       {n: -c for n, c in self._coeffs.items()},
                       self.precision)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QSeries)
                       else -rational(other))

    def __rsub__(self, other):
        return (-self) + other

    def _scale(self, scalar):
        c = rational(scalar)
        if not c:
            return QSeries.zero(self.precision)
        return QSeries(self.grid_denominator, self.offset,
                       {n: c * v for n, v in self._coeffs.items()},
                       self.precision)

    def __mul__(self, other):
        if isinstance(other, numbers.Rational):
            return self._scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        P = min(self.precision + other._low_exponent(),
                other.precision + self._low_exponent())
        if not self._coeffs or not other._coeffs:
            return QSeries.zero(P)
        D = lcm(self.grid_denominator, other.grid_denominator)
        fx = D // self.grid_denominator
        fy = D // other.grid_denominator
        smax = largest_int_below(P * D)
        ax = self.offset
        ay = other.offset
        xs = [((ax + n) * fx, c) for n, c in self._coeffs.items()]
        ys = sorted(((ay + n) * fy, c) for n, c in other._coeffs.items())
        if len(xs) < len(ys):
            xs, ys = sorted(xs), ys
        else:
            xs, ys = ys, sorted(xs)
        acc = {}
        get = acc.get
        for sx, cx in xs:
            rem = smax - sx
            for sy, cy in ys:
                if sy > rem:
                    break
                s = sx + sy
                prev = get(s)
                acc[s] = cx * cy if prev is None else prev + cx * cy
        return QSeries(D, 0, acc, P)

    def __rmul__(self, other):
        if isinstance(other, numbers.Rational):
            return self._scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Rational):
            return self._scale(1 / rational(other))
        if isinstance(other, QSeries):
            return self * other.invert()
        return NotImplemented

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("negative power: invert() first")
        if n == 0:
            return QSeries.one(self.precision)
        result = None
        base = self
        while True:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if not n:
                return result
            base = base * base

    def invert(self):
        """Multiplicative inverse, exact up to the propagated precision.

        The lowest exponent of the result is the negation of the lowest
        exponent of the input; the result precision is ``P - 2*lowexp``.
        """
        if not self._coeffs:
            raise NotInvertibleError("not invertible: series is zero up to "
                                     f"precision {self.precision}")
        D = self.grid_denominator
        a = self.offset
        e = Rational(a, D)
        rel = self.precision - e
        c0 = self._coeffs[0]
        if len(self._coeffs) == 1:
            return QSeries.monomial(1 / c0, -e, rel - e)
        g = 0
        for n in self._coeffs:
            if n:
                g = gcd(g, n)
        # back-substitution on the reduced stride g/D
        count = largest_int_below(rel * Rational(D, g)) + 1
        inner = sorted((n // g, c) for n, c in self._coeffs.items()
                       if n and n // g < count)
        w = [_RAT_ZERO] * count
        w[0] = 1 / c0
        for m in range(1, count):
            total = None
            for j, cj in inner:
                if j > m:
                    break
                wk = w[m - j]
                if wk:
                    total = cj * wk if total is None else total + cj * wk
            if total is not None:
                w[m] = -total / c0
        coeffs = {m * g: w[m] for m in range(count) if w[m]}
        return QSeries(D, -a, coeffs, rel - e)

    def theta_derive(self):
        """Apply q d/dq: each term c*q**e maps to (c*e)*q**e."""
        D = self.grid_denominator
        a = self.offset
        new = {}
        for n, c in self._coeffs.items():
            m = a + n
            if m:
                new[n] = c * Rational(m, D)
        return QSeries(D, a, new, self.precision)

    def shift(self, exponent):
        """Multiply by the exact monomial q**exponent."""
        e = rational(exponent)
        D = lcm(self.grid_denominator, int(e.denominator))
        f = D // self.grid_denominator
        a = self.offset * f + int(e.numerator) * (D // int(e.denominator))
        return QSeries(D, a, {n * f: c for n, c in self._coeffs.items()},
                       self.precision + e)

    def truncate(self, precision):
        """Forget everything at or beyond the new (lower) precision bound."""
        P = rational(precision)
        if P >= self.precision:
            return self
        D = self.grid_denominator
        a = self.offset
        kept = {n: c for n, c in self._coeffs.items() if Rational(a + n, D) < P}
        return QSeries(D, a, kept, P)

    # ------------------------------------------------------------------
    # serialization and display
    # ------------------------------------------------------------------

    def to_text(self):
        """Interchange text format: header line then exponent/coefficient lines."""
        lines = [f"D={self.grid_denominator} P={self.precision}"]
        lines.extend(f"{e} {c}" for e, c in self.terms())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        """Parse the :meth:`to_text` format."""
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty series text")
        m = _HEADER_RE.match(lines[0].strip())
        if not m:
            raise ValueError(f"bad series header: {lines[0]!r}")
        D = int(m.group(1))
        P = rational(m.group(2))
        terms = []
        for ln in lines[1:]:
            se, sc = ln.split()
            e = rational(se)
            if D % int(e.denominator):
                raise ValueError(f"exponent {se} is off the declared grid 1/{D}")
            terms.append((e, rational(sc)))
        return cls.from_terms(terms, P)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self.grid_denominator == other.grid_denominator
                and self.offset == other.offset
                and self.precision == other.precision
                and self._coeffs == other._coeffs)

    def __hash__(self):
        return hash((self.grid_denominator, self.offset, self.precision,
                     tuple(sorted(self._coeffs.items()))))

    def _pretty(self, max_terms=8):
        parts = []
        for e, c in self.terms()[:max_terms]:
            if e == 0:
                term = f"{c}"
            else:
                mag = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                term = f"{mag}q^({e})"
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append(f"- {term[1:]}")
            else:
                parts.append(f"+ {term}")
        if len(self._coeffs) > max_terms:
            parts.append("+ ...")
        if not parts:
            parts.append("0")
        parts.append(f"+ O(q^({self.precision}))")
        return " ".join(parts)

    def __str__(self):
        return self._pretty()

    def __repr__(self):
        return f"QSeries({self._pretty(max_terms=4)})"
