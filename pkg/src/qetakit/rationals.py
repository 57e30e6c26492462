"""Exact rational scalars used everywhere in the package.

gmpy2's ``mpq`` is used when available (markedly faster on big numerators);
``fractions.Fraction`` is the stdlib fallback.  Both normalise to lowest terms
with a positive denominator and print as ``p/q`` (``p`` alone when q = 1),
which is the output convention of the whole package.  No floating point is
ever accepted: a single rounding would invalidate exact verification.
"""

from __future__ import annotations

import numbers
from fractions import Fraction

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    Rational = Fraction

#: Types accepted wherever an exact scalar is expected.
RationalLike = "int | str | Fraction | Rational"

_RAT_ZERO = Rational(0)
_RAT_ONE = Rational(1)


def rational(value, denominator=None):
    """Coerce ``value`` (int, 'p/q' string, Fraction, Rational) to Rational.

    Floats are rejected on purpose; use a string or Fraction instead.
    """
    if denominator is not None:
        return Rational(value, denominator)
    if isinstance(value, float):
        raise TypeError("floating point is not allowed in exact series; "
                        "pass an int, Fraction or 'p/q' string")
    if isinstance(value, (numbers.Rational, str)):
        return Rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_floor(x) -> int:
    """Largest integer <= x."""
    return int(x.numerator // x.denominator)


def rat_ceil(x) -> int:
    """Smallest integer >= x."""
    return -int((-x.numerator) // x.denominator)


def largest_int_below(x) -> int:
    """Largest integer strictly less than x."""
    n = rat_floor(x)
    return n - 1 if x == n else n


def rat_str(x) -> str:
    """Render in the p/q lowest-terms convention (p alone when q = 1)."""
    return str(rational(x))
