"""Minimal-model bookkeeping and the three character formulas.

A model is a coprime pair ``(s, t)`` with both entries at least 2; it carries
the exact central charge ``1 - 6(s-t)^2/(st)`` and ``k = (s-1)(t-1)/2``
distinct conformal weights ``h = ((ns-mt)^2 - (s-t)^2)/(4st)``.  Characters
are produced in three independent ways (double sum over the numerator
lattice, single sum with a residue-class indicator, and an infinite product
available for s = 2); the forms agree exactly and cross-checking them is the
main internal oracle of the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .eta import eta_series, euler_inverse
from .rationals import Rational, rat_ceil, rational
from .series import QSeries


@dataclass(frozen=True)
class MinimalModel:
    """A coprime pair (s, t), canonically ordered s < t."""
    s: int
    t: int
    k: int
    central_charge: object  # exact rational

    def __str__(self):
        return f"(s,t)=({self.s},{self.t}), c={self.central_charge}, k={self.k}"


@dataclass(frozen=True)
class WeightLabel:
    """Label (m, n) with its conformal weight h and h_bar = h - c/24."""
    m: int
    n: int
    h: object
    h_bar: object


def make_model(s, t):
    """Validate and canonicalise a model; raises for non-coprime input."""
    s, t = int(s), int(t)
    if s > t:
        s, t = t, s
    if s < 2 or s == t or gcd(s, t) != 1:
        raise ValueError(f"not a minimal model: s={s}, t={t} "
                         "(need coprime integers with 2 <= s < t)")
    c = 1 - Rational(6 * (s - t) ** 2, s * t)
    return MinimalModel(s, t, (s - 1) * (t - 1) // 2, c)


def weight_label(model, m, n):
    """Build the label (m, n) with its exact weights."""
    m, n = int(m), int(n)
    s, t = model.s, model.t
    if not (1 <= m < s and 1 <= n < t):
        raise ValueError(f"label out of range: (m,n)=({m},{n}) for {model}")
    h = Rational((n * s - m * t) ** 2 - (s - t) ** 2, 4 * s * t)
    return WeightLabel(m, n, h, h - model.central_charge / 24)


@lru_cache(maxsize=None)
def distinct_weights(model):
    """The k pairwise-distinct weights, in row-major (m, n) enumeration order.

    The first k entries of the (m, n) sequence are required to carry distinct
    h values; a duplicate would violate the enumeration assumption and is
    reported loudly instead of being skipped.
    """
    labels = []
    seen = set()
    for m in range(1, model.s):
        for n in range(1, model.t):
            lab = weight_label(model, m, n)
            if lab.h in seen:
                raise RuntimeError(
                    f"duplicate conformal weight h={lab.h} at (m,n)=({m},{n}) "
                    f"within the first k labels of {model}")
            seen.add(lab.h)
            labels.append(lab)
            if len(labels) == model.k:
                return tuple(labels)
    raise RuntimeError(f"could not collect k={model.k} labels for {model}")


def chi_support(model, label):
    """Residue classes mod 2st carrying indicator +1 and -1.

    Raises when the two sign classes collide, which signals a label outside
    the valid range rather than a summable configuration.
    """
    s, t = model.s, model.t
    modulus = 2 * s * t
    a = label.n * s - label.m * t
    b = label.n * s + label.m * t
    plus = frozenset((a % modulus, -a % modulus))
    minus = frozenset((b % modulus, -b % modulus))
    if plus & minus:
        raise ValueError(f"degenerate chi: residue classes overlap for "
                         f"(m,n)=({label.m},{label.n}) of {model}")
    return plus, minus


def chi_indicator(model, label, r):
    """The +-1/0 residue-class indicator at a non-negative integer r."""
    plus, minus = chi_support(model, label)
    rem = int(r) % (2 * model.s * model.t)
    if rem in plus:
        return 1
    if rem in minus:
        return -1
    return 0


def _check_label(model, label):
    s, t = model.s, model.t
    if not (1 <= label.m < s and 1 <= label.n < t):
        raise ValueError(f"label (m,n)=({label.m},{label.n}) does not belong "
                         f"to {model}")
    expected = Rational((label.n * s - label.m * t) ** 2 - (s - t) ** 2,
                        4 * s * t)
    if label.h != expected:
        raise ValueError(f"label weight {label.h} does not belong to {model}")


def _double_sum_numerator(model, label, rel_order):
    """Integer-exponent numerator sum of the double-sum character formula."""
    s, t = model.s, model.t
    st = s * t
    a = label.n * s - label.m * t
    b = label.n * s + label.m * t
    mn = label.m * label.n
    acc = {}

    def put(e, c):
        if e < rel_order:
            acc[e] = acc.get(e, 0) + c

    r = 0
    while True:
        for rr in ((r,) if r == 0 else (r, -r)):
            base = st * rr * rr
            put(base + rr * a, 1)
            put(base + rr * b + mn, -1)
        r += 1
        if r > 1 and not st * r * r - b * r < rel_order:
            break
    return QSeries.from_terms(acc.items(), rel_order)


def character_double_sum(model, label, order):
    """Graded character from the double-sum formula.

    Numerator lattice cut at the exact bound, divided by the Euler product,
    then shifted by ``q^(h - c/24)``; the result is exact below ``order``.
    """
    order = rational(order)
    _check_label(model, label)
    hbar = label.h_bar
    rel = order - hbar
    if not rel > 0:
        raise ValueError(f"order must exceed the leading exponent {hbar}")
    numer = _double_sum_numerator(model, label, rel)
    ch = numer * euler_inverse(rat_ceil(rel))
    return ch.truncate(rel).shift(hbar)


def character_chi_form(model, label, order):
    """Graded character from the single-sum residue-indicator formula."""
    order = rational(order)
    _check_label(model, label)
    hbar = label.h_bar
    if not order > hbar:
        raise ValueError(f"order must exceed the leading exponent {hbar}")
    plus, minus = chi_support(model, label)
    st4 = 4 * model.s * model.t
    modulus = 2 * model.s * model.t
    bound = (order + Rational(1, 24)) * st4
    terms = []
    r = 1
    while r * r < bound:
        rem = r % modulus
        if rem in plus:
            terms.append((Rational(r * r, st4), 1))
        elif rem in minus:
            terms.append((Rational(r * r, st4), -1))
        r += 1
    numer = QSeries.from_terms(terms, order + Rational(1, 24))
    eta_inv = eta_series(Rational(rat_ceil(order)) + Rational(1, 12)).invert()
    return (numer * eta_inv).truncate(order)


def character_product_2k1(k, i, order):
    """Infinite-product character for the s = 2 family.

    Retains the factors ``1/(1 - q^n)`` for n not congruent to 0, i, -i
    modulo 2k+1; equal to both other character forms.
    """
    k, i = int(k), int(i)
    if k < 1 or not 1 <= i <= k:
        raise ValueError(f"need k >= 1 and 1 <= i <= k, got k={k}, i={i}")
    model = make_model(2, 2 * k + 1)
    label = weight_label(model, 1, i)
    order = rational(order)
    hbar = label.h_bar
    rel = order - hbar
    if not rel > 0:
        raise ValueError(f"order must exceed the leading exponent {hbar}")
    modulus = 2 * k + 1
    excluded = {0, i % modulus, (-i) % modulus}
    acc = QSeries.one(rel)
    n = 1
    while n < rel:
        if n % modulus not in excluded:
            geometric = QSeries.from_terms(
                ((j, 1) for j in range(0, rat_ceil(rel), n)
                 if Rational(j) < rel), rel)
            acc = acc * geometric
        n += 1
    return acc.shift(hbar)


def normalized_character(model, label, order):
    """Eta times the character: the bare numerator sum, integer coefficients."""
    order = rational(order)
    hbar = label.h_bar
    ch = character_double_sum(model, label, order - Rational(1, 24))
    eta = eta_series(order - hbar)
    return eta * ch


def strange_sum_2k1(k):
    """Sum of h_bar over the k distinct weights of the (2, 2k+1) model."""
    k = int(k)
    if k < 1:
        raise ValueError("k must be >= 1")
    model = make_model(2, 2 * k + 1)
    return sum((lab.h_bar for lab in distinct_weights(model)), Rational(0))


def strange_sum_general(s, t):
    """Half the h_bar sum over the full (m, n) grid of the (s, t) model.

    Each weight value occurs exactly twice in the grid, so this equals the
    sum over distinct weights.
    """
    model = make_model(s, t)
    total = Rational(0)
    for m in range(1, model.s):
        for n in range(1, model.t):
            total += weight_label(model, m, n).h_bar
    return total / 2


def mu_count(k):
    """Number (and list) of coprime pairs 2 <= s < t with (s-1)(t-1) = 2k."""
    k = int(k)
    if k < 1:
        raise ValueError("k must be >= 1")
    target = 2 * k
    found = []
    for d in range(1, isqrt(target) + 1):
        if target % d:
            continue
        s, t = d + 1, target // d + 1
        if 2 <= s < t and gcd(s, t) == 1:
            found.append((s, t))
    found.sort()
    return len(found), found


def coprime_models(max_st):
    """All models with s*t <= max_st, ordered by (s*t, s) for determinism."""
    models = []
    for t in range(3, int(max_st) // 2 + 1):
        for s in range(2, t):
            if s * t <= max_st and gcd(s, t) == 1:
                models.append(make_model(s, t))
    models.sort(key=lambda mdl: (mdl.s * mdl.t, mdl.s))
    return models
