"""Lattice-sum identity builders and the verification drivers.

Two families of weighted lattice sums are built here: the k-fold signed sum
with the pairwise square-difference weight (for the s = 2 family) and the
general sum over residue-class supports weighted by a Vandermonde of squares
(one identity per minimal model).  Verification never trusts a printed
normalisation: the constant is fixed empirically from the leading nonzero
coefficients, then every remaining coefficient below the requested order
must match exactly against that single constant.

All lattice windows are derived by exact integer search: a candidate value
is enumerated when the minimal possible exponent of any tuple containing it
still lies below the requested order, so no contributing tuple is missed.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple, Optional

from .eta import eta_power, eta_series, jacobi_cube_series, \
    pentagonal_sum_series, weber_series
from .minimal_models import chi_support, distinct_weights, make_model, \
    character_double_sum, normalized_character
from .rationals import Rational, rat_str, rational
from .series import PrecisionError, QSeries
from .wronskian import vandermonde, wronskian

IDENTITY_NAMES = ("euler", "jacobi", "macdonald", "denominator",
                  "wronskian_raw", "wronskian_normalized", "weber")

WEBER_RATIO = Rational(7, 256)


class LatticeTerm(NamedTuple):
    """One summand of a k-fold lattice sum."""
    n_vec: tuple
    exponent: object  # exact rational
    weight: object    # exact rational (sign times the combinatorial weight)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check at a given truncation order."""
    identity: str
    params: dict
    order: object
    constant: Optional[object]
    match: bool
    first_mismatch: Optional[object]
    terms_compared: int

    def to_line(self):
        pairs = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return (f"identity={self.identity} params={pairs or '-'} "
                f"order={rat_str(self.order)} "
                f"constant={rat_str(self.constant) if self.constant is not None else '-'} "
                f"match={'true' if self.match else 'false'} "
                f"first_mismatch={rat_str(self.first_mismatch) if self.first_mismatch is not None else '-'} "
                f"terms_compared={self.terms_compared}")

    def to_dict(self):
        return {
            "identity": self.identity,
            "params": {k: int(v) for k, v in sorted(self.params.items())},
            "order": rat_str(self.order),
            "constant": rat_str(self.constant) if self.constant is not None else None,
            "match": self.match,
            "first_mismatch": (rat_str(self.first_mismatch)
                               if self.first_mismatch is not None else None),
            "terms_compared": self.terms_compared,
        }


# ----------------------------------------------------------------------
# the s = 2 family: signed sum with square-difference weights
# ----------------------------------------------------------------------

def chi_d(k, n_vec):
    """Pairwise weight ``prod_{i<j} (d_i^2 - d_j^2)`` with
    ``d_i = 2i - 1 + n_i (4k + 2)``."""
    k = int(k)
    if len(n_vec) != k:
        raise ValueError(f"expected a {k}-tuple, got {len(n_vec)} entries")
    d_sq = [(2 * (i + 1) - 1 + n * (4 * k + 2)) ** 2
            for i, n in enumerate(n_vec)]
    result = 1
    for i in range(k):
        for j in range(i + 1, k):
            result *= d_sq[i] - d_sq[j]
            if not result:
                return 0
    return result


def lattice_exponent(k, n_vec):
    """Exponent ``(2k^2-k)/24 + sum_i ((2k+1)n_i^2 + (2i-1)n_i)/2``."""
    k = int(k)
    if len(n_vec) != k:
        raise ValueError(f"expected a {k}-tuple, got {len(n_vec)} entries")
    rel = 0
    for i, n in enumerate(n_vec, start=1):
        rel += (2 * k + 1) * n * n + (2 * i - 1) * n
    return Rational(2 * k * k - k, 24) + Rational(rel, 2)


def c_k_constant(k):
    """The closed-form normalisation ``1/(2^{k(k-1)} prod_{i<j}(i-j)(i+j-1))``."""
    k = int(k)
    if k < 2:
        raise ValueError("k must be >= 2")
    denom = 2 ** (k * (k - 1))
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            denom *= (i - j) * (i + j - 1)
    return Rational(1, denom)


def _coordinate_window(coeff_sq, coeff_lin, budget, pad):
    """All integers n with ``(coeff_sq*n^2 + coeff_lin*n)/2 < budget``,
    optionally padded, as (contribution, n) sorted by contribution."""
    values = []
    for direction in (1, -1):
        n = 0 if direction == 1 else -1
        extra = pad
        while True:
            f = Rational(coeff_sq * n * n + coeff_lin * n, 2)
            if f < budget:
                values.append((f, n))
            elif extra > 0:
                values.append((f, n))
                extra -= 1
            else:
                break
            n += direction
    values.sort()
    return values


def macdonald_terms(k, order, window_pad=0):
    """Every lattice term with exponent below ``order``, without the
    closed-form prefactor; deterministic lexicographic enumeration."""
    k = int(k)
    if k < 2:
        raise ValueError("k must be >= 2")
    order = rational(order)
    base = Rational(2 * k * k - k, 24)
    budget = order - base
    if not budget > 0:
        return []
    windows = [_coordinate_window(2 * k + 1, 2 * i - 1, budget, window_pad)
               for i in range(1, k + 1)]
    terms = []
    n_vec = [0] * k

    def descend(i, partial, parity):
        if i == k:
            weight = chi_d(k, n_vec)
            if weight:
                terms.append(LatticeTerm(
                    tuple(n_vec), base + partial,
                    Rational(-weight if parity else weight)))
            return
        for f, n in windows[i]:
            if not partial + f < budget:
                break
            n_vec[i] = n
            descend(i + 1, partial + f, parity ^ (n & 1))

    descend(0, Rational(0), 0)
    return terms


def macdonald_rhs(k, order, *, window_pad=0):
    """The full signed lattice sum for the s = 2 family, including the
    closed-form prefactor ``c_k_constant(k) * (-1)^(k(k-1)/2)``."""
    k = int(k)
    order = rational(order)
    base = Rational(2 * k * k - k, 24)
    if not order > base:
        raise ValueError(f"insufficient order: must exceed {base}")
    prefactor = c_k_constant(k)
    if (k * (k - 1) // 2) % 2:
        prefactor = -prefactor
    acc = {}
    for term in macdonald_terms(k, order, window_pad):
        acc[term.exponent] = acc.get(term.exponent, Rational(0)) + term.weight
    return QSeries.from_terms(
        ((e, prefactor * c) for e, c in acc.items()), order)


# ----------------------------------------------------------------------
# the general family: residue-class supports with Vandermonde weights
# ----------------------------------------------------------------------

def _chi_support_values(model, label, sq_bound, pad):
    """Non-negative integers in the indicator support with ``v^2 < sq_bound``
    (plus ``pad`` extra values), as (v, sign) sorted ascending."""
    plus, minus = chi_support(model, label)
    modulus = 2 * model.s * model.t
    values = []
    v = 0
    extra = pad
    while True:
        in_range = Rational(v * v) < sq_bound
        if not in_range and extra <= 0:
            break
        rem = v % modulus
        sign = 1 if rem in plus else (-1 if rem in minus else 0)
        if sign:
            values.append((v, sign))
            if not in_range:
                extra -= 1
        v += 1
    return values


def general_terms(model, order, window_pad=0):
    """Lattice terms of the per-model sum: tuples from the indicator
    supports, weighted by the sign product times the Vandermonde of the
    squares, with exponent ``sum n_i^2 / (4st)`` below ``order``."""
    order = rational(order)
    if not order > 0:
        raise ValueError("order must be positive")
    k = model.k
    st4 = 4 * model.s * model.t
    sq_budget = order * st4
    supports = [_chi_support_values(model, lab, sq_budget, window_pad)
                for lab in distinct_weights(model)]
    if any(not sup for sup in supports):
        return []
    suffix_min = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix_min[i] = suffix_min[i + 1] + supports[i][0][0] ** 2
    terms = []
    n_vec = [0] * k
    squares = [0] * k

    def descend(i, partial_sq, sign):
        if i == k:
            weight = vandermonde(squares)
            if weight:
                terms.append(LatticeTerm(
                    tuple(n_vec), Rational(partial_sq, st4),
                    Rational(sign * weight)))
            return
        for v, s in supports[i]:
            nxt = partial_sq + v * v
            if not Rational(nxt + suffix_min[i + 1]) < sq_budget:
                break
            n_vec[i] = v
            squares[i] = v * v
            descend(i + 1, nxt, sign * s)

    descend(0, 0, 1)
    return terms


def general_rhs(model, order, *, window_pad=0):
    """The per-model lattice sum as a series, exact below ``order``."""
    order = rational(order)
    acc = {}
    for term in general_terms(model, order, window_pad):
        acc[term.exponent] = acc.get(term.exponent, Rational(0)) + term.weight
    return QSeries.from_terms(acc.items(), order)


# ----------------------------------------------------------------------
# verification drivers
# ----------------------------------------------------------------------

def empirical_constant(lhs, rhs, order, *, identity="ratio", params=None):
    """Fix ``constant = leading(rhs)/leading(lhs)`` and check
    ``rhs = constant * lhs`` coefficientwise below ``order``."""
    order = rational(order)
    if order > lhs.precision or order > rhs.precision:
        raise PrecisionError(f"insufficient precision for comparison at "
                             f"order {order}")
    params = dict(params or {})
    left = [(e, c) for e, c in lhs.terms() if e < order]
    right = [(e, c) for e, c in rhs.terms() if e < order]
    if not left or not right:
        raise ValueError(f"no comparable terms below order {order}; "
                         "raise the order above the leading exponent")
    exponents = sorted({e for e, _ in left} | {e for e, _ in right})
    if left[0][0] != right[0][0]:
        return VerificationReport(identity, params, order, None, False,
                                  min(left[0][0], right[0][0]),
                                  len(exponents))
    constant = right[0][1] / left[0][1]
    lmap = dict(left)
    rmap = dict(right)
    first_mismatch = None
    for e in exponents:
        if constant * lmap.get(e, Rational(0)) != rmap.get(e, Rational(0)):
            first_mismatch = e
            break
    return VerificationReport(identity, params, order, constant,
                              first_mismatch is None, first_mismatch,
                              len(exponents))


def characters_for_wronskian(model, order, *, normalized=False):
    """Characters of the model at enough precision that their Wronskian is
    exact below ``order`` (retrying once if the pessimistic propagation
    falls short)."""
    build = normalized_character if normalized else character_double_sum
    labels = distinct_weights(model)
    precision = rational(order) + 1
    for _ in range(4):
        entries = [build(model, lab, precision) for lab in labels]
        w = wronskian(entries)
        if w.precision >= order:
            return entries
        precision += rational(order) - w.precision
    raise RuntimeError(f"could not reach Wronskian precision {order} "
                       f"for {model}")


def wronskian_of_characters(model, order, *, normalized=False):
    """Wronskian of the model's characters, exact below ``order``."""
    return wronskian(characters_for_wronskian(model, order,
                                              normalized=normalized))


def _weber_wronskian(order):
    precision = rational(order) + 1
    for _ in range(4):
        entries = [weber_series(w, precision) for w in ("f", "f1", "f2")]
        w = wronskian(entries)
        if w.precision >= order:
            return w
        precision += rational(order) - w.precision
    raise RuntimeError("could not reach the requested Weber Wronskian "
                       "precision")


def identity_lowest_exponent(name, *, k=None, s=None, t=None):
    """Leading exponent of the identity named by ``name``; any verification
    order must exceed this value."""
    if name not in IDENTITY_NAMES:
        raise ValueError(f"unknown identity {name!r}; known: "
                         f"{', '.join(IDENTITY_NAMES)}")
    if name == "euler":
        return Rational(1, 24)
    if name == "jacobi":
        return Rational(1, 8)
    if name == "weber":
        return Rational(1, 2)
    if name == "macdonald":
        if k is None:
            raise ValueError("macdonald requires k")
        k = int(k)
        return Rational(2 * k * k - k, 24)
    if s is None or t is None:
        raise ValueError(f"{name} requires s and t")
    model = make_model(s, t)
    if name == "denominator":
        return Rational(2 * model.k * model.k - model.k, 24)
    if name == "wronskian_raw":
        return Rational(2 * model.k * (model.k - 1), 24)
    return Rational((2 * model.k - 1) * model.k, 24)


def verify_identity(name, *, k=None, s=None, t=None, order=20, window_pad=0):
    """Build both sides of a named identity and compare them empirically.

    Names: euler, jacobi, macdonald (requires k >= 2), denominator,
    wronskian_raw, wronskian_normalized (these need s, t), weber.  The
    report carries the found constant; for weber the match additionally
    requires the constant to equal exactly 7/256.
    """
    order = rational(order)
    if name == "macdonald" and int(k) == 1:
        raise ValueError("macdonald with k = 1 is the pentagonal identity; "
                         "use verify_identity('euler')")
    base = identity_lowest_exponent(name, k=k, s=s, t=t)
    if not order > base:
        raise ValueError(f"insufficient order {order} for {name}: the "
                         f"minimal admissible order must exceed {base}")
    params = {}
    if name == "euler":
        lhs = eta_series(order)
        rhs = pentagonal_sum_series(order)
    elif name == "jacobi":
        lhs = eta_power(3, order)
        rhs = jacobi_cube_series(order)
    elif name == "weber":
        lhs = eta_power(12, order)
        rhs = _weber_wronskian(order)
    elif name == "macdonald":
        k = int(k)
        params = {"k": k}
        lhs = eta_power(2 * k * k - k, order)
        rhs = macdonald_rhs(k, order, window_pad=window_pad)
    else:
        model = make_model(s, t)
        params = {"s": model.s, "t": model.t}
        kk = model.k
        if name == "denominator":
            lhs = eta_power(2 * kk * kk - kk, order)
            rhs = general_rhs(model, order, window_pad=window_pad)
        elif name == "wronskian_raw":
            lhs = eta_power(2 * kk * (kk - 1), order)
            rhs = wronskian_of_characters(model, order, normalized=False)
        else:
            lhs = eta_power((2 * kk - 1) * kk, order)
            rhs = wronskian_of_characters(model, order, normalized=True)
    report = empirical_constant(lhs, rhs, order, identity=name, params=params)
    if name == "weber" and report.match and report.constant != WEBER_RATIO:
        report = replace(report, match=False)
    return report
