"""Rogers-Ramanujan continued fraction at q = e^{-2pi} and q = -e^{-pi}."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import mpmath

from .cfrac import CFrac, eval_numeric
from .domains import NumericQ


class Variant(enum.Enum):
    PLUS = "plus"    # q = e^{-2 pi}
    MINUS = "minus"  # q = -e^{-pi}, signs alternate


@dataclass(frozen=True)
class HighPrecisionReal:
    value: mpmath.mpf
    prec: int

    def __float__(self) -> float:
        return float(self.value)

    def agreeing_bits(self, other: "HighPrecisionReal") -> float:
        with mpmath.workprec(max(self.prec, other.prec)):
            d = abs(self.value - other.value)
            if d == 0:
                return float(min(self.prec, other.prec))
            return float(-mpmath.log(d / abs(self.value), 2))


def _check(precision: int) -> None:
    if precision < 64:
        raise ValueError("precision must be at least 64 bits")


def special_q(variant: Variant):
    """The nome for ``variant`` at the current working precision."""
    if variant is Variant.PLUS:
        return mpmath.exp(-2 * mpmath.pi)
    return -mpmath.exp(-mpmath.pi)


def rr_closed_form(variant: Variant, precision: int = 256) -> HighPrecisionReal:
    _check(precision)
    with mpmath.workprec(precision + 16):
        s5 = mpmath.sqrt(5)
        if variant is Variant.PLUS:
            v = (mpmath.sqrt((5 + s5) / 2) - (s5 + 1) / 2) * mpmath.exp(2 * mpmath.pi / 5)
        else:
            v = (mpmath.sqrt((5 - s5) / 2) - (s5 - 1) / 2) * mpmath.exp(mpmath.pi / 5)
    with mpmath.workprec(precision):
        return HighPrecisionReal(+v, precision)


def rr_cfrac(q) -> CFrac:
    """``1/(1 + q/(1 + q^2/(1 + ...)))`` at a scalar q."""
    return CFrac(0, lambda k: (1 if k == 1 else q ** (k - 1), 1))


def rr_cf_numeric(variant: Variant, precision: int = 256, tol=None, depth_budget: int = 4096) -> HighPrecisionReal:
    """Fold the fraction backwards at the special nome; alternating signs come from q < 0."""
    _check(precision)
    with mpmath.workprec(precision):
        if tol is None:
            tol = mpmath.mpf(2) ** (-precision + 4)
        q = special_q(variant)
        res = eval_numeric(rr_cfrac(q), depth_budget=depth_budget, tol=tol, start_depth=4)
        return HighPrecisionReal(res.value, precision)


def rr_product_numeric(q, precision: int = 256):
    """``(q, q^4; q^5)_inf / (q^2, q^3; q^5)_inf`` by direct multiplication."""
    with mpmath.workprec(precision):
        dom = NumericQ(q)
        return (dom.poch(1, 1, 5) * dom.poch(1, 4, 5)) / (dom.poch(1, 2, 5) * dom.poch(1, 3, 5))
