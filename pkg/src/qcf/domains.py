"""Places where q can live: a formal variable, an exact rational, or an mpmath real.

Corpus builders are written once against this small interface and are then
evaluated formally (truncated series), exactly (rational q, finite sums only)
or numerically (high-precision q, infinite sums and products summed until the
terms drop below the working epsilon).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping

import mpmath

from .errors import DomainViolation, NoNumericConvergence
from .qseries import INFINITY, QSeries, binomial_series, qbinomial_coeff, qpochhammer, rational


class FormalQ:
    """q is the formal variable; elements are QSeries truncated at ``order``."""

    kind = "formal"

    def __init__(self, order: int):
        self.order = order

    def scalar(self, x):
        return rational(x)

    def params(self, point: Mapping) -> dict:
        return {k: self.scalar(v) for k, v in point.items() if k != "q"}

    def const(self, c) -> QSeries:
        return QSeries.constant(c, self.order)

    def q(self, e: int = 1, coeff=1) -> QSeries:
        if e < 0:
            raise DomainViolation("negative powers of q are not available in formal mode")
        return QSeries.monomial(e, self.order, coeff)

    def poch(self, c, shift: int = 0, base: int = 1, n=INFINITY) -> QSeries:
        """``(c q^shift; q^base)_n``"""
        return qpochhammer(c, base, n, self.order, offset=shift)

    def qbinom(self, n: int, k: int) -> QSeries:
        return qbinomial_coeff(n, k, self.order)

    def binomial_series(self, a, b, *, a_shift=0, b_shift=0, base=1, parity=None) -> QSeries:
        return binomial_series(a, b, self.order, a_shift=a_shift, b_shift=b_shift, base=base, parity=parity)

    def sum(self, term: Callable[[int], object], low: Callable[[int], int], upto: int | None = None):
        """Sum ``term(k)`` for k = 0, 1, ... ; ``low(k)`` bounds the valuation of term k
        from below and must eventually exceed any order."""
        total = self.const(0)
        k = 0
        while (upto is None or k <= upto) and low(k) <= self.order:
            total = total + term(k)
            k += 1
        return total

    def is_zero(self, x) -> bool:
        return QSeries.coerce(x, self.order).is_zero()


class ExactQ:
    """q is a nonzero rational; only finite sums and products make sense."""

    kind = "exact"

    def __init__(self, q):
        self.qv = rational(q)
        if self.qv == 0:
            raise DomainViolation("exact evaluation needs q != 0")

    def scalar(self, x):
        return rational(x)

    def params(self, point: Mapping) -> dict:
        return {k: self.scalar(v) for k, v in point.items() if k != "q"}

    def const(self, c):
        return rational(c)

    def q(self, e: int = 1, coeff=1):
        return rational(coeff) * self.qv ** e

    def poch(self, c, shift: int = 0, base: int = 1, n=INFINITY):
        if n == INFINITY:
            raise DomainViolation("infinite products have no exact rational value")
        p = Fraction(1)
        for i in range(int(n)):
            p *= 1 - c * self.qv ** (shift + base * i)
        return p

    def qbinom(self, n: int, k: int):
        return qbinomial_coeff(n, k).evaluate(self.qv)

    def binomial_series(self, *args, **kwargs):
        raise DomainViolation("infinite sums have no exact rational value")

    def sum(self, term, low, upto: int | None = None):
        if upto is None:
            raise DomainViolation("infinite sums have no exact rational value")
        return sum((term(k) for k in range(upto + 1)), Fraction(0))

    def is_zero(self, x) -> bool:
        return x == 0


def to_mpf(x):
    """Exact rational (or anything mpmath understands) to an mpf at the current precision."""
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


class NumericQ:
    """q is a real number with |q| < 1 held at the current mpmath precision."""

    kind = "numeric"

    def __init__(self, q, max_terms: int = 200_000):
        self.qv = to_mpf(q)
        self.max_terms = max_terms
        if not abs(self.qv) < 1:
            raise DomainViolation("numeric evaluation needs |q| < 1")

    @property
    def eps(self):
        return mpmath.mpf(2) ** (-mpmath.mp.prec)

    def scalar(self, x):
        return to_mpf(x)

    def params(self, point: Mapping) -> dict:
        return {k: self.scalar(v) for k, v in point.items() if k != "q"}

    def const(self, c):
        return to_mpf(c)

    def q(self, e: int = 1, coeff=1):
        return to_mpf(coeff) * self.qv ** e

    def poch(self, c, shift: int = 0, base: int = 1, n=INFINITY):
        c = to_mpf(c)
        p = mpmath.mpf(1)
        i = 0
        eps = self.eps
        while i < n:
            t = c * self.qv ** (shift + base * i)
            if n == INFINITY and abs(t) < eps and shift + base * i > 0:
                break
            p *= 1 - t
            i += 1
            if i > self.max_terms:
                raise NoNumericConvergence("infinite product did not settle", depth=i)
        return p

    def qbinom(self, n: int, k: int):
        return qbinomial_coeff(n, k).evaluate(self.qv)

    def binomial_series(self, a, b, *, a_shift=0, b_shift=0, base=1, parity=None):
        A = to_mpf(a) * self.qv ** a_shift
        b = to_mpf(b)

        def ratio(k):
            return (A - b * self.qv ** (b_shift + base * k)) / (1 - self.qv ** (base * (k + 1)))

        total = mpmath.mpf(0)
        term = mpmath.mpf(1)
        quiet = 0
        for k in range(self.max_terms):
            if parity is None or k % 2 == parity:
                total += term
            term *= ratio(k)
            if abs(term) <= self.eps * max(abs(total), 1):
                quiet += 1
                if quiet >= 3:
                    return total
            else:
                quiet = 0
        raise NoNumericConvergence("q-binomial sum did not settle", depth=self.max_terms)

    def sum(self, term, low, upto: int | None = None):
        total = mpmath.mpf(0)
        quiet = 0
        k = 0
        while upto is None or k <= upto:
            t = term(k)
            total += t
            if upto is None:
                if abs(t) <= self.eps * max(abs(total), 1):
                    quiet += 1
                    if quiet >= 3:
                        break
                else:
                    quiet = 0
                if k > self.max_terms:
                    raise NoNumericConvergence("series did not settle", depth=k)
            k += 1
        return total

    def is_zero(self, x) -> bool:
        return x == 0
