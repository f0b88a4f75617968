"""Turning a series ratio back into a continued fraction by repeated Euler division.

Starting from ``f`` with constant term 1, write ``f = 1 + (f - 1)``, pull out the
leading monomial ``c q^alpha`` of ``f - 1`` and continue with
``f' = c q^alpha / (f - 1)``.  The result is a C-fraction
``1 + c_1 q^{a_1}/(1 + c_2 q^{a_2}/(1 + ...))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .cfrac import CFrac
from .errors import ConstantTermNotOne, OrderExhausted, TermBudgetExceeded
from .qseries import QSeries


def division_step(N: QSeries, D: QSeries) -> tuple[QSeries, QSeries]:
    """``N/D = 1 + (N - D)/D``; returns ``(N - D, D)``."""
    if N[0] != 1 or D[0] != 1:
        raise ConstantTermNotOne("both series must have constant term 1")
    return N - D, D


@dataclass(frozen=True)
class CExpansion:
    terms: tuple[tuple[Fraction, int], ...]  # (c_k, alpha_k)
    terminated: bool
    order_left: int

    def to_cfrac(self, order: int) -> CFrac:
        terms = self.terms

        def term(k):
            c, alpha = terms[k - 1]
            return QSeries.monomial(alpha, order, c), 1

        return CFrac(1, term, len(terms))

    def __str__(self) -> str:
        return ", ".join(_mono(c, a) for c, a in self.terms) or "(none)"


def _mono(c: Fraction, alpha: int) -> str:
    q = "q" if alpha == 1 else f"q^{alpha}"
    if c == 1:
        return q
    if c == -1:
        return "-" + q
    return f"{c}*{q}"


def c_fraction_expand(f: QSeries, max_terms: int) -> CExpansion:
    """Greedy C-fraction of ``f``.

    Every extracted term of valuation alpha costs alpha orders of precision;
    expansion stops before it would report a term the input cannot support.
    Raises TermBudgetExceeded / OrderExhausted carrying the partial expansion.
    """
    if f[0] != 1:
        raise ConstantTermNotOne("C-fraction expansion needs constant term 1")
    terms: list[tuple[Fraction, int]] = []
    cur = f
    while True:
        rest = cur - 1
        if rest.is_zero():
            return CExpansion(tuple(terms), True, cur.order)
        if len(terms) >= max_terms:
            raise TermBudgetExceeded(
                f"more than {max_terms} terms needed",
                CExpansion(tuple(terms), False, cur.order),
            )
        alpha, c = rest.leading_term()
        left = cur.order - alpha
        terms.append((c, alpha))
        if left <= 0:
            raise OrderExhausted(
                f"no precision left after q^{alpha}",
                CExpansion(tuple(terms), False, max(left, 0)),
            )
        # f' = c q^alpha / rest, i.e. 1 / (rest / (c q^alpha))
        unit = QSeries(rest.coeffs[alpha:], left) / c
        cur = unit.inverse()


@dataclass(frozen=True)
class RecursionCheck:
    ok: bool
    failed_at: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_ratio_recursion(
    family: Callable[[int], QSeries],
    numerator_rule: Callable[[int], object],
    upto: int,
    beta_rule: Callable[[int], object] | None = None,
) -> RecursionCheck:
    """Check ``S_s = beta_s S_{s+1} + a_{s+1} S_{s+2}`` for s = 0 .. upto-1.

    ``numerator_rule(s)`` gives a_{s+1}; ``beta_rule(s)`` defaults to 1.
    With beta = 1 this is exactly ``S_s/S_{s+1} = 1 + a_{s+1}/(S_{s+1}/S_{s+2})``.
    """
    cache: dict[int, QSeries] = {}

    def S(s):
        if s not in cache:
            cache[s] = family(s)
        return cache[s]

    for s in range(upto):
        beta = 1 if beta_rule is None else beta_rule(s)
        lhs = S(s)
        rhs = beta * S(s + 1) + numerator_rule(s) * S(s + 2)
        diff = lhs - rhs
        if not (diff.is_zero() if isinstance(diff, QSeries) else diff == 0):
            return RecursionCheck(False, s)
    return RecursionCheck(True)
