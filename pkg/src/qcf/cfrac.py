"""Generalized continued fractions ``b0 + a1/(b1 + a2/(b2 + ...))``.

Terms may be QSeries, exact rationals or mpmath reals; the recurrences only
use ``+``, ``*`` and (for numeric folding) ``/``.
"""

from __future__ import annotations

from contextlib import nullcontext
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, NamedTuple, Sequence

import mpmath

from .errors import (
    DivisionByZero,
    FiniteCFExhausted,
    NoNumericConvergence,
    NotFormallyConvergent,
    ZeroConstantTerm,
    ZeroDenominatorTerm,
    ZeroScale,
)
from .qseries import QSeries, valuation

TermFn = Callable[[int], "tuple[Any, Any]"]


@dataclass(frozen=True)
class CFrac:
    """``b0 + K(a_k / b_k)``; ``term(k)`` returns ``(a_k, b_k)`` for k >= 1.

    ``length`` is the number of terms, or None for an infinite fraction.
    """

    b0: Any
    term: TermFn
    length: int | None = None

    def terms(self, upto: int) -> list[tuple[Any, Any]]:
        if self.length is not None and upto > self.length:
            raise FiniteCFExhausted(f"continued fraction has only {self.length} terms, asked for {upto}")
        return [self.term(k) for k in range(1, upto + 1)]

    def with_term(self, k: int, a=None, b=None) -> "CFrac":
        """Copy with the k-th partial numerator and/or denominator replaced."""
        old = self.term

        def term(j):
            aj, bj = old(j)
            if j == k:
                return (aj if a is None else a(aj)), (bj if b is None else b(bj))
            return aj, bj

        return CFrac(self.b0, term, self.length)


def from_sequences(b0, a: Sequence, b: Sequence) -> CFrac:
    """Finite continued fraction from explicit term lists (a[0] is a_1)."""
    if len(a) != len(b):
        raise ValueError("need as many partial numerators as denominators")
    a, b = tuple(a), tuple(b)
    return CFrac(b0, lambda k: (a[k - 1], b[k - 1]), len(a))


class ConvergentPair(NamedTuple):
    k: int
    P: Any
    Q: Any


def iter_convergents(cf: CFrac) -> Iterable[tuple[ConvergentPair, Any]]:
    """Yield ``(ConvergentPair, a_k)`` for k = 1, 2, ... (until a finite cf ends)."""
    p2, p1 = 1, 0  # P_{-1}, P_0 with b0 excluded
    q2, q1 = 0, 1
    k = 0
    while cf.length is None or k < cf.length:
        k += 1
        a, b = cf.term(k)
        p = b * p1 + a * p2
        q = b * q1 + a * q2
        yield ConvergentPair(k, p, q), a
        p2, p1, q2, q1 = p1, p, q1, q


def convergents(cf: CFrac, upto: int) -> list[ConvergentPair]:
    """``P_j, Q_j`` for j = 1..upto; the j-th convergent is ``b0 + P_j/Q_j``."""
    if upto < 1:
        raise ValueError("upto must be >= 1")
    if cf.length is not None and cf.length < upto:
        raise FiniteCFExhausted(f"continued fraction has only {cf.length} terms, asked for {upto}")
    out = []
    for pair, _ in iter_convergents(cf):
        out.append(pair)
        if pair.k == upto:
            break
    return out


def convergent_value(cf: CFrac, k: int):
    """Exact value ``b0 + P_k/Q_k`` for scalar terms."""
    pair = convergents(cf, k)[-1]
    if pair.Q == 0:
        raise DivisionByZero(f"convergent denominator Q_{k} vanishes", depth=k)
    return cf.b0 + _div(pair.P, pair.Q)


def exact_value(cf: CFrac):
    """Value of a finite continued fraction with exact scalar terms."""
    if cf.length is None:
        raise ValueError("exact_value needs a finite continued fraction")
    if cf.length == 0:
        return cf.b0
    return convergent_value(cf, cf.length)


def _div(p, q):
    if isinstance(p, int) and isinstance(q, int):
        return Fraction(p, q)
    return p / q


def limit_series(cf: CFrac, order: int, budget: int | None = None) -> QSeries:
    """Formal limit through ``q^order``.

    By the determinant identity consecutive convergents differ by a multiple of
    ``a_1 ... a_k``, so once that product has valuation above ``order`` no later
    term can change the known coefficients.
    """
    if budget is None:
        budget = 4 * order + 64
    v = 0
    last = None
    for pair, a in iter_convergents(cf):
        q0 = pair.Q[0] if isinstance(pair.Q, QSeries) else pair.Q
        if q0 == 0:
            raise ZeroConstantTerm(f"Q_{pair.k} has zero constant term")
        v += valuation(a)
        last = pair
        if v > order:
            break
        if pair.k >= budget:
            raise NotFormallyConvergent(
                f"valuation of a_1...a_k reached only {v} after {pair.k} terms (target > {order})"
            )
    if last is None:
        return QSeries.coerce(cf.b0, order)
    P = QSeries.coerce(last.P, order)
    Q = QSeries.coerce(last.Q, order)
    return P * Q.inverse() + QSeries.coerce(cf.b0, order)


class NumericValue(NamedTuple):
    value: Any
    depth: int
    delta: Any


def eval_at_depth(cf: CFrac, depth: int, _cache: list | None = None):
    """Backward evaluation with zero tail starting at ``depth``."""
    if cf.length is not None:
        depth = min(depth, cf.length)
    terms = _cache if _cache is not None else []
    while len(terms) < depth:
        terms.append(cf.term(len(terms) + 1))
    v = 0
    for k in range(depth, 0, -1):
        a, b = terms[k - 1]
        den = b + v
        if den == 0:
            raise DivisionByZero(f"denominator vanished at depth index {k}", depth=k)
        v = _div(a, den)
    return cf.b0 + v


def eval_numeric(cf: CFrac, depth_budget: int = 1 << 16, tol=None, precision: int | None = None,
                 start_depth: int = 8) -> NumericValue:
    """Fold the fraction from depth D, 2D, 4D, ... until successive values differ by < tol."""
    ctx = mpmath.workprec(precision) if precision else nullcontext()
    with ctx:
        tol = mpmath.mpf(tol) if tol is not None else mpmath.mpf(2) ** (-mpmath.mp.prec + 8)
        cache: list = []
        if cf.length is not None and cf.length <= depth_budget:
            return NumericValue(eval_at_depth(cf, cf.length, cache), cf.length, mpmath.mpf(0))
        depth = start_depth
        prev = eval_at_depth(cf, depth, cache)
        while True:
            nxt_depth = depth * 2
            if nxt_depth > depth_budget:
                raise NoNumericConvergence(
                    f"no convergence to {mpmath.nstr(tol, 3)} within depth {depth_budget}", depth=depth,
                    delta=None,
                )
            cur = eval_at_depth(cf, nxt_depth, cache)
            delta = abs(mpmath.mpmathify(cur - prev))
            depth = nxt_depth
            if delta < tol:
                return NumericValue(cur, depth, delta)
            prev = cur


def equivalence_scale(cf: CFrac, scale) -> CFrac:
    """Rescale ``a_k -> r_k r_{k-1} a_k`` and ``b_k -> r_k b_k`` (r_0 = 1).

    ``scale`` is a sequence (r_1, r_2, ...) or a callable k -> r_k.
    """
    if callable(scale):
        r = scale
    else:
        seq = tuple(scale)
        if any(x == 0 for x in seq):
            raise ZeroScale("scale factors must be nonzero")
        if cf.length is not None and len(seq) < cf.length:
            raise ValueError("need one scale factor per term")

        def r(k):
            if k > len(seq):
                raise ZeroScale(f"no scale factor for term {k}")
            return seq[k - 1]

    def term(k):
        rk = r(k)
        if rk == 0:
            raise ZeroScale(f"scale factor r_{k} is zero")
        rprev = 1 if k == 1 else r(k - 1)
        a, b = cf.term(k)
        return rk * rprev * a, rk * b

    return CFrac(cf.b0, term, cf.length)


def odd_part(cf: CFrac) -> CFrac:
    """Continued fraction whose k-th convergent is the (2k-1)-th convergent of ``cf``.

    The first two terms come from N_1/D_1 and N_3/D_3 directly; after that the
    odd-indexed numerators and denominators obey the three-term recurrence with
    a'_{k+1} = -a_{2k-1} a_{2k} b_{2k+1} / b_{2k-1}
    b'_{k+1} = a_{2k+1} + b_{2k} b_{2k+1} + a_{2k} b_{2k+1} / b_{2k-1}.
    """
    if cf.length is not None and cf.length < 3:
        raise ValueError("odd part needs at least three terms")
    length = None if cf.length is None else (cf.length + 1) // 2
    memo: dict[int, tuple] = {}

    def t(k):
        if k not in memo:
            memo[k] = cf.term(k)
        return memo[k]

    def term(j):
        if j == 1:
            return t(1)
        if j == 2:
            a2, b2 = t(2)
            a3, b3 = t(3)
            return a2 * b3, a3 + b2 * b3
        k = j - 1
        a_prev, b_prev = t(2 * k - 1)
        a_mid, b_mid = t(2 * k)
        a_next, b_next = t(2 * k + 1)
        if _is_zero(b_prev):
            raise ZeroDenominatorTerm(f"b_{2 * k - 1} vanishes")
        return (-_div(a_prev * a_mid * b_next, b_prev),
                a_next + b_mid * b_next + _div(a_mid * b_next, b_prev))

    return CFrac(cf.b0, term, length)


def _is_zero(x) -> bool:
    if isinstance(x, QSeries):
        return x[0] == 0
    return x == 0


def determinant_residual(pairs: Sequence[ConvergentPair], numerators: Sequence) -> list:
    """``P_k Q_{k-1} - P_{k-1} Q_k - (-1)^{k-1} a_1...a_k`` for each k (all zero when exact)."""
    out = []
    prod = 1
    pp, qp = 0, 1  # P_0, Q_0
    for pair, a in zip(pairs, numerators):
        prod = prod * a
        sign = 1 if pair.k % 2 == 1 else -1
        out.append(pair.P * qp - pp * pair.Q - sign * prod)
        pp, qp = pair.P, pair.Q
    return out


__all__ = [
    "CFrac",
    "ConvergentPair",
    "NumericValue",
    "convergents",
    "convergent_value",
    "determinant_residual",
    "eval_at_depth",
    "eval_numeric",
    "equivalence_scale",
    "exact_value",
    "from_sequences",
    "iter_convergents",
    "limit_series",
    "odd_part",
]
