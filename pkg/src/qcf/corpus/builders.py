"""Series, products and continued fractions shared by several catalog entries.

Every builder takes a domain (formal, exact or numeric q) first, so one
definition serves all three backends.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import mpmath

from ..cfrac import CFrac
from ..errors import DomainViolation


def qfac(dom, k: int):
    """``(q;q)_k``"""
    return dom.poch(1, 1, 1, k)


def rr_sum(dom, shift: int = 0):
    """``sum q^{k^2+shift k} / (q;q)_k``"""
    return dom.sum(lambda k: dom.q(k * k + shift * k) / qfac(dom, k), lambda k: k * k + shift * k)


def g_sum(dom, b, lam, shift: int = 0):
    """``g(b, lam q^shift) = sum lam^k q^{k^2+shift k} / ((q;q)_k (-bq;q)_k)``"""

    def term(k):
        return lam**k * dom.q(k * k + shift * k) / (qfac(dom, k) * dom.poch(-b, 1, 1, k))

    return dom.sum(term, lambda k: k * k + shift * k)


def big_g_sum(dom, a, b, lam, a_shift: int = 0, lam_shift: int = 0):
    """``G(a q^a_shift, b, lam q^lam_shift)``, using ``(-lam/a;q)_k a^k = prod (a + lam q^i)``."""

    def term(k):
        num = dom.const(1)
        for i in range(k):
            num = num * (a * dom.q(a_shift) + lam * dom.q(lam_shift + i))
        return num * dom.q(k * (k + 1) // 2) / (qfac(dom, k) * dom.poch(-b, 1, 1, k))

    return dom.sum(term, lambda k: k * (k + 1) // 2)


def mu(dom, n: int, s: int, lam):
    """Finite sum ``sum_k q^{k^2+sk} lam^k [n-k-s+1, k]_q``."""
    top = n - s + 1
    upto = top // 2 if top >= 0 else -1
    return dom.sum(lambda k: dom.q(k * k + s * k) * lam**k * dom.qbinom(top - k, k),
                   lambda k: k * k + s * k, upto=upto)


def eisenstein_sum(dom, a):
    return dom.sum(lambda k: (-a) ** k * dom.q(k * (k + 1) // 2), lambda k: k * (k + 1) // 2)


def eisenstein_denominator(dom, a, index: int):
    """Closed form for the denominator of the ``index``-th convergent."""
    n, odd = divmod(index, 2)
    step = n + odd
    return dom.sum(lambda k: a**k * dom.q(step * k) * dom.qbinom(n, k), lambda k: step * k, upto=n)


def rational_sqrt(x: Fraction) -> Fraction | None:
    x = Fraction(x)
    if x < 0:
        return None
    rn, rd = isqrt(x.numerator), isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def alpha_beta(dom, k):
    """``alpha = (1 + sqrt(1+4k))/2`` and ``beta = alpha - 1``."""
    disc = 1 + 4 * k
    root = None
    if isinstance(disc, (int, Fraction)):
        root = rational_sqrt(disc)
    if root is not None:
        alpha = dom.scalar((1 + root) / 2)
    elif dom.kind == "numeric":
        alpha = (1 + mpmath.sqrt(dom.scalar(disc))) / 2
    else:
        raise DomainViolation(f"sqrt(1+4k) is irrational for k = {k}; use the numeric backend")
    return alpha, alpha - 1


# continued fractions -------------------------------------------------------


def cf(dom, b0, first, later, length: int | None = None) -> CFrac:
    """``first`` is ``(a_1, b_1)``; ``later(k)`` gives ``(a_k, b_k)`` for k >= 2."""
    return CFrac(b0, lambda k: first if k == 1 else later(k), length)


def rr_cf(dom, lam=1) -> CFrac:
    return cf(dom, 0, (1, 1), lambda k: (lam * dom.q(k - 1), 1))


def two_step_cf(dom, even, odd) -> CFrac:
    """``1/(1 + a_2/(1 + a_3/(...)))`` with a_{2j} = even(j), a_{2j+1} = odd(j)."""
    return cf(dom, 0, (1, 1), lambda k: (even(k // 2) if k % 2 == 0 else odd(k // 2), 1))
