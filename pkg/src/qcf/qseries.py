"""Exact rationals and truncated formal power series in q.

A :class:`QSeries` of order ``N`` knows the coefficients of ``q^0 .. q^N`` and
nothing beyond.  Binary operations return the smaller of the two orders, so a
result never claims more coefficients than its inputs support.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

from .errors import NonConvergent, ZeroConstantTerm

Rational = Fraction
Scalar = Union[int, Fraction]

#: valuation of the zero series, and the ``n`` of an infinite q-Pochhammer product
INFINITY = math.inf


def rational(value) -> Fraction:
    """Parse ``"p/q"``, ``"0.25"``, an int or a Fraction into an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot make an exact rational from {value!r}")


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


class QSeries:
    """Truncated power series ``c_0 + c_1 q + ... + c_N q^N + O(q^{N+1})``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        c = [rational(x) for x in coeffs]
        if order is None:
            if not c:
                raise ValueError("a series needs at least one coefficient or an explicit order")
        else:
            if order < 0:
                raise ValueError("order must be non-negative")
            if len(c) > order + 1:
                del c[order + 1:]
            else:
                c.extend([Fraction(0)] * (order + 1 - len(c)))
        self._c = tuple(c)

    @classmethod
    def _raw(cls, coeffs: Sequence[Fraction]) -> "QSeries":
        obj = object.__new__(cls)
        obj._c = tuple(coeffs)
        return obj

    @classmethod
    def constant(cls, c: Scalar, order: int) -> "QSeries":
        return cls([c], order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: Scalar = 1) -> "QSeries":
        if exponent < 0:
            raise ValueError("negative powers of q are not power series")
        out = [Fraction(0)] * (order + 1)
        if exponent <= order:
            out[exponent] = rational(coeff)
        return cls._raw(out)

    @classmethod
    def coerce(cls, x, order: int) -> "QSeries":
        """Lift a scalar to a constant series, or truncate a series to ``order``."""
        if isinstance(x, QSeries):
            return x.truncate(order) if x.order > order else x
        return cls.constant(x, order)

    # -- inspection ---------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, j: int) -> Fraction:
        if j < 0 or j > self.order:
            raise IndexError(f"coefficient of q^{j} is outside the known range 0..{self.order}")
        return self._c[j]

    def __len__(self) -> int:
        return len(self._c)

    def valuation(self) -> float | int:
        for j, c in enumerate(self._c):
            if c:
                return j
        return INFINITY

    def is_zero(self) -> bool:
        return not any(self._c)

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return QSeries._raw(self._c[: order + 1])

    def leading_term(self) -> tuple[int, Fraction] | None:
        v = self.valuation()
        return None if v == INFINITY else (v, self._c[v])

    def first_difference(self, other: "QSeries") -> tuple[int, Fraction] | None:
        """Lowest power where the two series differ (within the common order)."""
        n = min(self.order, other.order)
        for j in range(n + 1):
            if self._c[j] != other._c[j]:
                return j, self._c[j] - other._c[j]
        return None

    def evaluate(self, x):
        """Evaluate the stored coefficients as a polynomial at ``x`` (Horner)."""
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, QSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __neg__(self) -> "QSeries":
        return QSeries._raw([-c for c in self._c])

    def __add__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            n = min(self.order, other.order)
            a, b = self._c, other._c
            return QSeries._raw([a[j] + b[j] for j in range(n + 1)])
        if _is_scalar(other):
            c = list(self._c)
            c[0] += other
            return QSeries._raw(c)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            n = min(self.order, other.order)
            a, b = self._c, other._c
            return QSeries._raw([a[j] - b[j] for j in range(n + 1)])
        if _is_scalar(other):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other) -> "QSeries":
        if _is_scalar(other):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            n = min(self.order, other.order)
            a, b = self._c, other._c
            out = [0] * (n + 1)
            bnz = [(j, bj) for j, bj in enumerate(b[: n + 1]) if bj]
            for i in range(n + 1):
                ai = a[i]
                if not ai:
                    continue
                lim = n - i
                for j, bj in bnz:
                    if j > lim:
                        break
                    out[i + j] += ai * bj
            return QSeries._raw([Fraction(x) for x in out])
        if _is_scalar(other):
            if not other:
                return QSeries._raw([Fraction(0)] * len(self._c))
            return QSeries._raw([c * other for c in self._c])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return self * other.inverse()
        if _is_scalar(other):
            if not other:
                raise ZeroDivisionError("division of a series by zero")
            inv = 1 / Fraction(other)
            return QSeries._raw([c * inv for c in self._c])
        return NotImplemented

    def __rtruediv__(self, other) -> "QSeries":
        if _is_scalar(other):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, e: int) -> "QSeries":
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = QSeries.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "QSeries":
        a = self._c
        if not a[0]:
            raise ZeroConstantTerm("cannot invert a series with zero constant term")
        inv0 = 1 / a[0]
        nz = [(i, ai) for i, ai in enumerate(a) if i and ai]
        out = [inv0]
        for j in range(1, len(a)):
            s = 0
            for i, ai in nz:
                if i > j:
                    break
                s += ai * out[j - i]
            out.append(Fraction(-s * inv0))
        return QSeries._raw(out)

    def mul_binomial(self, c: Scalar, e: int) -> "QSeries":
        """Multiply by ``(1 - c q^e)`` in O(N)."""
        if e == 0:
            return self * (1 - c)
        a = self._c
        if not c:
            return self
        return QSeries._raw([a[j] - c * a[j - e] if j >= e else a[j] for j in range(len(a))])

    def div_binomial(self, c: Scalar, e: int) -> "QSeries":
        """Divide by ``(1 - c q^e)`` in O(N)."""
        if e == 0:
            if c == 1:
                raise ZeroConstantTerm("division by (1 - 1)")
            return self / (1 - Fraction(c))
        if not c:
            return self
        a = self._c
        out: list[Fraction] = []
        for j in range(len(a)):
            out.append(a[j] + c * out[j - e] if j >= e else a[j])
        return QSeries._raw(out)

    def shift(self, e: int) -> "QSeries":
        """Multiply by ``q^e``, keeping the order."""
        if e < 0:
            raise ValueError("negative shift")
        n = len(self._c)
        return QSeries._raw([Fraction(0)] * min(e, n) + list(self._c[: max(n - e, 0)]))

    def subst_qpow(self, m: int) -> "QSeries":
        if m < 1:
            raise ValueError("substitution q -> q^m needs m >= 1")
        out = [Fraction(0)] * len(self._c)
        for j, c in enumerate(self._c):
            if m * j > self.order:
                break
            out[m * j] = c
        return QSeries._raw(out)

    # -- display ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"QSeries({self})"

    def __str__(self) -> str:
        parts = []
        for j, c in enumerate(self._c):
            if not c:
                continue
            mono = "" if j == 0 else ("q" if j == 1 else f"q^{j}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts) if parts else "0"
        if text.startswith("+ "):
            text = text[2:]
        elif text.startswith("- "):
            text = "-" + text[2:]
        return f"{text} + O(q^{self.order + 1})"


def valuation(x) -> float | int:
    """Valuation of a series or scalar (scalars are 0 unless zero)."""
    if isinstance(x, QSeries):
        return x.valuation()
    return INFINITY if x == 0 else 0


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def qs_inv(a: QSeries) -> QSeries:
    return a.inverse()


def qs_subst_qpow(a: QSeries, m: int) -> QSeries:
    return a.subst_qpow(m)


def qpochhammer(a: Scalar, m: int, n: int | float, order: int, offset: int = 0) -> QSeries:
    """``(a q^offset; q^m)_n`` truncated at ``q^order``; ``n`` may be INFINITY."""
    if m < 1:
        raise ValueError("base exponent m must be >= 1")
    a = rational(a)
    result = QSeries.constant(1, order)
    k = 0
    while k < n:
        e = offset + m * k
        if e > order:
            # remaining factors are 1 + O(q^{order+1})
            break
        result = result.mul_binomial(a, e)
        k += 1
    return result


@lru_cache(maxsize=None)
def _gauss_poly(n: int, k: int) -> tuple[int, ...]:
    if k < 0 or n < k:
        return (0,)
    if k == 0 or k == n:
        return (1,)
    # [n,k] = [n-1,k-1] + q^k [n-1,k]
    left = _gauss_poly(n - 1, k - 1)
    right = _gauss_poly(n - 1, k)
    out = [0] * (k * (n - k) + 1)
    for j, c in enumerate(left):
        out[j] += c
    for j, c in enumerate(right):
        out[j + k] += c
    return tuple(out)


def qbinomial_coeff(n: int, k: int, order: int | None = None) -> QSeries:
    """Gaussian binomial ``[n choose k]_q`` as an exact polynomial.

    With ``order=None`` the series order equals the polynomial degree; pass an
    explicit order to embed it among series of a given truncation.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    poly = _gauss_poly(n, k)
    return QSeries(poly, len(poly) - 1 if order is None else order)


def binomial_series(
    a: Scalar,
    b: Scalar,
    order: int,
    *,
    a_shift: int = 0,
    b_shift: int = 0,
    base: int = 1,
    parity: int | None = None,
) -> QSeries:
    r"""``sum_k prod_{i<k} (A - B q^{m i}) / (q^m; q^m)_k`` with A = a q^a_shift, B = b q^b_shift.

    This is ``sum_k (B/A; q^m)_k A^k / (q^m; q^m)_k`` written so that A = 0 is
    allowed.  ``parity`` restricts k to even (0) or odd (1) indices.

    When A carries no power of q the terms do not gain valuation, so the k-sum
    is resummed exactly: past k = order every term is the previous one times A
    modulo q^{order+1}, which leaves a geometric tail with ratio A.
    """
    a, b = rational(a), rational(b)
    if a_shift < 0 or b_shift < 0 or base < 1:
        raise ValueError("shifts must be >= 0 and base >= 1")
    total = QSeries.constant(0, order)
    term = QSeries.constant(1, order)
    step = 1 if parity is None else 2

    def wanted(k: int) -> bool:
        return parity is None or k % 2 == parity

    if a_shift == 0:
        if a and abs(a) >= 1:
            raise NonConvergent(f"geometric tail with ratio {a} does not converge")
        k0 = order + 1
        for k in range(k0 + 1):
            if wanted(k) and k < k0:
                total = total + term
            if k == k0:
                break
            term = _binomial_step(term, a, b, a_shift, b_shift, base, k)
        # term is now T_{k0}; T_k == T_{k0} * a^{k-k0} for k >= k0
        first = 0 if wanted(k0) else 1
        if step == 1:
            tail = term / (1 - a)
        else:
            tail = term * (a ** first) / (1 - a * a)
        return total + tail

    k = 0
    while True:
        if term.is_zero() and k > 0:
            break
        if wanted(k):
            total = total + term
        # each factor has valuation >= min(a_shift, b_shift + base*i)
        bound = sum(min(a_shift, b_shift + base * i) for i in range(k + 1)) if b else (k + 1) * a_shift
        if bound > order:
            break
        term = _binomial_step(term, a, b, a_shift, b_shift, base, k)
        k += 1
    return total


def _binomial_step(term: QSeries, a, b, a_shift, b_shift, base, k) -> QSeries:
    # T_{k+1} = T_k * (a q^a_shift - b q^{b_shift + base*k}) / (1 - q^{base*(k+1)})
    t = term.shift(a_shift) * a
    if b:
        t = t - term.shift(b_shift + base * k) * b
    return t.div_binomial(1, base * (k + 1))


def qbt_sum(a: Scalar, b: Scalar, order: int) -> QSeries:
    """Left side of the q-binomial theorem, ``sum_k (b/a;q)_k a^k / (q;q)_k``, exactly."""
    return binomial_series(a, b, order)


def product_ratio(b: Scalar, a: Scalar, order: int) -> QSeries:
    """``(b;q)_inf / (a;q)_inf`` through ``q^order``."""
    return qpochhammer(b, 1, INFINITY, order) * qpochhammer(a, 1, INFINITY, order).inverse()
