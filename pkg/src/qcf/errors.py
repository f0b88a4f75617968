"""Exception hierarchy shared by every qcf module."""

from __future__ import annotations


class QcfError(Exception):
    """Base class for all qcf errors."""


class ZeroConstantTerm(QcfError, ZeroDivisionError):
    """A series had to be inverted but its constant coefficient is zero."""


class NonConvergent(QcfError):
    """A formal sum cannot be resummed (e.g. a geometric tail with ratio >= 1)."""


class FiniteCFExhausted(QcfError):
    """More terms were requested than a finite continued fraction has."""


class NotFormallyConvergent(QcfError):
    """The partial numerators never pushed the q-valuation past the target order."""


class NoNumericConvergence(QcfError):
    """A numeric evaluation ran out of its depth or term budget."""

    def __init__(self, message: str, depth: int | None = None, delta=None):
        super().__init__(message)
        self.depth = depth
        self.delta = delta


class DivisionByZero(QcfError, ZeroDivisionError):
    """A denominator vanished while folding a continued fraction or at a sample point."""

    def __init__(self, message: str, depth: int | None = None):
        super().__init__(message)
        self.depth = depth


class ZeroScale(QcfError, ValueError):
    """An equivalence transformation was given a zero scale factor."""


class ZeroDenominatorTerm(QcfError, ZeroDivisionError):
    """Odd-part construction hit a vanishing partial denominator b_{2k-1}."""


class ConstantTermNotOne(QcfError, ValueError):
    """Euler division needs both series to start with 1."""


class ExpansionStopped(QcfError):
    """C-fraction expansion stopped early; ``expansion`` holds the terms found so far."""

    def __init__(self, message: str, expansion):
        super().__init__(message)
        self.expansion = expansion


class TermBudgetExceeded(ExpansionStopped):
    pass


class OrderExhausted(ExpansionStopped):
    pass


class UnknownEntry(QcfError, KeyError):
    def __str__(self) -> str:
        return f"unknown entry: {self.args[0]!r}"


class DomainViolation(QcfError, ValueError):
    """A parameter point violates an entry's domain constraint."""
