from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Mapping


class Backend(str, enum.Enum):
    FORMAL = "formal"
    EXACT = "exact"
    NUMERIC = "numeric"


class LhsKind(str, enum.Enum):
    SERIES_RATIO = "series_ratio"
    SINGLE_SERIES = "single_series"
    PRODUCT_RATIO = "product_ratio"
    CLOSED_FORM = "closed_form"
    CF_EQUALS_CF = "cf_equals_cf"
    RECURRENCE = "recurrence"


@dataclass(frozen=True)
class Param:
    """A sampled parameter; values are drawn from ``[lo, hi]`` with small denominators."""

    name: str
    lo: Fraction = Fraction(-2)
    hi: Fraction = Fraction(2)
    nonzero: bool = False
    integer: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))


@dataclass(frozen=True)
class Constraint:
    text: str
    holds: Callable[[Mapping[str, Fraction]], bool]


Builder = Callable[[Any, dict], Any]


@dataclass(frozen=True)
class Entry:
    id: str
    title: str
    source: str
    lhs_kind: LhsKind
    backend: Backend
    params: tuple[Param, ...] = ()
    constraints: tuple[Constraint, ...] = ()
    #: named left-hand-side forms, first one is primary; builder(domain, params)
    lhs: tuple[tuple[str, Builder], ...] = ()
    #: builder(domain, params) -> CFrac, or a tuple of CFracs that must agree
    cf: Builder | None = None
    #: include the continued fraction when comparing formally
    formal_cf: bool | None = None
    #: builder(domain, params) -> [(label, residual)] for recurrence entries
    residuals: Builder | None = None
    default_order: int = 30
    default_samples: int = 5
    fixed_points: tuple[Mapping[str, Fraction], ...] = ()
    #: stricter tolerance than the run-wide one
    tol: str | None = None
    #: extra coefficient-exact comparison of the lhs forms for numeric entries
    formal_alt_order: int | None = None
    #: fixed nome for entries evaluated at a transcendental q
    nome: Callable[[], Any] | None = None
    #: at least this many points must pass; the rest may be inconclusive
    min_pass: int | None = None
    notes: str = field(default="", compare=False)

    @property
    def uses_formal_cf(self) -> bool:
        if self.formal_cf is not None:
            return self.formal_cf and self.cf is not None
        return self.backend is Backend.FORMAL and self.cf is not None

    @property
    def param_names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.params)
