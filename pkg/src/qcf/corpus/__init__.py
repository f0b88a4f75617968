"""Catalog of q-continued-fraction identities and helpers to instantiate them."""

from __future__ import annotations

import fnmatch
import math
import random
from contextlib import nullcontext
from fractions import Fraction
from typing import Mapping

import mpmath

from ..cfrac import CFrac
from ..domains import ExactQ, FormalQ, NumericQ
from ..errors import DomainViolation, UnknownEntry
from .catalog import ENTRIES
from .model import Backend, Constraint, Entry, LhsKind, Param

_BY_ID = {e.id: e for e in ENTRIES}
if len(_BY_ID) != len(ENTRIES):
    raise RuntimeError("duplicate entry ids in catalog")

MAX_TRIES = 10_000
MAX_PART = 16


def all_entries() -> tuple[Entry, ...]:
    return ENTRIES


def get_entry(entry_id: str) -> Entry:
    try:
        return _BY_ID[entry_id]
    except KeyError:
        raise UnknownEntry(entry_id) from None


def matching(pattern: str | None) -> list[Entry]:
    """Entries whose id matches a shell-style pattern, sorted by id."""
    chosen = ENTRIES if pattern is None else [e for e in ENTRIES if fnmatch.fnmatchcase(e.id, pattern)]
    return sorted(chosen, key=lambda e: e.id)


def _draw(rng: random.Random, param: Param) -> Fraction:
    while True:
        den = rng.randint(1, MAX_PART)
        lo = max(math.ceil(param.lo * den), -MAX_PART)
        hi = min(math.floor(param.hi * den), MAX_PART)
        if lo > hi:
            continue
        x = Fraction(rng.randint(lo, hi), den)
        if param.nonzero and x == 0:
            continue
        return x


def violated(entry: Entry, point: Mapping[str, Fraction]) -> list[Constraint]:
    return [c for c in entry.constraints if not c.holds(point)]


def sample_params(entry: Entry, count: int, seed: int = 42) -> list[dict[str, Fraction]]:
    """Deterministic parameter points: fixed points first, then seeded random draws.

    ``count`` counts base points; integer parameters (such as a length n) are
    crossed with every base point over their whole range.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = random.Random(f"{seed}:{entry.id}")
    drawn = [p for p in entry.params if not p.integer]
    crossed = [p for p in entry.params if p.integer]
    base: list[dict[str, Fraction]] = [dict(fp) for fp in entry.fixed_points[:count]]
    if not drawn:
        base = base or [{}]
    tries = 0
    while len(base) < count and drawn:
        tries += 1
        if tries > MAX_TRIES:
            raise RuntimeError(f"could not sample {count} points for {entry.id}")
        point = {p.name: _draw(rng, p) for p in drawn}
        if point in base or violated(entry, point):
            continue
        base.append(point)
    out = []
    for point in base:
        combos = [{}]
        for p in crossed:
            combos = [dict(c, **{p.name: Fraction(v)}) for c in combos
                      for v in range(int(p.lo), int(p.hi) + 1)]
        for combo in combos:
            out.append({**combo, **point})
    return out


def domain_for(entry: Entry, point: Mapping, order: int | None = None):
    """The domain an entry is verified in; numeric domains use the current mpmath precision."""
    if entry.backend is Backend.FORMAL:
        return FormalQ(order or entry.default_order)
    if entry.backend is Backend.EXACT:
        if "q" not in point:
            raise DomainViolation(f"{entry.id} needs a value for q")
        return ExactQ(point["q"])
    if entry.nome is not None:
        return NumericQ(entry.nome())
    if "q" not in point:
        raise DomainViolation(f"{entry.id} needs a value for q")
    return NumericQ(point["q"])


def _check(entry: Entry, point: Mapping) -> None:
    missing = [n for n in entry.param_names if n not in point and not (n == "q" and entry.nome)]
    if missing:
        raise DomainViolation(f"{entry.id}: missing parameter(s) {', '.join(missing)}")
    exact = {k: v for k, v in point.items() if isinstance(v, (int, Fraction))}
    if len(exact) == len(point):
        bad = violated(entry, exact)
        if bad:
            raise DomainViolation(f"{entry.id}: constraint violated: {bad[0].text}")


def _prec(precision: int | None):
    return mpmath.workprec(precision) if precision else nullcontext()


def build_lhs_forms(entry: Entry, point: Mapping, order_or_precision: int | None = None, domain=None) -> dict:
    """All left-hand-side forms of ``entry`` at ``point``, keyed by form name."""
    _check(entry, point)
    numeric = entry.backend is Backend.NUMERIC
    with _prec(order_or_precision if numeric else None):
        dom = domain or domain_for(entry, point, None if numeric else order_or_precision)
        params = dom.params(point)
        return {name: fn(dom, params) for name, fn in entry.lhs}


def build_lhs(entry: Entry, point: Mapping, order_or_precision: int | None = None, domain=None):
    if not entry.lhs:
        raise DomainViolation(f"{entry.id} has no left-hand side; it compares continued fractions or residuals")
    forms = build_lhs_forms(entry, point, order_or_precision, domain)
    return forms[entry.lhs[0][0]]


def build_cf(entry: Entry, point: Mapping, domain=None, order: int | None = None) -> CFrac | tuple[CFrac, ...]:
    if entry.cf is None:
        raise DomainViolation(f"{entry.id} has no continued fraction")
    _check(entry, point)
    dom = domain or domain_for(entry, point, order)
    return entry.cf(dom, dom.params(point))


__all__ = [
    "Backend",
    "Constraint",
    "Entry",
    "LhsKind",
    "Param",
    "all_entries",
    "build_cf",
    "build_lhs",
    "build_lhs_forms",
    "domain_for",
    "get_entry",
    "matching",
    "sample_params",
    "violated",
]
