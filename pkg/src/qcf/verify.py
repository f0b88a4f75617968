"""Run catalog entries under their backend and collect structured reports."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Mapping

import mpmath

from . import corpus
from .cfrac import eval_numeric, exact_value, limit_series
from .corpus import Backend, Entry, LhsKind
from .domains import ExactQ, FormalQ
from .errors import (
    DivisionByZero,
    DomainViolation,
    NoNumericConvergence,
    NonConvergent,
    NotFormallyConvergent,
    QcfError,
    ZeroConstantTerm,
)
from .qseries import INFINITY, QSeries

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"

DEFAULT_PRECISION = 256
DEFAULT_TOL = "1e-40"
#: continued fractions are folded to this fraction of the comparison tolerance
CF_TOL_FACTOR = 2**-20
#: at most this many replacement points are tried after a degenerate exact sample
RESAMPLE_LIMIT = 20

REPORT_SCHEMA: dict = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "VerificationReport",
    "type": "object",
    "required": ["entry", "backend", "params", "order", "precision_bits", "tol", "status",
                 "first_diff_power", "delta", "ms"],
    "additionalProperties": False,
    "properties": {
        "entry": {"type": "string"},
        "backend": {"enum": ["formal", "exact", "numeric"]},
        "params": {"type": "object", "additionalProperties": {"type": "string", "pattern": r"^-?\d+/\d+$"}},
        "order": {"type": ["integer", "null"]},
        "precision_bits": {"type": ["integer", "null"]},
        "tol": {"type": ["string", "null"]},
        "status": {"enum": [PASS, FAIL, INCONCLUSIVE]},
        "first_diff_power": {"type": ["integer", "null"]},
        "delta": {"type": ["string", "null"]},
        "ms": {"type": "integer", "minimum": 0},
    },
}


@dataclass
class VerificationReport:
    entry: str
    backend: str
    params: dict[str, Fraction]
    status: str
    order: int | None = None
    precision_bits: int | None = None
    tol: str | None = None
    depth: int | None = None
    first_diff_power: int | None = None
    delta: str | None = None
    ms: int = 0
    note: str = ""
    index: int = 0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        return {
            "entry": self.entry,
            "backend": self.backend,
            "params": {k: f"{v.numerator}/{v.denominator}" for k, v in sorted(self.params.items())},
            "order": self.order,
            "precision_bits": self.precision_bits,
            "tol": self.tol,
            "status": self.status,
            "first_diff_power": self.first_diff_power,
            "delta": self.delta,
            "ms": self.ms,
        }

    def describe(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in sorted(self.params.items())) or "-"
        parts = [f"{self.status.upper():12} {self.entry:18} [{self.backend}] {params}"]
        if self.order is not None:
            parts.append(f"order={self.order}")
        if self.precision_bits is not None:
            parts.append(f"prec={self.precision_bits}")
        if self.first_diff_power is not None:
            parts.append(f"first differing power q^{self.first_diff_power}")
        if self.delta is not None:
            parts.append(f"delta={self.delta}")
        if self.note:
            parts.append(f"({self.note})")
        return "  ".join(parts)


@dataclass(frozen=True)
class SuiteConfig:
    """``order`` / ``samples`` of None mean each entry's own default."""

    order: int | None = None
    samples: int | None = None
    precision: int = DEFAULT_PRECISION
    tol: str = DEFAULT_TOL
    threads: int = 1


def _rational_params(point: Mapping) -> dict[str, Fraction]:
    return {k: Fraction(v) for k, v in point.items() if isinstance(v, (int, Fraction))}


def _ms(start: float) -> int:
    return max(0, int(round((time.perf_counter() - start) * 1000)))


def _compare_series(values: list[tuple[str, Any]], order: int) -> tuple[int | None, str | None, str]:
    """First differing power (and coefficient delta) between the first value and the rest."""
    ref_name, ref = values[0]
    ref = QSeries.coerce(ref, order)
    worst: tuple[int, Fraction, str] | None = None
    for name, v in values[1:]:
        v = QSeries.coerce(v, order)
        diff = v.first_difference(ref)
        if diff is not None and (worst is None or diff[0] < worst[0]):
            worst = (diff[0], diff[1], f"{name} vs {ref_name}")
    if worst is None:
        return None, None, ""
    return worst[0], str(worst[1]), worst[2]


def _formal_values(entry: Entry, point: Mapping, order: int, with_cf: bool) -> list[tuple[str, Any]]:
    dom = FormalQ(order)
    params = dom.params(point)
    values = [(name, fn(dom, params)) for name, fn in entry.lhs]
    if with_cf:
        cfs = entry.cf(dom, params)
        for i, c in enumerate(cfs if isinstance(cfs, tuple) else (cfs,)):
            values.append((f"continued fraction {i + 1}" if isinstance(cfs, tuple) else "continued fraction",
                           limit_series(c, order)))
    return values


def verify_formal(entry: Entry, point: Mapping, order: int | None = None) -> VerificationReport:
    """Coefficient-exact comparison of every lhs form and the formal limit of the fraction."""
    start = time.perf_counter()
    order = order or entry.default_order
    report = VerificationReport(entry.id, "formal", _rational_params(point), FAIL, order=order)
    try:
        values = _formal_values(entry, point, order, entry.cf is not None)
    except (NotFormallyConvergent, ZeroConstantTerm, NonConvergent, DomainViolation, ZeroDivisionError) as exc:
        report.note = f"{type(exc).__name__}: {exc}"
        report.ms = _ms(start)
        return report
    power, delta, note = _compare_series(values, order)
    report.status = PASS if power is None else FAIL
    report.first_diff_power, report.delta, report.note = power, delta, note
    report.ms = _ms(start)
    return report


def _exact_values(entry: Entry, point: Mapping) -> list[tuple[str, Any]]:
    dom = ExactQ(point["q"])
    params = dom.params(point)
    values = [(name, fn(dom, params)) for name, fn in entry.lhs]
    if entry.cf is not None:
        cfs = entry.cf(dom, params)
        for i, c in enumerate(cfs if isinstance(cfs, tuple) else (cfs,)):
            values.append((f"continued fraction {i + 1}", exact_value(c)))
    return values


def verify_exact_finite(entry: Entry, point: Mapping) -> VerificationReport:
    """Exact rational equality; raises DivisionByZero at a degenerate point so the caller can re-sample."""
    start = time.perf_counter()
    report = VerificationReport(entry.id, "exact", _rational_params(point), FAIL)
    try:
        values = _exact_values(entry, point)
    except DivisionByZero:
        raise
    except ZeroDivisionError as exc:
        raise DivisionByZero(f"degenerate sample: {exc}") from exc
    ref_name, ref = values[0]
    bad = [(name, v - ref) for name, v in values[1:] if v != ref]
    if bad:
        report.delta = str(bad[0][1])
        report.note = f"{bad[0][0]} vs {ref_name}"
    else:
        report.status = PASS
    report.ms = _ms(start)
    return report


def _entry_tol(entry: Entry, tol: str) -> str:
    if entry.tol is not None and mpmath.mpf(entry.tol) < mpmath.mpf(tol):
        return entry.tol
    return tol


def verify_numeric(entry: Entry, point: Mapping, precision: int = DEFAULT_PRECISION,
                   tol: str = DEFAULT_TOL) -> VerificationReport:
    """High-precision comparison of every lhs form and every continued fraction.

    Entries with ``formal_alt_order`` additionally have their lhs forms (and the
    fraction, when it converges formally) compared as truncated series.
    """
    start = time.perf_counter()
    tol = _entry_tol(entry, tol)
    report = VerificationReport(entry.id, "numeric", _rational_params(point), FAIL,
                                precision_bits=precision, tol=tol)
    with mpmath.workprec(precision):
        tol_value = mpmath.mpf(tol)
        try:
            dom = corpus.domain_for(entry, point)
            params = dom.params(point)
            values = [(name, fn(dom, params)) for name, fn in entry.lhs]
            depth = 0
            if entry.cf is not None:
                cfs = entry.cf(dom, params)
                for i, c in enumerate(cfs if isinstance(cfs, tuple) else (cfs,)):
                    res = eval_numeric(c, tol=tol_value * CF_TOL_FACTOR)
                    depth = max(depth, res.depth)
                    values.append((f"continued fraction {i + 1}", res.value))
        except (NoNumericConvergence, DivisionByZero) as exc:
            report.status = INCONCLUSIVE
            report.depth = getattr(exc, "depth", None)
            report.note = f"{type(exc).__name__}: {exc}"
            report.ms = _ms(start)
            return report
        report.depth = depth or None
        ref_name, ref = values[0]
        worst, worst_name = mpmath.mpf(0), ""
        for name, v in values[1:]:
            d = abs(v - ref)
            if d > worst or not worst_name:
                worst, worst_name = d, f"{name} vs {ref_name}"
        report.delta = mpmath.nstr(worst, 5)
        ok = worst < tol_value
        report.status = PASS if ok else FAIL
        if not ok:
            report.note = worst_name
    if report.status == PASS and entry.formal_alt_order:
        report.order = entry.formal_alt_order
        try:
            values = _formal_values(entry, point, entry.formal_alt_order, entry.uses_formal_cf)
            power, delta, note = _compare_series(values, entry.formal_alt_order)
        except (QcfError, ZeroDivisionError) as exc:
            power, delta, note = None, None, f"formal cross-check skipped: {type(exc).__name__}"
        if power is not None:
            report.status = FAIL
            report.first_diff_power, report.note = power, f"formal cross-check: {note}, coefficient delta {delta}"
        elif note:
            report.note = note
    report.ms = _ms(start)
    return report


def verify_recurrence(entry: Entry, point: Mapping, order: int | None = None) -> VerificationReport:
    """Every residual of the entry must vanish through ``q^order``."""
    start = time.perf_counter()
    order = order or entry.default_order
    report = VerificationReport(entry.id, "formal", _rational_params(point), FAIL, order=order)
    dom = FormalQ(order)
    residuals = entry.residuals(dom, dom.params(point))
    worst = None
    for label, r in residuals:
        r = QSeries.coerce(r, order)
        v = r.valuation()
        if v != INFINITY and v <= order and (worst is None or v < worst[0]):
            worst = (int(v), r[int(v)], label)
    if worst is None:
        report.status = PASS
    else:
        report.first_diff_power, report.delta, report.note = worst[0], str(worst[1]), worst[2]
    report.ms = _ms(start)
    return report


def verify_point(entry: Entry, point: Mapping, config: SuiteConfig = SuiteConfig()) -> VerificationReport:
    if entry.lhs_kind is LhsKind.RECURRENCE:
        return verify_recurrence(entry, point, config.order)
    if entry.backend is Backend.FORMAL:
        return verify_formal(entry, point, config.order)
    if entry.backend is Backend.EXACT:
        return verify_exact_finite(entry, point)
    return verify_numeric(entry, point, config.precision, config.tol)


def _integer_part(entry: Entry, point: Mapping) -> dict:
    names = {p.name for p in entry.params if p.integer}
    return {k: v for k, v in point.items() if k in names}


def _run_entry(entry_id: str, seed: int, config: SuiteConfig) -> list[VerificationReport]:
    entry = corpus.get_entry(entry_id)
    count = config.samples or entry.default_samples
    points = corpus.sample_params(entry, count, seed)
    spare: list[dict] | None = None
    reports = []
    for index, point in enumerate(points):
        note = ""
        for _ in range(RESAMPLE_LIMIT + 1):
            try:
                r = verify_point(entry, point, config)
                break
            except DivisionByZero as exc:
                # degenerate exact sample: take the next unused point with the same integer params
                if spare is None:
                    spare = [p for p in corpus.sample_params(entry, count + RESAMPLE_LIMIT, seed) if p not in points]
                fixed = _integer_part(entry, point)
                candidates = [p for p in spare if _integer_part(entry, p) == fixed]
                note = f"re-sampled after degenerate point {_rational_params(point)}"
                if not candidates:
                    r = VerificationReport(entry.id, entry.backend.value, _rational_params(point), FAIL,
                                           note=f"no usable sample point: {exc}")
                    break
                point = candidates[0]
                spare.remove(point)
        if note:
            r.note = f"{r.note}; {note}" if r.note else note
        r.index = index
        reports.append(r)
    return reports


def run_entries(entries: Iterable[Entry], seed: int = 42, config: SuiteConfig = SuiteConfig()) -> list[VerificationReport]:
    """Verify the given entries; reports ordered by entry id then point index."""
    ids = sorted(e.id for e in entries)
    if config.threads > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=config.threads) as pool:
            chunks = list(pool.map(_run_entry, ids, [seed] * len(ids), [config] * len(ids)))
    else:
        chunks = [_run_entry(i, seed, config) for i in ids]
    return [r for chunk in chunks for r in chunk]


def run_suite(pattern: str | None = None, seed: int = 42, config: SuiteConfig = SuiteConfig()) -> list[VerificationReport]:
    """Verify every entry whose id matches the shell-style ``pattern`` (all entries when None)."""
    return run_entries(corpus.matching(pattern), seed, config)


@dataclass(frozen=True)
class EntryOutcome:
    entry: str
    status: str
    passed: int
    failed: int
    inconclusive: int


def entry_outcomes(reports: Iterable[VerificationReport]) -> list[EntryOutcome]:
    """Per-entry verdict; entries with ``min_pass`` tolerate inconclusive points beyond that many passes."""
    grouped: dict[str, list[VerificationReport]] = {}
    for r in reports:
        grouped.setdefault(r.entry, []).append(r)
    out = []
    for entry_id, rs in grouped.items():
        p = sum(r.status == PASS for r in rs)
        f = sum(r.status == FAIL for r in rs)
        i = sum(r.status == INCONCLUSIVE for r in rs)
        min_pass = corpus.get_entry(entry_id).min_pass
        if f:
            status = FAIL
        elif not i or (min_pass is not None and p >= min_pass):
            status = PASS
        else:
            status = INCONCLUSIVE
        out.append(EntryOutcome(entry_id, status, p, f, i))
    return out


def suite_status(reports: Iterable[VerificationReport]) -> str:
    statuses = {o.status for o in entry_outcomes(reports)}
    if FAIL in statuses:
        return FAIL
    if INCONCLUSIVE in statuses:
        return INCONCLUSIVE
    return PASS


def default_threads() -> int:
    """``QCF_THREADS``: unset means serial, 0 means one worker per CPU."""
    raw = os.environ.get("QCF_THREADS")
    if raw is None or raw == "":
        return 1
    n = int(raw)
    return (os.cpu_count() or 1) if n == 0 else max(1, n)


__all__ = [
    "FAIL",
    "INCONCLUSIVE",
    "PASS",
    "REPORT_SCHEMA",
    "EntryOutcome",
    "SuiteConfig",
    "VerificationReport",
    "entry_outcomes",
    "run_entries",
    "run_suite",
    "suite_status",
    "verify_exact_finite",
    "verify_formal",
    "verify_numeric",
    "verify_point",
    "verify_recurrence",
]
