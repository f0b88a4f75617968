"""Acceptance criteria 1-11, one pytest case each.

Every case records a one-line verdict; ``conftest.py`` prints them at the end of
the run, and ``python tests/test_acceptance.py`` prints them directly.
"""

from __future__ import annotations

import dataclasses
import random
import subprocess
import sys
import time
from fractions import Fraction as F

import mpmath
import pytest

from qcf.cfrac import (
    CFrac,
    convergent_value,
    convergents,
    determinant_residual,
    equivalence_scale,
    from_sequences,
    limit_series,
    odd_part,
)
from qcf.corpus import build_cf, get_entry, sample_params
from qcf.domains import NumericQ
from qcf.errors import OrderExhausted
from qcf.expand import c_fraction_expand
from qcf.qseries import INFINITY, QSeries, qpochhammer
from qcf.special import Variant, rr_cf_numeric, rr_closed_form
from qcf.verify import FAIL, INCONCLUSIVE, PASS, SuiteConfig, entry_outcomes, run_suite, verify_point

TOL = "1e-40"
VERDICTS: dict[int, tuple[bool, str]] = {}


def _entry_reports(entry_id: str, samples: int | None = None, order: int | None = None):
    return run_suite(entry_id, config=SuiteConfig(order=order, samples=samples, tol=TOL))


def _all_pass(reports, expected: int | None = None) -> bool:
    return bool(reports) and all(r.status == PASS for r in reports) and (expected is None or len(reports) == expected)


def _summary(reports) -> str:
    return f"{sum(r.status == PASS for r in reports)}/{len(reports)} points pass"


def criterion_1():
    start = time.perf_counter()
    (r,) = _entry_reports("III.16.38.RR", order=40)
    took = time.perf_counter() - start
    ok = r.status == PASS and r.order == 40 and took < 5
    return ok, f"RR fraction = series ratio = product through q^40 ({took:.2f} s)"


def criterion_2():
    parts, ok = [], True
    for variant in (Variant.PLUS, Variant.MINUS):
        start = time.perf_counter()
        cf = rr_cf_numeric(variant, 256)
        closed = rr_closed_form(variant, 256)
        took = time.perf_counter() - start
        with mpmath.workprec(256):
            gap = abs(cf.value - closed.value)
            ok &= gap < mpmath.mpf(10) ** -50 and took < 1
        parts.append(f"{variant.value} |cf - closed| = {mpmath.nstr(gap, 3)} ({took:.3f} s)")
    return ok, "; ".join(parts)


def criterion_3():
    i = _entry_reports("L.I.6.3.1.i", samples=5, order=30)
    ii = _entry_reports("L.I.6.3.1.ii", samples=5, order=30)
    numeric_points = [{"q": q, "b": b, "lam": lam}
                      for q, b in ((F(1, 4), F(1, 3)), (F(1, 3), F(1, 2)), (F(1, 2), F(1, 5)))
                      for lam in (F(1, 2), F(2))]
    iii = [verify_point(get_entry("L.I.6.3.1.iii"), p, SuiteConfig(tol=TOL)) for p in numeric_points]
    iv = _entry_reports("L.I.6.3.1.iv", samples=5, order=25)
    ok = _all_pass(i, 5) and _all_pass(ii, 5) and _all_pass(iii, 6) and _all_pass(iv, 5)
    ok &= all(r.order == 30 for r in i + ii) and all(r.order == 25 for r in iv)
    return ok, f"(i) {_summary(i)}, (ii) {_summary(ii)}, (iii) {_summary(iii)}, (iv) {_summary(iv)}"


def criterion_4():
    reports = _entry_reports("III.16.16", samples=3)
    lengths = sorted({int(r.params["n"]) for r in reports})
    ok = _all_pass(reports, 30) and lengths == list(range(1, 11))
    return ok, f"{_summary(reports)} exact equalities over n = 1..10"


def criterion_5():
    a_values = [{"a": F(1)}, {"a": F(1, 2)}, {"a": F(-1, 3)}]
    series = [verify_point(get_entry("III.16.13"), p, SuiteConfig(order=30)) for p in a_values]
    denominators = [verify_point(get_entry("III.16.13.D"), p) for p in a_values]
    ok = _all_pass(series, 3) and _all_pass(denominators, 3)
    return ok, f"series {_summary(series)} at order 30; D_2n, D_2n+1 {_summary(denominators)} for n <= 8"


def criterion_6():
    parts, ok = [], True
    for entry_id in ("L.I.6.2.1", "L.I.6.4.1"):
        rs = _entry_reports(entry_id, samples=5, order=30)
        ok &= _all_pass(rs, 5)
        parts.append(f"{entry_id} {_summary(rs)}")
    rs = _entry_reports("T.6.4.1", samples=3)
    ok &= _all_pass(rs, 3) and all(abs(r.params["a"] * r.params["q"]) < 1 for r in rs)
    parts.append(f"T.6.4.1 {_summary(rs)}")
    for entry_id in ("L.I.6.2.3", "L.I.6.2.1.cor9", "L.I.6.2.1.cor11"):
        rs = _entry_reports(entry_id, order=30)
        ok &= _all_pass(rs)
        parts.append(f"{entry_id} {_summary(rs)}")
    return ok, "; ".join(parts)


def criterion_7():
    ok = True
    k_points = [{"q": q, "k": k} for k in (2, 6) for q in (F(1, 2), F(1, 4))]
    k_reports = [verify_point(get_entry("L.I.6.5.1"), p, SuiteConfig(tol=TOL)) for p in k_points]
    with mpmath.workprec(64):
        _, right = build_cf(get_entry("L.I.6.5.1"), {"q": F(1, 2), "k": 6}, NumericQ(F(1, 2)))
        ok &= right.term(1) == (1, 3) and right.term(2)[1] == 3 + 2 * mpmath.mpf(1) / 2
    ok &= _all_pass(k_reports, 4)
    k2 = _entry_reports("L.I.6.5.2")
    ok &= _all_pass(k2)
    abc = _entry_reports("L.I.6.4.2", samples=3)
    (outcome,) = entry_outcomes(abc)
    diagnosed = all(r.note and r.depth is not None for r in abc if r.status == INCONCLUSIVE)
    ok &= (len(abc) == 3 and outcome.status == PASS and outcome.failed == 0
           and outcome.passed >= 2 and diagnosed)
    odd = _entry_reports("L.I.6.4.3", samples=3)
    ok &= _all_pass(odd, 30)
    return ok, (f"L.I.6.5.1 {_summary(k_reports)} (k=6 gives alpha=3, beta=2); L.I.6.5.2 {_summary(k2)}; "
                f"L.I.6.4.2 {outcome.passed} pass / {outcome.inconclusive} inconclusive / {outcome.failed} fail; "
                f"L.I.6.4.3 {_summary(odd)}")


def criterion_8():
    ids = ["L.I.6.2.1.cor2", "V.32.21", "L.I.6.2.1.cor10", "V.32.20", "V.32.18", "V.32.22", "V.32.19"]
    parts, ok = [], True
    for entry_id in ids:
        rs = _entry_reports(entry_id, order=40)
        ok &= _all_pass(rs) and all(r.order == 40 for r in rs)
        parts.append(f"{entry_id} {_summary(rs)}")
    cor2 = _entry_reports("L.I.6.2.1.cor2", order=40)
    ok &= len({tuple(r.params.items()) for r in cor2}) == 3
    ok &= len(get_entry("V.32.18").lhs) == 2
    return ok, "; ".join(parts)


def criterion_9():
    binom = _entry_reports("III.16.2", samples=10, order=20)
    e11 = _entry_reports("III.16.11", samples=5)
    e12 = _entry_reports("III.16.12", samples=5)
    ok = _all_pass(binom, 10) and all(r.order == 20 for r in binom)
    ok &= _all_pass(e11, 5) and any(r.params["a"] == r.params["b"] for r in e11)
    ok &= all(abs(r.params["a"]) <= F(1, 2) and abs(r.params["b"]) <= F(1, 2) for r in e11)
    # the alternative forms are compared inside each report; III.16.11 also as series through q^25
    ok &= all(r.order == 25 for r in e11)
    ok &= _all_pass(e12, 5) and all(abs(r.params["a"] * r.params["b"]) < 1 for r in e12)
    ok &= len(get_entry("III.16.11").lhs) == 2 and len(get_entry("III.16.12").lhs) == 2
    return ok, f"III.16.2 {_summary(binom)}; III.16.11 {_summary(e11)} incl. a = b; III.16.12 {_summary(e12)}"


def _random_cf(rng: random.Random, length: int) -> CFrac:
    def draw():
        return F(rng.randint(-9, 9) or 1, rng.randint(1, 9))

    return from_sequences(0, [draw() for _ in range(length)], [draw() for _ in range(length)])


def criterion_10():
    rng = random.Random(2024)
    checks = {}

    def determinant():
        for _ in range(100):
            k = rng.randint(1, 20)
            c = _random_cf(rng, k)
            residuals = determinant_residual(convergents(c, k), [a for a, _ in c.terms(k)])
            if any(r != 0 for r in residuals):
                return False
        return True

    def equivalence():
        for _ in range(30):
            c = _random_cf(rng, 15)
            scaled = equivalence_scale(c, [F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(15)])
            for k in range(1, 16):
                try:
                    if convergent_value(scaled, k) != convergent_value(c, k):
                        return False
                except ZeroDivisionError:
                    break
        return True

    def interleaving():
        for _ in range(30):
            c = _random_cf(rng, 17)
            odd = odd_part(c)
            for k in range(1, 9):
                try:
                    if convergent_value(odd, k) != convergent_value(c, 2 * k - 1):
                        return False
                except ZeroDivisionError:
                    break
        return True

    def round_trip():
        order = 24
        for _ in range(40):
            spec = [(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3)) for _ in range(rng.randint(1, 6))]
            c = CFrac(1, lambda k, s=spec: (QSeries.monomial(s[k - 1][1], order, s[k - 1][0]), 1), len(spec))
            try:
                got = c_fraction_expand(limit_series(c, order), 20).terms
            except OrderExhausted as exc:
                got = exc.expansion.terms
            if got != tuple(spec[: len(got)]) or (sum(a for _, a in spec) < order and got != tuple(spec)):
                return False
        return True

    def pentagonal():
        prod = qpochhammer(1, 1, INFINITY, 40, offset=1)
        pent = {k * (3 * k - 1) // 2: (-1) ** k for k in range(-10, 11)}
        return all(c == pent.get(j, 0) for j, c in enumerate(prod.coeffs))

    def planted_error():
        rr = get_entry("III.16.38.RR")
        planted = dataclasses.replace(rr, cf=lambda dom, p: rr.cf(dom, p).with_term(3, a=lambda a: a + dom.q(1)))
        r = verify_point(planted, {}, SuiteConfig(order=40))
        return r.status == FAIL and r.first_diff_power is not None and r.first_diff_power <= 6

    for name, fn in [("determinant", determinant), ("equivalence", equivalence), ("odd part", interleaving),
                     ("C-fraction round trip", round_trip), ("pentagonal", pentagonal),
                     ("planted error", planted_error)]:
        checks[name] = fn()
    return all(checks.values()), ", ".join(f"{k} {'ok' if v else 'BROKEN'}" for k, v in checks.items())


def criterion_11():
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "qcf.cli", "verify", "--all"], capture_output=True, text=True)
    took = time.perf_counter() - start
    tail = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr.strip()
    return proc.returncode == 0 and took < 120, f"exit {proc.returncode} in {took:.1f} s: {tail}"


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 12)}


def evaluate(number: int) -> tuple[bool, str]:
    ok, detail = CRITERIA[number]()
    VERDICTS[number] = (bool(ok), detail)
    return bool(ok), detail


def verdict_line(number: int) -> str:
    ok, detail = VERDICTS[number]
    return f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, detail = evaluate(number)
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for n in sorted(CRITERIA):
        evaluate(n)
        print(verdict_line(n), flush=True)
        failures += not VERDICTS[n][0]
    sys.exit(1 if failures else 0)
