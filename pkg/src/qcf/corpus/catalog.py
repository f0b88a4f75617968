"""The catalog itself.  One ``Entry`` per identity; see ``model.Entry`` for the fields."""

from __future__ import annotations

from fractions import Fraction as F

import mpmath

from ..cfrac import CFrac, iter_convergents
from ..special import Variant, rr_closed_form, special_q
from .builders import (
    alpha_beta,
    big_g_sum,
    cf,
    eisenstein_denominator,
    eisenstein_sum,
    g_sum,
    mu,
    rr_cf,
    rr_sum,
    two_step_cf,
)
from .model import Backend, Constraint, Entry, LhsKind, Param

FORMAL, EXACT, NUMERIC = Backend.FORMAL, Backend.EXACT, Backend.NUMERIC

Q_NUMERIC = Param("q", F(0), F(1, 2), nonzero=True)
Q_EXACT = Param("q", F(-2), F(2), nonzero=True)
N_EXACT = Param("n", 1, 10, integer=True)


def pts(*rows: dict) -> tuple[dict, ...]:
    return tuple({k: F(v) for k, v in row.items()} for row in rows)


def _prod(dom, *factors):
    """Product of ``(c q^shift; q^base)_inf`` for ``(c, shift, base)`` triples."""
    out = dom.const(1)
    for c, shift, base in factors:
        out = out * dom.poch(c, shift, base)
    return out


def _ratio(num: tuple, den: tuple, den_power: int = 1):
    def build(dom, p):
        d = _prod(dom, *den)
        return _prod(dom, *num) / d**den_power
    return build


# Rogers-Ramanujan and its special values ---------------------------------

RR = Entry(
    id="III.16.38.RR",
    title="Rogers-Ramanujan continued fraction as a series ratio and as a product ratio",
    source="Notebooks III, ch. 16, entry 38(iii)",
    lhs_kind=LhsKind.SERIES_RATIO,
    backend=FORMAL,
    lhs=(
        ("series ratio", lambda dom, p: rr_sum(dom, 1) / rr_sum(dom, 0)),
        ("product ratio", _ratio(((1, 1, 5), (1, 4, 5)), ((1, 2, 5), (1, 3, 5)))),
    ),
    cf=lambda dom, p: rr_cf(dom),
    default_order=40,
    default_samples=1,
)


def _special(entry_id: str, variant: Variant, title: str, source: str) -> Entry:
    def closed(dom, p):
        return rr_closed_form(variant, mpmath.mp.prec).value

    return Entry(
        id=entry_id,
        title=title,
        source=source,
        lhs_kind=LhsKind.CLOSED_FORM,
        backend=NUMERIC,
        lhs=(
            ("closed form", closed),
            ("product ratio", _ratio(((1, 1, 5), (1, 4, 5)), ((1, 2, 5), (1, 3, 5)))),
        ),
        cf=lambda dom, p: rr_cf(dom),
        default_samples=1,
        tol="1e-50",
        nome=lambda: special_q(variant),
    )


SPECIAL_PLUS = _special(
    "III.16.39.cor.ii", Variant.PLUS,
    "Rogers-Ramanujan continued fraction at q = exp(-2 pi), closed form",
    "Notebooks III, ch. 16, corollary to entry 39(ii)",
)
SPECIAL_MINUS = _special(
    "III.16.39.cor.i", Variant.MINUS,
    "Rogers-Ramanujan continued fraction at q = -exp(-pi), closed form",
    "Notebooks III, ch. 16, corollary to entry 39(i)",
)

# g(b, lam) family ----------------------------------------------------------

B_LAM = (Param("b"), Param("lam"))


def _g_ratio(dom, p):
    return g_sum(dom, p["b"], p["lam"], 1) / g_sum(dom, p["b"], p["lam"], 0)


G_CFRAC1 = Entry(
    id="L.I.6.3.1.i",
    title="g(b, lam q)/g(b, lam), interleaved continued fraction",
    source="Lost Notebook I, entry 6.3.1(i)",
    lhs_kind=LhsKind.SERIES_RATIO,
    backend=FORMAL,
    params=B_LAM,
    lhs=(("g ratio", _g_ratio),),
    cf=lambda dom, p: two_step_cf(
        dom,
        lambda j: p["lam"] * dom.q(2 * j - 1),
        lambda j: p["b"] * dom.q(j) + p["lam"] * dom.q(2 * j),
    ),
)

G_CFRAC2 = Entry(
    id="L.I.6.3.1.ii",
    title="g(b, lam q)/g(b, lam), denominators 1 + b q^k",
    source="Lost Notebook I, entry 6.3.1(ii); notebooks III, entry 16.15",
    lhs_kind=LhsKind.SERIES_RATIO,
    backend=FORMAL,
    params=B_LAM,
    lhs=(("g ratio", _g_ratio),),
    cf=lambda dom, p: cf(dom, 0, (1, 1),
                         lambda k: (p["lam"] * dom.q(k - 1), 1 + p["b"] * dom.q(k - 1))),
)

G_CFRAC3 = Entry(
    id="L.I.6.3.1.iii",
    title="g(b, lam q)/g(b, lam), constant denominators 1 - b",
    source="Lost Notebook I, entry 6.3.1(iii)",
    lhs_kind=LhsKind.SERIES_RATIO,
    backend=NUMERIC,
    params=(Q_NUMERIC, Param("b", -1, 1), Param("lam")),
    constraints=(Constraint("|b| < 1", lambda p: abs(p["b"]) < 1),),
    lhs=(("g ratio", _g_ratio),),
    cf=lambda dom, p: cf(dom, 0, (1, 1 - p["b"]),
                         lambda k: (p["b"] + p["lam"] * dom.q(k - 1), 1 - p["b"])),
    default_samples=6,
    fixed_points=pts(*({"q": q, "b": b, "lam": lam}
                       for q, b in ((F(1, 4), F(1, 3)), (F(1, 3), F(1, 2)), (F(1, 2), F(1, 5)))
                       for lam in (F(1, 2), F(2)))),
)


def _g_recurrence(dom, p):
    b, lam = p["b"], p["lam"]
    res = g_sum(dom, b, lam, 0) - (1 - b) * g_sum(dom, b, lam, 1) - (b + lam * dom.q(1)) * g_sum(dom, b, lam, 2)
    return [("g(b,lam) - (1-b) g(b,lam q) - (b + lam q) g(b,lam q^2)", res)]


G_RECURRENCE = Entry(
    id="L.I.6.3.1.iv",
    title="Three-term recurrence satisfied by g(b, lam)",
    source="Lost Notebook I, entry 6.3.1(iv)",
    lhs_kind=LhsKind.RECURRENCE,
    backend=FORMAL,
    params=B_LAM,
    residuals=_g_recurrence,
    default_order=25,
)

RR_LAMBDA = Entry(
    id="III.16.15.cor",
    title="Rogers-Ramanujan fraction with a parameter lam",
    source="Notebooks III, corollary to entry 16.15",
    lhs_kind=LhsKind.SERIES_RATIO,
    backend=FORMAL,
    params=(Param("lam"),),
    lhs=(("series ratio", lambda dom, p: g_sum(dom, 0, p["lam"], 1) / g_sum(dom, 0, p["lam"], 0)),),
    cf=lambda dom, p: rr_cf(dom, p["lam"]),
)

MU_CONVERGENTS = Entry(
    id="III.16.16",
    title="Convergents of 1 + lam q/(1 + lam q^2/(1 + ...)) as ratios of finite sums",
    source="Notebooks III, entry 16.16",
    lhs_kind=LhsKind.SERIES_RATIO,
    backend=EXACT,
    params=(N_EXACT, Param("lam"), Q_EXACT),
    lhs=(("mu_n(0)/mu_n(1)",
          lambda dom, p: mu(dom, int(p["n"]), 0, p["lam"]) / mu(dom, int(p["n"]), 1, p["lam"])),),
    cf=lambda dom, p: CFrac(1, lambda k: (p["lam"] * dom.q(k), 1), int(p["n"])),
    default_samples=3,
    fixed_points=pts({"lam": 1, "q": F(1, 3)}),
)

EISENSTEIN_POINTS = pts({"a": 1}, {"a": F(1, 2)}, {"a": F(-1, 3)})


def _eisenstein_cf(dom, p):
    a = p["a"]
    return two_step_cf(dom, lambda j: a * dom.q(2 * j - 1), lambda j: a * (dom.q(2 * j) - dom.q(j)))


EISENSTEIN = Entry(
    id="III.16.13",
    title="Eisenstein's continued fraction for sum (-a)^k q^{k(k+1)/2}",
    source="Notebooks III, entry 16.13; Lost Notebook I, corollary 6.2.4",
    lhs_kind=LhsKind.SINGLE_SERIES,
    backend=FORMAL,
    params=(Param("a"),),
    lhs=(("series", lambda dom, p: eisenstein_sum(dom, p["a"])),),
    cf=_eisenstein_cf,
    default_samples=3,
    fixed_points=EISENSTEIN_POINTS,
)

EISENSTEIN_DEPTH = 17  # Q_2 .. Q_17 covers D_{2n}, D_{2n+1} for n <= 8


def _eisenstein_denominators(dom, p):
    out = []
    for pair, _ in iter_convergents(_eisenstein_cf(dom, p)):
        if pair.k >= 2:
            out.append((f"Q_{pair.k} - D_{pair.k}", pair.Q - eisenstein_denominator(dom, p["a"], pair.k)))
        if pair.k == EISENSTEIN_DEPTH:
            break
    return out


EISENSTEIN_D = Entry(
    id="III.16.13.D",
    title="Closed forms for the convergent denominators of Eisenstein's fraction",
    source="Notebooks III, entry 16.13, denominators",
    lhs_kind=LhsKind.RECURRENCE,
    backend=FORMAL,
    params=(Param("a"),),
    residuals=_eisenstein_denominators,
    default_order=100,
    default_samples=3,
    fixed_points=EISENSTEIN_POINTS,
)

# G(a, b, lam) family -------------------------------------------------------

A_B_LAM = (Param("a"), Param("b"), Param("lam"))


def _big_g_ratio(dom, p):
    a, b, lam = p["a"], p["b"], p["lam"]
    return big_g_sum(dom, a, b, lam, 1, 1) / big_g_sum(dom, a, b, lam, 0, 0)


BIG_G_CFRAC1 = Entry(
    id="L.I.6.2.1",
    title="G(aq, b, lam q)/G(a, b, lam), interleaved continued fraction",
    source="Lost Notebook I, entry 6.2.1",
    lhs_kind=LhsKind.SERIES_RATIO,
    backend=FORMAL,
    params=A_B_LAM,
    lhs=(("G ratio", _big_g_ratio),),
    cf=lambda dom, p: two_step_cf(
        dom,
        lambda j: p["a"] * dom.q(j) + p["lam"] * dom.q(2 * j - 1),
        lambda j: p["b"] * dom.q(j) + p["lam"] * dom.q(2 * j),
    ),
)

BIG_G_CFRAC2 = Entry(
    id="L.I.6.4.1",
    title="G(aq, b, lam q)/G(a, b, lam), numerators lam q^k - ab q^{2k}",
    source="Lost Notebook I, entry 6.4.1",
    lhs_kind=LhsKind.SERIES_RATIO,
    backend=FORMAL,
    params=A_B_LAM,
    lhs=(("G ratio", _big_g_ratio),),
    cf=lambda dom, p: cf(
        dom, 0, (1, 1 + p["a"] * dom.q(1)),
        lambda k: (p["lam"] * dom.q(k - 1) - p["a"] * p["b"] * dom.q(2 * k - 2),
                   1 + p["a"] * dom.q(k) + p["b"] * dom.q(k - 1)),
    ),
)

BIG_G_CFRAC3 = Entry(
    id="T.6.4.1",
    title="G(aq, b, lam q)/G(a, b, lam), numerators aq + lam q^k",
    source="Lost Notebook I, theorem 6.4.1",
    lhs_kind=LhsKind.SERIES_RATIO,
    backend=NUMERIC,
    params=(Q_NUMERIC,) + A_B_LAM,
    constraints=(Constraint("|aq| < 1", lambda p: abs(p["a"] * p["q"]) < 1),),
    lhs=(("G ratio", _big_g_ratio),),
    cf=lambda dom, p: cf(
        dom, 0, (1, 1),
        lambda k: (p["a"] * dom.q(1) + p["lam"] * dom.q(k - 1),
                   1 - p["a"] * dom.q(1) + p["b"] * dom.q(k - 1)),
    ),
    default_samples=3,
)

BIG_G_LAMBDA0 = Entry(
    id="L.I.6.2.3",
    title="G(a, b, 0)/G(aq, b, 0), alternating a and b numerators",
    source="Lost Notebook I, entry 6.2.3",
    lhs_kind=LhsKind.SERIES_RATIO,
    backend=FORMAL,
    params=(Param("a"), Param("b")),
    lhs=(("G ratio", lambda dom, p: big_g_sum(dom, p["a"], p["b"], 0) / big_g_sum(dom, p["a"], p["b"], 0, 1)),),
    cf=lambda dom, p: CFrac(
        1, lambda k: ((p["a"] if k % 2 else p["b"]) * dom.q((k + 1) // 2), 1)
    ),
)

COR_6_2_9 = Entry(
    id="L.I.6.2.1.cor9",
    title="sum (-1)^k q^{3k^2+2k}(1 + q^{2k+1}) as a continued fraction",
    source="Lost Notebook I, corollary 6.2.9",
    lhs_kind=LhsKind.SINGLE_SERIES,
    backend=FORMAL,
    lhs=(("series", lambda dom, p: dom.sum(
        lambda k: (-1) ** k * (dom.q(3 * k * k + 2 * k) + dom.q(3 * k * k + 4 * k + 1)),
        lambda k: 3 * k * k + 2 * k)),),
    cf=lambda dom, p: cf(dom, 0, (1, 1), lambda k: (dom.q(2 * k - 2) - dom.q(k - 1), 1)),
    default_samples=1,
)

COR_6_2_11 = Entry(
    id="L.I.6.2.1.cor11",
    title="1 - sum q^{k(3k-1)/2}(1 - q^k) as a continued fraction with head 2/2",
    source="Lost Notebook I, corollary 6.2.11",
    lhs_kind=LhsKind.SINGLE_SERIES,
    backend=FORMAL,
    lhs=(("series", lambda dom, p: dom.const(1) - dom.sum(
        lambda k: dom.q((k + 1) * (3 * k + 2) // 2) - dom.q((k + 1) * (3 * k + 4) // 2),
        lambda k: (k + 1) * (3 * k + 2) // 2)),),
    cf=lambda dom, p: cf(dom, 0, (2, 2), lambda k: (dom.q(k - 1) + dom.q(2 * k - 3), 1)),
    default_samples=1,
)

# transformations between fractions ----------------------------------------


def _k_pair(dom, p, k):
    alpha, beta = alpha_beta(dom, k)
    left = cf(dom, 0, (1, 1), lambda j: (k + dom.q(j - 1), 1))
    right = cf(dom, 0, (1, alpha), lambda j: (dom.q(j - 1), alpha + beta * dom.q(j - 1)))
    return left, right


K_TRANSFORM = Entry(
    id="L.I.6.5.1",
    title="Transformation between k + q^j numerators and alpha + beta q^j denominators",
    source="Lost Notebook I, entry 6.5.1",
    lhs_kind=LhsKind.CF_EQUALS_CF,
    backend=NUMERIC,
    params=(Q_NUMERIC, Param("k", 0, 8)),
    constraints=(Constraint("k >= 0", lambda p: p["k"] >= 0),),
    cf=lambda dom, p: _k_pair(dom, p, p["k"]),
    fixed_points=pts(*({"q": q, "k": k} for k in (2, 6) for q in (F(1, 2), F(1, 4)))),
)

K2_TRANSFORM = Entry(
    id="L.I.6.5.2",
    title="The k = 2 case of the alpha/beta transformation",
    source="Lost Notebook I, entry 6.5.2",
    lhs_kind=LhsKind.CF_EQUALS_CF,
    backend=NUMERIC,
    params=(Q_NUMERIC,),
    cf=lambda dom, p: _k_pair(dom, p, 2),
    fixed_points=pts({"q": F(1, 2)}),
)


def _abc_pair(dom, p):
    a, b, c = p["a"], p["b"], p["c"]
    left = cf(dom, 0, (1, a + c), lambda j: (-a * b, a + b + c * dom.q(j - 1)))
    right = cf(dom, 0, (1, c - b + a), lambda j: (b * c, c - b + a * dom.q(1 - j)))
    return left, right


ABC_TRANSFORM = Entry(
    id="L.I.6.4.2",
    title="Transformation between -ab and bc numerators",
    source="Lost Notebook I, entry 6.4.2",
    lhs_kind=LhsKind.CF_EQUALS_CF,
    backend=NUMERIC,
    params=(Q_NUMERIC, Param("a", F(1, 16), 2), Param("b", F(1, 16), 2), Param("c", F(1, 16), 2)),
    constraints=(
        Constraint("a, b, c > 0", lambda p: p["a"] > 0 and p["b"] > 0 and p["c"] > 0),
        Constraint("a != b", lambda p: p["a"] != p["b"]),
    ),
    cf=_abc_pair,
    default_samples=3,
    min_pass=2,
    fixed_points=pts({"q": F(1, 3), "a": F(1, 2), "b": F(1, 3), "c": F(1, 5)},
                     {"q": F(1, 3), "a": 2, "b": F(1, 3), "c": F(3, 2)}),
)


def _odd_part_pair(dom, p):
    a, b, n = p["a"], p["b"], int(p["n"])
    left = CFrac(1, lambda k: (a, 1) if k % 2 else (b, dom.q(k // 2)), 2 * n + 1)
    right = CFrac(1 + a, lambda k: (-a * b, a + b + dom.q(k)), n)
    return left, right


ODD_PART = Entry(
    id="L.I.6.4.3",
    title="Finite fraction with alternating a/1 and b/q^j terms equals its odd part",
    source="Lost Notebook I, entry 6.4.3",
    lhs_kind=LhsKind.CF_EQUALS_CF,
    backend=EXACT,
    params=(N_EXACT, Param("a"), Param("b"), Q_EXACT),
    cf=_odd_part_pair,
    default_samples=3,
    fixed_points=pts({"a": 1, "b": 1, "q": 1}),
)

# infinite product ratios ---------------------------------------------------


def _cor2_cf(dom, a):
    return two_step_cf(dom, lambda j: a * dom.q(2 * j - 1), lambda j: dom.q(j) + a * dom.q(2 * j))


COR_6_2_2 = Entry(
    id="L.I.6.2.1.cor2",
    title="(-aq^2; q^2)_inf / (-aq; q^2)_inf as a continued fraction",
    source="Lost Notebook I, corollary 6.2.2",
    lhs_kind=LhsKind.PRODUCT_RATIO,
    backend=FORMAL,
    params=(Param("a"),),
    lhs=(("product ratio", lambda dom, p: dom.poch(-p["a"], 2, 2) / dom.poch(-p["a"], 1, 2)),),
    cf=lambda dom, p: _cor2_cf(dom, p["a"]),
    default_order=40,
    default_samples=3,
    fixed_points=pts({"a": F(1, 2)}, {"a": 1}, {"a": F(-1, 3)}),
)

V_32_21 = Entry(
    id="V.32.21",
    title="(-q^2; q^2)_inf / (-q; q^2)_inf, the a = 1 case",
    source="Notebooks V, entry 32.21; Lost Notebook I, corollary 6.2.1",
    lhs_kind=LhsKind.PRODUCT_RATIO,
    backend=FORMAL,
    lhs=(
        ("(-q^2;q^2)/(-q;q^2)", _ratio(((-1, 2, 2),), ((-1, 1, 2),))),
        ("(q;q^2)/(q^2;q^4)^2", _ratio(((1, 1, 2),), ((1, 2, 4),), 2)),
    ),
    cf=lambda dom, p: _cor2_cf(dom, 1),
    default_order=40,
    default_samples=1,
)

COR_6_2_10 = Entry(
    id="L.I.6.2.1.cor10",
    title="(-q^3; q^4)_inf / (-q; q^4)_inf as a continued fraction",
    source="Lost Notebook I, corollary 6.2.10",
    lhs_kind=LhsKind.PRODUCT_RATIO,
    backend=FORMAL,
    lhs=(("product ratio", _ratio(((-1, 3, 4),), ((-1, 1, 4),))),),
    cf=lambda dom, p: two_step_cf(dom, lambda j: dom.q(4 * j - 3), lambda j: dom.q(2 * j) + dom.q(4 * j - 1)),
    default_order=40,
    default_samples=1,
)

V_32_20 = Entry(
    id="V.32.20",
    title="(q^3; q^4)_inf / (q; q^4)_inf with denominators 1 + q^{2k}",
    source="Notebooks V, entry 32.20",
    lhs_kind=LhsKind.PRODUCT_RATIO,
    backend=FORMAL,
    lhs=(("product ratio", _ratio(((1, 3, 4),), ((1, 1, 4),))),),
    cf=lambda dom, p: cf(dom, 0, (1, 1), lambda k: (-dom.q(2 * k - 3), 1 + dom.q(2 * k - 2))),
    default_order=40,
    default_samples=1,
)

V_32_18 = Entry(
    id="V.32.18",
    title="Ramanujan's cubic continued fraction",
    source="Notebooks V, entry 32.18; Lost Notebook I, corollary 6.2.7",
    lhs_kind=LhsKind.PRODUCT_RATIO,
    backend=FORMAL,
    lhs=(
        ("(q,q^5;q^6)/(q^3;q^6)^2", _ratio(((1, 1, 6), (1, 5, 6)), ((1, 3, 6),), 2)),
        ("(q;q^2)/(q^3;q^6)^3", _ratio(((1, 1, 2),), ((1, 3, 6),), 3)),
    ),
    cf=lambda dom, p: cf(dom, 0, (1, 1), lambda k: (dom.q(k - 1) + dom.q(2 * k - 2), 1)),
    default_order=40,
    default_samples=1,
)

V_32_22 = Entry(
    id="V.32.22",
    title="Ramanujan-Gollnitz-Gordon continued fraction",
    source="Notebooks V, entries 32.22 and 32.23; Lost Notebook I, corollary 6.2.8",
    lhs_kind=LhsKind.PRODUCT_RATIO,
    backend=FORMAL,
    lhs=(("product ratio", _ratio(((1, 1, 8), (1, 7, 8)), ((1, 3, 8), (1, 5, 8)))),),
    cf=lambda dom, p: two_step_cf(dom, lambda j: dom.q(2 * j - 1) + dom.q(4 * j - 2), lambda j: dom.q(4 * j)),
    default_order=40,
    default_samples=1,
)

V_32_19 = Entry(
    id="V.32.19",
    title="(q^2; q^3)_inf / (q; q^3)_inf with denominators 1 + q^k",
    source="Notebooks V, entry 32.19",
    lhs_kind=LhsKind.PRODUCT_RATIO,
    backend=FORMAL,
    lhs=(("product ratio", _ratio(((1, 2, 3),), ((1, 1, 3),))),),
    cf=lambda dom, p: cf(dom, 0, (1, 1), lambda k: (-dom.q(2 * k - 3), 1 + dom.q(k - 1))),
    default_order=40,
    default_samples=1,
)

# q-binomial theorem and its odd/even splits ---------------------------------

Q_BINOMIAL = Entry(
    id="III.16.2",
    title="q-binomial theorem: sum (b/a;q)_k a^k/(q;q)_k = (b;q)_inf/(a;q)_inf",
    source="Notebooks III, entry 16.2",
    lhs_kind=LhsKind.SERIES_RATIO,
    backend=FORMAL,
    params=(Param("a", -1, 1), Param("b")),
    constraints=(Constraint("|a| < 1", lambda p: abs(p["a"]) < 1),),
    lhs=(
        ("q-binomial sum", lambda dom, p: dom.binomial_series(p["a"], p["b"])),
        ("product ratio", lambda dom, p: dom.poch(p["b"]) / dom.poch(p["a"])),
    ),
    default_order=20,
    default_samples=10,
)


def _entry11_products(dom, p):
    a, b = p["a"], p["b"]
    plus = dom.poch(-a) * dom.poch(b)
    minus = dom.poch(a) * dom.poch(-b)
    return (plus - minus) / (plus + minus)


def _entry11_cf(dom, p):
    a, b = p["a"], p["b"]
    return cf(
        dom, 0, (a - b, 1 - dom.q(1)),
        lambda k: (dom.q(k - 2) * (a - b * dom.q(k - 1)) * (a * dom.q(k - 1) - b), 1 - dom.q(2 * k - 1)),
    )


ENTRY_11 = Entry(
    id="III.16.11",
    title="Difference over sum of two product pairs, odd and even parts of the q-binomial sum",
    source="Notebooks III, entry 16.11",
    lhs_kind=LhsKind.PRODUCT_RATIO,
    backend=NUMERIC,
    params=(Q_NUMERIC, Param("a", F(-1, 2), F(1, 2)), Param("b", F(-1, 2), F(1, 2))),
    constraints=(Constraint("|a| < 1", lambda p: abs(p["a"]) < 1),),
    lhs=(
        ("product difference ratio", _entry11_products),
        ("odd/even q-binomial terms", lambda dom, p: dom.binomial_series(p["a"], p["b"], parity=1)
         / dom.binomial_series(p["a"], p["b"], parity=0)),
    ),
    cf=_entry11_cf,
    formal_cf=True,
    formal_alt_order=25,
    fixed_points=pts({"q": F(1, 4), "a": F(1, 3), "b": F(1, 3)}),
)


def _entry12_products(dom, p):
    a2, b2 = p["a"] ** 2, p["b"] ** 2
    return (dom.poch(a2, 3, 4) * dom.poch(b2, 3, 4)) / (dom.poch(a2, 1, 4) * dom.poch(b2, 1, 4))


def _entry12_sums(dom, p):
    a2, b2 = p["a"] ** 2, p["b"] ** 2
    top = dom.binomial_series(a2, b2, a_shift=1, b_shift=3, base=4)
    bottom = dom.binomial_series(a2, b2, a_shift=3, b_shift=1, base=4)
    return top / bottom


def _entry12_cf(dom, p):
    a, b = p["a"], p["b"]
    return cf(
        dom, 0, (1, 1 - a * b),
        lambda k: ((a - b * dom.q(2 * k - 3)) * (b - a * dom.q(2 * k - 3)), (1 - a * b) * (1 + dom.q(2 * k - 2))),
    )


ENTRY_12 = Entry(
    id="III.16.12",
    title="Ratio of products with base q^4, denominators (1 - ab)(1 + q^{2k})",
    source="Notebooks III, entry 16.12",
    lhs_kind=LhsKind.PRODUCT_RATIO,
    backend=NUMERIC,
    params=(Q_NUMERIC, Param("a", F(-3, 2), F(3, 2)), Param("b", F(-3, 2), F(3, 2))),
    constraints=(
        Constraint("|ab| < 1", lambda p: abs(p["a"] * p["b"]) < 1),
        Constraint("|a^2 q| < 1", lambda p: abs(p["a"] ** 2 * p["q"]) < 1),
    ),
    lhs=(("product ratio", _entry12_products), ("ratio of q-binomial sums", _entry12_sums)),
    cf=_entry12_cf,
    formal_alt_order=25,
    fixed_points=pts({"q": F(1, 4), "a": F(1, 3), "b": F(1, 5)}),
)

ENTRIES: tuple[Entry, ...] = (
    RR, SPECIAL_PLUS, SPECIAL_MINUS,
    G_CFRAC1, G_CFRAC2, G_CFRAC3, G_RECURRENCE, RR_LAMBDA, MU_CONVERGENTS, EISENSTEIN, EISENSTEIN_D,
    BIG_G_CFRAC1, BIG_G_CFRAC2, BIG_G_CFRAC3, BIG_G_LAMBDA0, COR_6_2_9, COR_6_2_11,
    K_TRANSFORM, K2_TRANSFORM, ABC_TRANSFORM, ODD_PART,
    COR_6_2_2, V_32_21, COR_6_2_10, V_32_20, V_32_18, V_32_22, V_32_19,
    Q_BINOMIAL, ENTRY_11, ENTRY_12,
)
