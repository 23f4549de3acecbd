import random
from fractions import Fraction
from math import comb

import pytest

from hankelfrac.catalog import bseq_family, numerator_rule, qbinomial
from hankelfrac.cfrac import BSeq, CFrac, cfrac_expand, convergents
from hankelfrac.errors import IndexOutOfRange, InsufficientOrder
from hankelfrac.exactalg import Ring
from hankelfrac.hankel import hankel_det
from hankelfrac.orthopoly import (
    MomentFunctional,
    fibonacci_poly,
    lambda_apply,
    p_poly,
    p_poly_cross,
    r_poly,
    r_polys,
    p_relations,
)
from hankelfrac.series import QQ, PowerSeries, XPoly

from oracles import catalan

IDENTITY = BSeq(tuple(range(-1, 12)))
WORKED = BSeq((-1, 0, 0, 3, 3, 7, 8, 9))


def xp(*coeffs, ring=QQ):
    return XPoly.from_values(coeffs, ring)


def catalan_at_x2(order):
    return PowerSeries.from_values([catalan(n // 2) if n % 2 == 0 else 0 for n in range(order + 1)])


def test_r_initial_values():
    R = Ring.standard(4)
    assert r_poly(IDENTITY, R.a, 0) == XPoly.const(R, 1)
    assert r_poly(IDENTITY, R.a, 1) == XPoly.x(R)
    with pytest.raises(IndexOutOfRange):
        r_poly(BSeq((-1, 0, 1)), [1, 1], 4)


def test_r_identity_all_ones_is_fibonacci():
    assert r_poly(IDENTITY, [1] * 12, 4) == xp(1, 0, -3, 0, 1)
    for k in range(9):
        assert r_poly(IDENTITY, [1] * 12, k) == fibonacci_poly(k + 1)


def test_r_degrees():
    R = Ring.standard(12)
    for b in (IDENTITY, WORKED, bseq_family("wide-motzkin", 9)):
        for k, r in enumerate(r_polys(b, R.a, b.K + 1)):
            if k:
                assert r.degree == b.at(k - 1) + 1


def test_fibonacci_values():
    assert fibonacci_poly(0).is_zero()
    assert fibonacci_poly(1) == xp(1)
    assert fibonacci_poly(4) == xp(0, -2, 0, 1)
    for n in range(1, 13):
        want = [0] * n
        for k in range((n - 1) // 2 + 1):
            want[n - 1 - 2 * k] += (-1) ** k * comb(n - 1 - k, k)
        assert fibonacci_poly(n) == xp(*want)


def test_lambda_examples():
    f = catalan_at_x2(10)
    L = MomentFunctional(f)
    for n in range(8):
        assert L(xp(1), n) == f[n]
    assert lambda_apply(L, fibonacci_poly(4), 2) == 0
    with pytest.raises(InsufficientOrder):
        L(fibonacci_poly(8), 5)


def _prod(R, k):
    out = R.one()
    for j in range(k):
        out = out * R.a(j)
    return out


CORPUS = [
    IDENTITY,
    bseq_family("doubled", 10),
    bseq_family("motzkin", 9),
    bseq_family("wide-motzkin", 8),
    bseq_family("stretched", 7, 3),
    bseq_family("delayed", 7, 2),
    bseq_family("periodic-122", 8),
    WORKED,
]


@pytest.mark.parametrize("b", CORPUS, ids=str)
def test_orthogonality_and_normalization(b):
    R = Ring.standard(b.K)
    cf = CFrac.from_bseq(b, R.a, R)
    L = MomentFunctional(cfrac_expand(cf, cf.exact_order()))
    for k, r in enumerate(r_polys(b, R.a, min(5, b.K))):
        for n in range(b.at(k)):
            assert L(r, n).is_zero()
        assert L(r, b.at(k)) == _prod(R, k)


@pytest.mark.parametrize("b", CORPUS, ids=str)
def test_reversal_of_convergent_denominators(b):
    R = Ring.standard(b.K)
    rs = r_polys(b, R.a, min(8, b.K + 1))
    for k, r in enumerate(rs):
        _, B = convergents(b, R.a, k)
        assert r == B.reverse(b.at(k - 1) + 1)


def test_constant_terms_for_identity_sequence():
    R = Ring.standard(11)
    rs = r_polys(IDENTITY, R.a, 10)
    for k in range(5):
        assert rs[2 * k + 1].coeff(0).is_zero()
        want = R.const((-1) ** k)
        for j in range(k):
            want = want * R.a(2 * j)
        assert rs[2 * k].coeff(0) == want


def test_contracted_recurrence_doubled():
    R = Ring.standard(10)
    b = bseq_family("doubled", 10)
    r = r_polys(b, R.a, 10)
    a = R.a
    x = XPoly.x(R)
    P = [r[2 * n] for n in range(6)]
    assert P[1] == x - a(0)
    for n in range(2, 6):
        rhs = (x - a(2 * n - 2) - a(2 * n - 3)) * P[n - 1] - P[n - 2] * (a(2 * n - 4) * a(2 * n - 3))
        assert P[n] == rhs


@pytest.mark.parametrize("family, m, m2", [("motzkin", 1, 1), ("wide-motzkin", 2, 3)])
def test_contracted_recurrence_three_periodic(family, m, m2):
    R = Ring.standard(14)
    b = bseq_family(family, 13)
    r = r_polys(b, R.a, 14)
    a = R.a
    P = {}
    for n in range(5):
        P[2 * n] = r[3 * n]
        P[2 * n + 1] = r[3 * n + 2]
    for n in range(1, 5):
        assert P[2 * n + 1] == (XPoly.x(R, m) - a(3 * n)) * P[2 * n] - P[2 * n - 1] * a(3 * n - 1)
        assert P[2 * n] == (XPoly.x(R, m2) - a(3 * n - 2)) * P[2 * n - 1] - P[2 * n - 2] * (
            a(3 * n - 3) * a(3 * n - 2)
        )


@pytest.mark.parametrize("m", [1, 3, 4])
def test_coefficient_transport_between_powers(m):
    R = Ring.standard(10)
    base = r_polys(bseq_family("stretched", 9, 2), R.a, 9)
    other = r_polys(bseq_family("stretched", 9, m), R.a, 9)
    for k in range(5):
        u = base[2 * k]
        assert other[2 * k] == XPoly(R, tuple(_spread(u.coeffs[0::2], m, R)))
        if k:
            v = base[2 * k - 1]
            assert other[2 * k - 1] == XPoly(R, tuple(_spread(v.coeffs[1::2], m, R))).shift(1)


def _spread(coeffs, m, R):
    out = [R.zero()] * (m * (len(coeffs) - 1) + 1)
    for j, c in enumerate(coeffs):
        out[m * j] = c
    return out


@pytest.mark.parametrize("k", range(5))
def test_eisenstein_polynomials(k):
    R = Ring(("q",))
    q = R.gen("q")
    b = bseq_family("doubled", 2 * k + 1)
    r = r_polys(b, numerator_rule("eisenstein", R), 2 * k + 1)
    even = [R.zero()] * (k + 1)
    odd = [R.zero()] * (k + 2)
    for j in range(k + 1):
        even[k - j] = (-1) ** j * q ** (k * j) * qbinomial(k, j, R)
        odd[k + 1 - j] = (-1) ** j * qbinomial(k, j, R) * q ** (j * (k + 1))
    assert r[2 * k] == XPoly(R, tuple(even))
    assert r[2 * k + 1] == XPoly(R, tuple(odd))


def test_shifted_determinant_from_p_at_zero():
    R = Ring.standard(9)
    f = cfrac_expand(CFrac.from_bseq(IDENTITY, R.a, R), 14)
    r = r_polys(IDENTITY, R.a, 8)
    for k in range(7):
        d1 = hankel_det(f, 1, k)
        assert d1 == p_poly(f, k + 1).coeff(0)
        assert d1 == hankel_det(f, 0, k) * r[k + 1].coeff(0)


def test_p_poly_small_cases():
    s = PowerSeries.from_values([1, 3, 5, 7])
    assert p_poly(s, 0) == xp(1)
    assert p_poly(s, 1) == xp(-3, 1)
    with pytest.raises(InsufficientOrder):
        p_poly(s, 3)


def test_p_poly_worked_example():
    R = Ring.standard(6)
    a = R.a
    f = cfrac_expand(CFrac.from_bseq(WORKED, R.a, R), 5)
    want = (XPoly.x(R) - a(0)) * (-((a(0) * a(1)) ** 2))
    assert p_poly(f, 3) == want
    assert p_poly_cross(f, 3) == want


def test_p_forms_agree_on_random_series():
    rng = random.Random(6)
    for _ in range(20):
        s = PowerSeries.from_values([1] + [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(8)])
        for n in range(5):
            assert p_poly(s, n) == p_poly_cross(s, n)
    R = Ring(("a0", "x"))
    s = PowerSeries(R, tuple(R.gen("a0") ** j for j in range(8)))
    for n in range(4):
        assert p_poly(s, n) == p_poly_cross(s, n)


def test_p_relations_worked_classification():
    R = Ring.standard(6)
    a = R.a
    rel = {r.m: r for r in p_relations(WORKED, R.a, 8)}
    assert sorted(rel) == list(range(9))
    assert all(r.holds for r in rel.values())
    assert (rel[0].kind, rel[0].B, rel[0].k) == ("unit", -1, 0)
    assert [(m, rel[m].k) for m in (1, 4, 8)] == [(1, 2), (4, 4), (8, 5)]
    assert all(rel[m].kind == "unit" for m in (1, 4, 8))
    assert all(rel[m].kind == "zero" for m in (2, 5, 6))
    assert rel[3].kind == rel[7].kind == "boundary"
    assert rel[3].factor == -((a(0) * a(1)) ** 2)
    assert rel[7].factor == (a(0) * a(1) * a(2) * a(3)) ** 3


def test_p_relations_direct_values():
    R = Ring.standard(6)
    a = R.a
    f = cfrac_expand(CFrac.from_bseq(WORKED, R.a, R), 15)
    r = r_polys(WORKED, R.a, 5)
    d3 = hankel_det(f, 0, 3)
    assert p_poly(f, 1) == r[2]
    assert p_poly(f, 3) == r[2] * (-((a(0) * a(1)) ** 2))
    assert p_poly(f, 7) == r[4] * ((a(0) * a(1) * a(2) * a(3)) ** 3 * d3)
    for m in (2, 5, 6):
        assert p_poly(f, m).is_zero()


def test_p_relations_random_sequences():
    from hankelfrac.closedform import random_bseq

    rng = random.Random(4)
    for _ in range(8):
        b = random_bseq(rng, 7, target=12)
        if b.K < 2:
            continue
        R = Ring.standard(b.K)
        known = b.at(b.K) + b.at(b.K - 1) + 1
        upto = min(b.at(b.K), (known + 1) // 2, 6)
        assert all(r.holds for r in p_relations(b, R.a, upto))


def test_p_relations_bounds():
    with pytest.raises(IndexOutOfRange):
        p_relations(BSeq((-1, 0, 1)), [1, 1], 3)
