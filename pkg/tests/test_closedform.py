import random

import pytest

from hankelfrac.catalog import bseq_family, builtin_series
from hankelfrac.cfrac import BSeq, CFrac, cfrac_expand
from hankelfrac.closedform import (
    SignedMonomial,
    buslaev_d,
    family_formula,
    predicted_transform,
    random_bseq,
    step_recursion_check,
    transform_support,
)
from hankelfrac.errors import (
    IndexOutOfRange,
    InsufficientLength,
    InvalidBSeq,
    ParamOutOfRange,
    UnsupportedFamily,
)
from hankelfrac.exactalg import Ring
from hankelfrac.hankel import hankel_det, hankel_transform

from oracles import det_laplace, series_from_fraction_naive

IDENTITY = BSeq(tuple(range(-1, 11)))
DOUBLED = bseq_family("doubled", 12)


def brute(powers, nums, offset, upto):
    f = series_from_fraction_naive(powers, nums, 2 * upto + offset)
    out = []
    for n in range(upto + 1):
        rows = [[f[i + j + offset] if i + j + offset >= 0 else 0 for j in range(n + 1)] for i in range(n + 1)]
        out.append(det_laplace(rows))
    return out


def test_identity_sequence_exponents():
    for k in range(8):
        d = buslaev_d(IDENTITY, k)
        assert d.sign == 1
        assert d.exponent_map == {j: k - j for j in range(k)}


def test_doubled_sequence_pairs():
    for n in range(1, 5):
        d = buslaev_d(DOUBLED, 2 * n)
        assert d.sign == 1
        assert d.exponent_map == {j: n - j // 2 for j in range(2 * n)}
    assert str(buslaev_d(DOUBLED, 4)) == "(a0*a1)^2*(a2*a3)^1"


def test_k_zero_is_one():
    d = buslaev_d(IDENTITY, 0)
    assert d.sign == 1 and d.exponents == ()
    assert str(d) == "1"
    assert d.to_scalar(Ring.standard(1)) == 1


def test_three_periodic_transform_list():
    b = bseq_family("motzkin", 9)
    R = Ring.standard(9)
    a = R.gens()
    got = [d.to_scalar(R) for d in predicted_transform(b, 4)]
    want = [
        R.one(),
        a[0] * a[1],
        (a[0] * a[1]) ** 2 * a[2],
        (a[0] * a[1]) ** 3 * a[2] ** 2 * (a[3] * a[4]),
        (a[0] * a[1]) ** 4 * a[2] ** 3 * (a[3] * a[4]) ** 2 * a[5],
    ]
    assert got == want
    assert str(predicted_transform(b, 3)[3]) == "(a0*a1)^3*a2^2*(a3*a4)^1"


def test_period_three_powers_transform_matches_oracle():
    # powers 1, 2, 2 repeating; values frozen from the Laplace-expansion oracle
    b = bseq_family("periodic-122", 9)
    R = Ring.standard(9)
    a = R.gens()
    got = [d.to_scalar(R) for d in predicted_transform(b, 6)]
    want = [
        R.one(),
        R.zero(),
        -(a[0] ** 2) * a[1] ** 2,
        -(a[0] ** 3) * a[1] ** 3 * a[2] * a[3],
        -(a[0] ** 4) * a[1] ** 4 * a[2] ** 2 * a[3] ** 2 * a[4],
        -(a[0] ** 5) * a[1] ** 5 * a[2] ** 3 * a[3] ** 3 * a[4] ** 2 * a[5],
        R.zero(),
    ]
    assert got == want
    f = cfrac_expand(CFrac.from_bseq(b, R.a, R), 12)
    assert hankel_transform(f, 0, 6) == want


def test_errors():
    with pytest.raises(IndexOutOfRange):
        buslaev_d(IDENTITY, IDENTITY.K + 1)
    with pytest.raises(InvalidBSeq):
        buslaev_d(BSeq((-1, 0, 0, 0)), 1)
    with pytest.raises(InsufficientLength):
        transform_support(BSeq((-1, 0, 1)), 5)


def test_support_examples():
    assert transform_support(IDENTITY, 5) == {0, 1, 2, 3, 4, 5}
    assert transform_support(bseq_family("delayed", 4, 3), 6) == {0, 4, 5, 6}
    assert transform_support(bseq_family("periodic-122", 12), 10) == {0, 2, 3, 4, 5, 7, 8, 9, 10}


def test_signed_monomial_rules():
    with pytest.raises(ValueError):
        SignedMonomial(2, ())
    with pytest.raises(ValueError):
        SignedMonomial(0, ((0, 1),))
    assert str(SignedMonomial.zero()) == "0"
    assert str(SignedMonomial(-1, ((0, 2), (3, 1)))) == "-a0^2*a3^1"


def test_step_recursion_examples():
    R = Ring.standard(10)
    for b in (IDENTITY, DOUBLED, bseq_family("periodic-122", 8)):
        for n in range(1, 3):
            rep = step_recursion_check(b, R.a, 0, n)
            assert rep.holds and rep.shift == 1 - (b.at(1) - b.at(0))
    rep = step_recursion_check(IDENTITY, R.a, 2, 2)
    assert rep.holds and rep.lhs
    for k in range(4):
        rep = step_recursion_check(bseq_family("motzkin", 8), R.a, k, 0)
        assert rep.rhs == rep.lhs == buslaev_d(bseq_family("motzkin", 8), k).to_scalar(R)


def test_step_recursion_random():
    rng = random.Random(12)
    R = Ring.standard(12)
    for _ in range(10):
        b = random_bseq(rng, 9)
        if b.K < 2:
            continue
        exact = b.at(b.K) + b.at(b.K - 1) + 1
        ks = [k for k in range(b.K) if 2 * (1 + b.at(k)) <= exact]
        assert step_recursion_check(b, R.a, rng.choice(ks), 1).holds


def test_random_bseq_is_valid_and_bounded():
    rng = random.Random(0)
    seen_jump = seen_double = False
    for _ in range(200):
        b = random_bseq(rng)
        assert b.is_valid and b.at(b.K) <= 12
        steps = [b.at(k) - b.at(k - 1) for k in range(1, b.K + 1)]
        seen_jump |= any(s >= 2 for s in steps)
        seen_double |= 0 in steps
    assert seen_jump and seen_double
    b = random_bseq(random.Random(1), 12, target=10)
    assert b.at(b.K) + b.at(b.K - 1) >= 10 or b.at(b.K) + 3 > 12


def test_sign_law_on_random_units():
    rng = random.Random(7)
    for _ in range(15):
        b = random_bseq(rng, 8, target=10)
        if b.K < 1:
            continue
        signs = [rng.choice([-1, 1]) for _ in range(b.K + 1)]
        cf = CFrac.from_bseq(b, signs)
        N = min(cf.exact_order() // 2, b.at(b.K))
        for v in hankel_transform(cfrac_expand(cf, 2 * N), 0, N):
            assert v.constant() in (-1, 0, 1)


# -- families ---------------------------------------------------------------


def test_family_examples():
    ones = lambda n: 1
    assert family_formula("unit-power-d2", 3, numerators=ones) == 5
    assert family_formula("stretched-catalan-d", 2, m=3, scale=1) == -1
    for n in range(6):
        assert family_formula("gapped-catalan", n + 3, numerators=ones) == -(n + 2)
    R = Ring.standard(6)
    assert family_formula("delayed-start", 3, m=2, numerators=R.a) == -(R.a(0) ** 3)


def test_family_errors():
    with pytest.raises(UnsupportedFamily):
        family_formula("no-such", 1, numerators=[1])
    with pytest.raises(ParamOutOfRange):
        family_formula("stretched-catalan-d", 1, scale=1)
    with pytest.raises(ParamOutOfRange):
        family_formula("unit-power-d", 1)
    with pytest.raises(ParamOutOfRange):
        family_formula("unit-power-d", -1, numerators=[1])


def test_even_power_d1_against_brute_force():
    R = Ring.standard(10)
    got = [family_formula("even-power-d1", n, numerators=R.a) for n in range(7)]
    assert got == brute([2] * 10, R.gens(), 1, 6)


def test_unit_power_families_against_brute_force():
    R = Ring.standard(13)
    for offset, fam in ((0, "unit-power-d"), (1, "unit-power-d1"), (2, "unit-power-d2")):
        got = [family_formula(fam, n, numerators=R.a) for n in range(5)]
        assert got == brute([1] * 14, R.gens(), offset, 4), fam


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_stretched_catalan_against_brute_force(m):
    R = Ring(("a",))
    a = R.gen("a")
    upto = 3 * m + 1
    f = builtin_series("catalan-stretched", 2 * upto + 1, m, a)
    for n in range(upto + 1):
        assert family_formula("stretched-catalan-d", n, m=m, scale=a) == hankel_det(f, 0, n)
        assert family_formula("stretched-catalan-d1", n, m=m, scale=a) == hankel_det(f, 1, n)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_stretched_catalan_first_block(m):
    # det(f_{i+j+1}) of size m; frozen from brute force: a, -a^2, -a^3, a^4
    R = Ring(("a",))
    a = R.gen("a")
    want = {1: a, 2: -(a**2), 3: -(a**3), 4: a**4}[m]
    f = builtin_series("catalan-stretched", 2 * m, m, a)
    assert hankel_det(f, 1, m - 1) == want


@pytest.mark.parametrize("m", [1, 2, 3])
def test_delayed_start_against_brute_force(m):
    R = Ring.standard(10)
    b = bseq_family("delayed", 9, m)
    powers = [b.at(n + 1) - b.at(n - 1) for n in range(9)]
    got = [family_formula("delayed-start", n, m=m, numerators=R.a) for n in range(m + 4)]
    assert got == brute(powers, R.gens(), 0, m + 3)


def test_gapped_catalan_symbolic():
    R = Ring.standard(14)
    got = [family_formula("gapped-catalan", n, numerators=R.a) for n in range(6)]
    assert got == brute([1, 2] + [1] * 12, R.gens(), 0, 5)


# unit-power shapes get expensive symbolically, so they stop earlier
HAND_PICKED = [
    ("identity", None, 10),
    ("doubled", None, 7),
    ("motzkin", None, 8),
    ("wide-motzkin", None, 10),
    ("periodic-122", None, 10),
    ("stretched", 1, 7),
    ("stretched", 2, 10),
    ("stretched", 3, 10),
    ("stretched", 4, 10),
    ("delayed", 1, 10),
    ("delayed", 2, 10),
    ("delayed", 3, 10),
]


@pytest.mark.parametrize("name, m, N", HAND_PICKED)
def test_closed_form_equals_brute_force_on_named_shapes(name, m, N):
    K = 1
    while bseq_family(name, K, m).at(K) + bseq_family(name, K, m).at(K - 1) + 1 < 2 * N:
        K += 1
    b = bseq_family(name, K, m)
    R = Ring.standard(b.K)
    f = cfrac_expand(CFrac.from_bseq(b, R.a, R), 2 * N)
    assert hankel_transform(f, 0, N) == [d.to_scalar(R) for d in predicted_transform(b, N)]
