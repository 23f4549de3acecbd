"""Orthogonal-type polynomials attached to a C-fraction.

``r_k`` satisfies ``r_k = x^{b_{k-1}-b_{k-2}} r_{k-1} - a_{k-2} r_{k-2}`` with
``r_0 = 1, r_1 = x``.  With ``L(x^n) = f_n`` one has ``L(r_k x^n) = 0`` for
``n < b_k`` and ``L(r_k x^{b_k}) = a_0 ... a_{k-1}``.

``p_n`` is the bordered Hankel determinant whose last column is
``1, x, ..., x^n``; up to the factor ``d(B)`` it reproduces ``r_k``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cfrac import BSeq, CFrac, cfrac_expand, numerator_getter
from .errors import IndexOutOfRange, InsufficientOrder
from .exactalg import Scalar, det_fraction_free
from .hankel import hankel_det
from .series import QQ, PowerSeries, XPoly

__all__ = [
    "r_poly",
    "r_polys",
    "fibonacci_poly",
    "MomentFunctional",
    "lambda_apply",
    "p_poly",
    "p_poly_cross",
    "PRelation",
    "p_relations",
]


def r_polys(b: BSeq, numerators, k: int) -> list:
    """``[r_0, ..., r_k]``."""
    b.require_valid()
    if k < 0 or k > b.K + 1:
        raise IndexOutOfRange(f"k={k} outside 0..{b.K + 1}")
    a = numerator_getter(numerators)
    ring = a(0).ring
    r = [XPoly.const(ring, 1), XPoly.x(ring)]
    for j in range(2, k + 1):
        r.append(r[j - 1].shift(b.at(j - 1) - b.at(j - 2)) - r[j - 2] * a(j - 2))
    return r[: k + 1]


def r_poly(b: BSeq, numerators, k: int) -> XPoly:
    return r_polys(b, numerators, k)[k]


def fibonacci_poly(n: int, ring=QQ) -> XPoly:
    """``Fib_n = x Fib_{n-1} - Fib_{n-2}``, ``Fib_0 = 0``, ``Fib_1 = 1``."""
    if n < 0:
        raise ValueError("n >= 0 required")
    prev, cur = XPoly(ring, ()), XPoly.const(ring, 1)
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, cur.shift(1) - prev
    return cur


@dataclass(frozen=True)
class MomentFunctional:
    """Linear functional with ``L(x^n) = moments[n]``."""

    moments: PowerSeries

    def __call__(self, p: XPoly, shift: int = 0) -> Scalar:
        return lambda_apply(self, p, shift)


def lambda_apply(L: MomentFunctional, p: XPoly, shift: int = 0) -> Scalar:
    """``L(p(x) x^shift) = sum_j p_j f_{j+shift}``."""
    f = L.moments
    if p.degree + shift > f.order:
        raise InsufficientOrder(f"degree {p.degree} + shift {shift} exceeds moment order {f.order}")
    acc = f.ring.zero()
    for j, c in enumerate(p.coeffs):
        if c:
            acc = acc + c * f[j + shift]
    return acc


def _check_order(s: PowerSeries, n: int):
    if n < 0:
        raise ValueError("n >= 0 required")
    if 2 * n - 1 > s.order:
        raise InsufficientOrder(f"p_{n} needs coefficients up to {2 * n - 1}, series order is {s.order}")


def p_poly(s: PowerSeries, n: int) -> XPoly:
    """Bordered determinant expanded along its x-column.

    Rows ``i = 0..n`` read ``f_i .. f_{i+n-1}, x^i``; the cofactor of ``x^i``
    is the Hankel-type minor without row ``i``.
    """
    _check_order(s, n)
    if n == 0:
        return XPoly.const(s.ring, 1)
    rows = [[s[i + j] for j in range(n)] for i in range(n + 1)]
    coeffs = []
    for i in range(n + 1):
        minor = det_fraction_free(rows[:i] + rows[i + 1 :])
        coeffs.append(minor if (i + n) % 2 == 0 else -minor)
    return XPoly(s.ring, tuple(coeffs))


def p_poly_cross(s: PowerSeries, n: int) -> XPoly:
    """``det(f_{i+j} x - f_{i+j+1})_{i,j=0}^{n-1}`` with ``x`` adjoined to the ring."""
    _check_order(s, n)
    name = "x"
    while name in s.ring:
        name += "x"
    big = s.ring.extend(name)
    x = big.gen(name)
    m = [[s[i + j].embed(big) * x - s[i + j + 1].embed(big) for j in range(n)] for i in range(n)]
    parts = det_fraction_free(m).coefficients_in(name, s.ring) if n else {0: s.ring.one()}
    deg = max(parts) if parts else -1
    return XPoly(s.ring, tuple(parts.get(j, s.ring.zero()) for j in range(deg + 1)))


@dataclass(frozen=True)
class PRelation:
    """How ``p_m`` relates to the polynomials ``r_k``.

    ``kind`` is ``"unit"`` (``p_m / d(B) = r_k`` with ``m = B + 1``), ``"zero"``
    or ``"boundary"`` (``p_m = factor * p_{B+1}`` with ``m`` the next value
    after ``B``).  ``holds`` records whether the direct computation agreed.
    """

    m: int
    kind: str
    B: int
    k: int
    factor: Scalar | None
    holds: bool


def p_relations(b: BSeq, numerators, upto: int) -> list:
    """Classify ``p_0 .. p_upto`` and check each relation by direct computation.

    ``upto`` may not exceed ``b_K``; the prefix must determine ``f`` up to
    ``2*upto - 1``, i.e. ``2*upto - 1 <= b_K + b_{K-1} + 1``.
    """
    b.require_valid()
    bK = b.at(b.K)
    if upto > bK:
        raise IndexOutOfRange(f"classification beyond b_K = {bK} needs a longer sequence")
    known = bK + b.at(b.K - 1) + 1 if b.K >= 1 else 0
    if 2 * upto - 1 > known:
        raise InsufficientOrder(f"p_{upto} needs f up to {2 * upto - 1}; the prefix fixes f up to {known}")
    a = numerator_getter(numerators)
    cf = CFrac.from_bseq(b, a)
    ring = cf.ring
    f = cfrac_expand(cf, max(2 * upto - 1, 0))
    r = r_polys(b, a, b.K + 1)
    p_cache: dict = {}

    def p(m):
        if m not in p_cache:
            p_cache[m] = p_poly(f, m)
        return p_cache[m]

    levels = b.distinct()  # (value, multiplicity, k) with value = b_{k-1}
    out = []
    for idx, (B, _mult, k) in enumerate(levels):
        nxt = levels[idx + 1][0] if idx + 1 < len(levels) else None
        start = B + 1
        if start > upto:
            break
        d = hankel_det(f, 0, B)
        unit = p(start)
        out.append(PRelation(start, "unit", B, k, d, unit == r[k] * d))
        if nxt is None:
            continue
        for m in range(start + 1, min(nxt, upto + 1)):
            out.append(PRelation(m, "zero", B, k, None, p(m).is_zero()))
        if nxt >= start + 1 and nxt <= upto:
            mag = ring.one()
            for j in range(k):
                mag = mag * a(j)
            mag = mag ** (nxt - B - 1)
            target = p(nxt)
            if target == unit * mag:
                factor, ok = mag, True
            elif target == unit * (-mag):
                factor, ok = -mag, True
            else:
                factor, ok = None, False
            out.append(PRelation(nxt, "boundary", B, k, factor, ok))
    return out
