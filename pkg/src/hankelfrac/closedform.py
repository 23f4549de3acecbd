"""Closed-form Hankel determinants for C-fractions built from an index sequence.

For a valid ``b`` every nonzero Hankel determinant sits at some ``n = b_k`` and is
a signed monomial in the numerators::

    d(b_k) = (-1)^{sum_{j=1..k} C(b_j - b_{j-1}, 2)} * prod_{j<k} a_j^{b_k - b_j}

This module evaluates that formula, the support of the transform, the
level-by-level reduction used to prove it, and several special families.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb

from .cfrac import BSeq, CFrac, cfrac_expand, numerator_getter
from .errors import IndexOutOfRange, InsufficientLength, ParamOutOfRange, UnsupportedFamily
from .exactalg import Ring, Scalar
from .hankel import hankel_det

__all__ = [
    "SignedMonomial",
    "InsufficientLength",
    "buslaev_d",
    "predicted_transform",
    "transform_support",
    "step_recursion_check",
    "StepReport",
    "family_formula",
    "FAMILIES",
    "random_bseq",
]


def _sgn(e: int) -> int:
    return -1 if e % 2 else 1


@dataclass(frozen=True)
class SignedMonomial:
    """``sign * prod a_j^{e_j}``; ``groups`` only affects printing.

    ``groups`` is a tuple of index tuples; indices in one group share an
    exponent and print as ``(a0*a1)^e``.
    """

    sign: int
    exponents: tuple  # ((j, e_j), ...) with e_j > 0, sorted by j
    groups: tuple = ()

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or 1")
        if self.sign == 0 and self.exponents:
            raise ValueError("the zero monomial carries no exponents")

    @classmethod
    def zero(cls) -> "SignedMonomial":
        return cls(0, ())

    @property
    def exponent_map(self) -> dict:
        return dict(self.exponents)

    def to_scalar(self, ring: Ring) -> Scalar:
        if self.sign == 0:
            return ring.zero()
        return ring.monomial({f"a{j}": e for j, e in self.exponents}, self.sign)

    def __str__(self):
        if self.sign == 0:
            return "0"
        exps = self.exponent_map
        grouped = {j: g for g in self.groups for j in g}
        parts, seen = [], set()
        for j, e in self.exponents:
            if j in seen:
                continue
            g = grouped.get(j, (j,))
            g = tuple(i for i in g if i in exps)
            seen.update(g)
            if len(g) > 1:
                parts.append("(" + "*".join(f"a{i}" for i in g) + f")^{e}")
            else:
                parts.append(f"a{j}^{e}")
        body = "*".join(parts) if parts else "1"
        return ("-" if self.sign < 0 else "") + body


def buslaev_d(b: BSeq, k: int) -> SignedMonomial:
    """Closed form of ``d(b_k)``."""
    b.require_valid()
    if k < 0 or k > b.K:
        raise IndexOutOfRange(f"k={k} outside 0..{b.K}")
    sign = _sgn(sum(comb(b.at(j) - b.at(j - 1), 2) for j in range(1, k + 1)))
    bk = b.at(k)
    exps = tuple((j, bk - b.at(j)) for j in range(k) if bk - b.at(j) > 0)
    groups = tuple(
        (j, j + 1) for j in range(k - 1) if b.at(j) == b.at(j + 1) and bk - b.at(j) > 0
    )
    return SignedMonomial(sign, exps, groups)


def transform_support(b: BSeq, upto: int) -> set:
    """``{b_k : b_k <= upto}``, the indices where ``d(n)`` is nonzero."""
    b.require_valid()
    if b.at(b.K) < upto:
        raise InsufficientLength(f"b_K = {b.at(b.K)} < {upto}; support beyond b_K is unknown")
    return {v for v in b.values[1:] if v <= upto}


def predicted_transform(b: BSeq, upto: int) -> list:
    """``[d(0), ..., d(upto)]`` as SignedMonomials (zero off the support)."""
    support = transform_support(b, upto)
    out = []
    for n in range(upto + 1):
        if n in support:
            k = max(i for i in range(b.K + 1) if b.at(i) == n)
            out.append(buslaev_d(b, k))
        else:
            out.append(SignedMonomial.zero())
    return out


@dataclass(frozen=True)
class StepReport:
    k: int
    n: int
    shift: int
    lhs: Scalar
    rhs: Scalar

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def step_recursion_check(b: BSeq, numerators, k: int, n: int) -> StepReport:
    """Check the reduction from level 0 to level ``k+1``.

    ``det(f_{i+j})_0^{n+b_k}`` is compared with
    ``(-1)^{sum_{j<k} C(b_{j+1}-b_j, 2)} * prod_{j<=k} a_j^{n+b_k-b_j} * det(g_{i+j+s})_0^{n-1}``
    where ``g`` is the tail fraction starting at level ``k+1`` and
    ``s = 1 - (b_{k+1} - b_k)``.  Both sides come from separate expansions.
    """
    b.require_valid()
    if k < 0 or k + 1 > b.K:
        raise IndexOutOfRange(f"k={k} needs b_{k + 1}; sequence ends at b_{b.K}")
    if n < 0:
        raise ValueError("n >= 0 required")
    a = numerator_getter(numerators)
    cf = CFrac.from_bseq(b, a)
    ring = cf.ring
    bk = b.at(k)
    shift = 1 - (b.at(k + 1) - bk)
    f0 = cfrac_expand(cf, 2 * (n + bk))
    lhs = hankel_det(f0, 0, n + bk)
    sign = _sgn(sum(comb(b.at(j + 1) - b.at(j), 2) for j in range(k)))
    coef = ring.const(sign)
    for j in range(k + 1):
        coef = coef * a(j) ** (n + bk - b.at(j))
    if n == 0:
        rest = ring.one()
    else:
        top = 2 * (n - 1) + shift
        tail = cfrac_expand(cf.tail(k + 1), max(top, 0))
        rest = hankel_det(tail, shift, n - 1)
    return StepReport(k, n, shift, lhs, coef * rest)


# ---------------------------------------------------------------------------
# special families


def _prod(values, one):
    out = one
    for v in values:
        out = out * v
    return out


def _even_power_d1(n, a, ring, m, scale):
    # powers all 2 (b_n = n): d_1(2j) = 0, d_1(2j-1) = (-1)^j a0^{2j} prod_{i<j} (a_{2i-1} a_{2i})^{2j-2i}
    if n % 2 == 0:
        return ring.zero()
    j = (n + 1) // 2
    out = ring.const(_sgn(j)) * a(0) ** (2 * j)
    for i in range(1, j):
        out = out * (a(2 * i - 1) * a(2 * i)) ** (2 * j - 2 * i)
    return out


def _unit_power_d(n, a, ring, m, scale):
    # powers all 1: d(n) = prod_{i<n} (a_{2i} a_{2i+1})^{n-i}
    return _prod(((a(2 * i) * a(2 * i + 1)) ** (n - i) for i in range(n)), ring.one())


def _unit_power_d1(n, a, ring, m, scale):
    # powers all 1: d_1(n) = a0^{n+1} prod_{i=1..n} (a_{2i-1} a_{2i})^{n+1-i}
    if n < 0:
        return ring.one()
    out = a(0) ** (n + 1)
    for i in range(1, n + 1):
        out = out * (a(2 * i - 1) * a(2 * i)) ** (n + 1 - i)
    return out


def _unit_power_d2(n, a, ring, m, scale):
    # d_2(n) = e_n d_1(n),  e_n = a_{2n+1} e_{n-1} + a0 a2 ... a_{2n},  e_{-1} = 1
    if n < 0:
        return ring.one()
    e = ring.one()
    evens = ring.one()
    for i in range(n + 1):
        evens = evens * a(2 * i)
        e = a(2 * i + 1) * e + evens
    return e * _unit_power_d1(n, a, ring, m, scale)


def _stretched_catalan_d(n, a, ring, m, scale):
    # all powers m, all numerators equal to ``scale``: f = sum scale^k C_k x^{mk}
    if n < 0:
        return ring.one()
    c = scale
    if n % m == 0:
        k = n // m
        return ring.const(_sgn(comb(m - 1, 2) * k)) * c ** (k * (m * k + 1))
    if (n + 1) % m == 0:
        k = (n + 1) // m
        return ring.const(_sgn(comb(m - 1, 2) * k)) * c ** (k * (m * k - 1))
    return ring.zero()


def _stretched_catalan_d1(n, a, ring, m, scale):
    # det(f_{i+j+1})_0^n of the same series: with size s = n+1 = r + k m, 0 <= r < m,
    # D(r + k m) = (-1)^{C(m,2) k} c^{2 k r + k^2 m} D(r), D(0) = 1, D(r) = 0 for 0 < r < m
    size = n + 1
    k, r = divmod(size, m)
    if r:
        return ring.zero()
    return ring.const(_sgn(comb(m, 2) * k)) * scale ** (k * k * m)


def _delayed_start(n, a, ring, m, scale):
    # b = (-1, 0, m+1, m+2, ...): d(0) = 1, d(n) = 0 for 0 < n <= m,
    # d(m+j) = (-1)^{C(m+1,2)} a0^{j+m} a1^{j-1} ... a_{j-1}
    if n == 0:
        return ring.one()
    if n <= m:
        return ring.zero()
    j = n - m
    out = ring.const(_sgn(comb(m + 1, 2))) * a(0) ** (j + m)
    for i in range(1, j):
        out = out * a(i) ** (j - i)
    return out


def _gapped_catalan(n, a, ring, m, scale):
    # powers (1, 2, 1, 1, 1, ...): reduce through g = 1/(1 - a1 x^2 h0), h0 = 1/(1 - a2 x h1);
    # d(0) = 1, d(1) = 0, d(j+3) = -(a0 a1)^{j+3} a2^{j+1} * det(h1_{i+i'+2})_0^j
    if n == 0:
        return ring.one()
    if n == 1:
        return ring.zero()
    j = n - 3
    shifted = lambda i: a(i + 3)
    return -((a(0) * a(1)) ** n) * a(2) ** (j + 1) * _unit_power_d2(j, shifted, ring, m, scale)


FAMILIES: dict = {
    "even-power-d1": _even_power_d1,
    "unit-power-d": _unit_power_d,
    "unit-power-d1": _unit_power_d1,
    "unit-power-d2": _unit_power_d2,
    "stretched-catalan-d": _stretched_catalan_d,
    "stretched-catalan-d1": _stretched_catalan_d1,
    "delayed-start": _delayed_start,
    "gapped-catalan": _gapped_catalan,
}

_NEEDS_M = {"stretched-catalan-d", "stretched-catalan-d1", "delayed-start"}


def family_formula(family: str, n: int, *, numerators=None, m: int | None = None, scale=None, ring: Ring | None = None) -> Scalar:
    """Closed-form value of a special Hankel determinant family at index ``n``.

    Families using general numerators take ``numerators`` (list or rule);
    the stretched Catalan families take ``m`` and ``scale``; ``delayed-start``
    takes ``m`` and numerators.
    """
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise UnsupportedFamily(f"{family!r}; known: {sorted(FAMILIES)}") from None
    if family in _NEEDS_M and (m is None or m < 1):
        raise ParamOutOfRange(f"{family} needs m >= 1")
    if n < (-1 if family in ("unit-power-d1", "unit-power-d2") else 0):
        raise ParamOutOfRange(f"n={n} out of range for {family}")
    a = numerator_getter(numerators) if numerators is not None else None
    if ring is None:
        if a is not None:
            ring = a(0).ring
        elif isinstance(scale, Scalar):
            ring = scale.ring
        else:
            ring = Ring(())
    if family.startswith("stretched"):
        if scale is None:
            raise ParamOutOfRange(f"{family} needs scale")
        scale = ring.const(scale) if not isinstance(scale, Scalar) else scale
    elif a is None:
        raise ParamOutOfRange(f"{family} needs numerators")
    return fn(n, a, ring, m, scale)


def random_bseq(rng: random.Random, bmax: int = 12, target: int | None = None) -> BSeq:
    """Random valid prefix: steps 0..3 respecting the no-triple rule, ``b_K <= bmax``.

    Generation stops at the first step that would exceed ``bmax``, or once
    ``b_K + b_{K-1} >= target`` when a target is given.
    """
    vals = [-1, 0]
    while True:
        if target is not None and vals[-1] + vals[-2] >= target:
            break
        choices = [d for d in (0, 1, 2, 3) if vals[-1] + d - vals[-2] >= 1]
        step = rng.choice(choices)
        if vals[-1] + step > bmax:
            break
        vals.append(vals[-1] + step)
    return BSeq(tuple(vals))
