"""Hankel determinants and transforms, plus checks of the classical reduction identities.

``hankel_det(s, offset, n)`` is ``det(s_{i+j+offset})_{i,j=0}^n``.  Coefficients
with negative index read as 0; size ``n = -1`` is the empty determinant, 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import InsufficientOrder, NonUnitConstantTerm
from .exactalg import Scalar, det_fraction_free
from .series import PowerSeries, series_reciprocal

__all__ = [
    "hankel_matrix",
    "hankel_det",
    "hankel_transform",
    "verify_reduction",
    "condensation_check",
    "solve_tail",
    "ReductionReport",
    "CondensationReport",
    "IDENTITIES",
]


def hankel_matrix(s: PowerSeries, offset: int, n: int) -> list:
    """Rows of ``(s_{i+j+offset})_{i,j=0}^n``."""
    if n >= 0 and 2 * n + offset > s.order:
        raise InsufficientOrder(
            f"size {n} at offset {offset} needs coefficient {2 * n + offset}, series order is {s.order}"
        )
    return [[s[i + j + offset] for j in range(n + 1)] for i in range(n + 1)]


def hankel_det(s: PowerSeries, offset: int, n: int) -> Scalar:
    if n < -1:
        raise ValueError(f"size {n} below the empty determinant")
    if n == -1:
        return s.ring.one()
    return det_fraction_free(hankel_matrix(s, offset, n))


def hankel_transform(s: PowerSeries, offset: int, upto: int) -> list:
    """``[hankel_det(s, offset, n) for n in 0..upto]``, each computed on its own."""
    if 2 * upto + offset > s.order:
        raise InsufficientOrder(f"transform to {upto} at offset {offset} needs order {2 * upto + offset}")
    return [hankel_det(s, offset, n) for n in range(upto + 1)]


def solve_tail(f: PowerSeries, a, p: int) -> PowerSeries:
    """Solve ``f = 1/(1 - a x^p g)`` for ``g`` (to order ``f.order - p``).

    ``a`` must divide the relevant coefficients exactly (a nonzero rational or
    a monomial in the ring's indeterminates).
    """
    if f.coeffs[0] != 1:
        raise NonUnitConstantTerm(f"f_0 = {f.coeffs[0]}")
    if p < 1 or p > f.order:
        raise InsufficientOrder(f"power {p} incompatible with series order {f.order}")
    t = series_reciprocal(f)
    for j in range(1, p):
        if t.coeffs[j]:
            raise ValueError(f"1 - 1/f has a nonzero x^{j} term; f is not of the form 1/(1 - a x^{p} g)")
    a = f.ring.const(a) if not isinstance(a, Scalar) else a
    return PowerSeries(f.ring, tuple((-t.coeffs[j]).exact_div(a) for j in range(p, f.order + 1)))


@dataclass(frozen=True)
class ReductionReport:
    identity: str
    params: dict
    lhs: Scalar
    rhs: Scalar
    holds: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "holds", self.lhs == self.rhs)


def _sgn(e: int) -> int:
    return -1 if e % 2 else 1


def _andrews_wimp(s, m, n, p, a):
    # det(s_{i+j})_0^n = (-1)^n det(t_{i+j+2})_0^{n-1}
    if n < 1:
        raise ValueError("n >= 1 required")
    t = series_reciprocal(s)
    return hankel_det(s, 0, n), _sgn(n) * hankel_det(t, 2, n - 1)


def _negative_shift(s, m, n, p, a):
    # det(s_{i+j-m})_0^{n+m} = (-1)^{n + C(m+1,2)} det(t_{i+j+m+2})_0^{n-1}
    if m < 0 or n < 0:
        raise ValueError("m >= 0 and n >= 0 required")
    t = series_reciprocal(s)
    return hankel_det(s, -m, n + m), _sgn(n + comb(m + 1, 2)) * hankel_det(t, m + 2, n - 1)


def _unit_shift(s, m, n, p, a):
    # det(s_{i+j+1})_0^n = (-1)^{n+1} det(t_{i+j+1})_0^n
    t = series_reciprocal(s)
    return hankel_det(s, 1, n), _sgn(n + 1) * hankel_det(t, 1, n)


def _negative_offset(s, m, n, p, a):
    # det(s_{i+j-m})_0^n = 0 for n < m and (-1)^{C(m+1,2)} for n = m
    if n > m:
        raise ValueError("n <= m required")
    if s.coeffs[0] != 1:
        raise NonUnitConstantTerm(f"s_0 = {s.coeffs[0]}")
    expected = 0 if n < m else _sgn(comb(m + 1, 2))
    return hankel_det(s, -m, n), s.ring.const(expected)


def _tail_factor(s, m, n, p, a):
    # f = 1/(1 - a x^p g): det(f_{i+j-m})_0^{n+m} = (-1)^{C(m+1,2)} a^n det(g_{i+j+m-p+2})_0^{n-1}
    if m < -1 or p < 1 or n < 1:
        raise ValueError("m >= -1, p >= 1, n >= 1 required")
    g = solve_tail(s, a, p)
    a = s.ring.const(a) if not isinstance(a, Scalar) else a
    return hankel_det(s, -m, n + m), _sgn(comb(m + 1, 2)) * a**n * hankel_det(g, m - p + 2, n - 1)


IDENTITIES = {
    "andrews-wimp": _andrews_wimp,
    "negative-shift": _negative_shift,
    "unit-shift": _unit_shift,
    "negative-offset": _negative_offset,
    "tail-factor": _tail_factor,
}


def verify_reduction(s: PowerSeries, identity: str, *, m: int = 0, n: int = 1, p: int = 1, a=1) -> ReductionReport:
    """Compute both sides of a determinant reduction identity independently.

    Identities (``t = 1/s``; ``g`` solves ``s = 1/(1 - a x^p g)``):

    ``andrews-wimp``    det(s_{i+j})_0^n = (-1)^n det(t_{i+j+2})_0^{n-1}
    ``negative-shift``  det(s_{i+j-m})_0^{n+m} = (-1)^{n+C(m+1,2)} det(t_{i+j+m+2})_0^{n-1}
    ``unit-shift``      det(s_{i+j+1})_0^n = (-1)^{n+1} det(t_{i+j+1})_0^n
    ``negative-offset`` det(s_{i+j-m})_0^n = 0 (n < m), (-1)^{C(m+1,2)} (n = m)
    ``tail-factor``     det(s_{i+j-m})_0^{n+m} = (-1)^{C(m+1,2)} a^n det(g_{i+j+m-p+2})_0^{n-1}
    """
    try:
        fn = IDENTITIES[identity]
    except KeyError:
        raise ValueError(f"unknown identity {identity!r}; choose from {sorted(IDENTITIES)}") from None
    if s.coeffs[0] != 1:
        raise NonUnitConstantTerm(f"s_0 = {s.coeffs[0]}")
    lhs, rhs = fn(s, m, n, p, a)
    return ReductionReport(identity, {"m": m, "n": n, "p": p, "a": str(a)}, lhs, rhs)


@dataclass(frozen=True)
class CondensationReport:
    n: int
    d: Scalar  # d(n)
    d1: Scalar  # d_1(n)
    d2: Scalar  # d_2(n)
    d2_prev: Scalar  # d_2(n-1)
    d_next: Scalar  # d(n+1)

    @property
    def holds(self) -> bool:
        return self.d2 * self.d == self.d2_prev * self.d_next + self.d1 * self.d1


def condensation_check(s: PowerSeries, n: int) -> CondensationReport:
    """Check ``d_2(n) d(n) = d_2(n-1) d(n+1) + d_1(n)^2`` with ``d_k(n) = det(s_{i+j+k})_0^n``."""
    if n < 0:
        raise ValueError("n >= 0 required")
    return CondensationReport(
        n=n,
        d=hankel_det(s, 0, n),
        d1=hankel_det(s, 1, n),
        d2=hankel_det(s, 2, n),
        d2_prev=hankel_det(s, 2, n - 1),
        d_next=hankel_det(s, 0, n + 1),
    )
