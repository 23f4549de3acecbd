"""Index sequences, C-fractions and their expansion into power series.

A C-fraction here is ``1/(1 - a0 x^m0/(1 - a1 x^m1/(1 - ...)))``.  When it is
built from an index sequence ``b`` the powers are ``m_n = b_{n+1} - b_{n-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Union

from .errors import DepthOutOfRange, InsufficientDepth, InvalidBSeq
from .exactalg import Ring, Scalar
from .series import QQ, PowerSeries, XPoly, series_reciprocal

__all__ = [
    "BSeq",
    "CFrac",
    "bseq_to_powers",
    "powers_to_bseq",
    "cfrac_expand",
    "convergents",
    "series_reciprocal",
    "jfraction_expand",
    "numerator_getter",
]

Supply = Union[Sequence, Callable[[int], object]]


@dataclass(frozen=True)
class BSeq:
    """The sequence ``b_{-1}, b_0, ..., b_K`` (``values[0]`` is ``b_{-1}``).

    Construction does not validate, so that sequences derived from arbitrary
    power sequences can be represented; use :attr:`is_valid` or
    :meth:`require_valid`.
    """

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) < 2:
            raise InvalidBSeq("need at least b_{-1} and b_0")

    @classmethod
    def from_tail(cls, tail: Sequence[int]) -> "BSeq":
        """Build from ``b_0, b_1, ...`` (prepends ``b_{-1} = -1``)."""
        return cls((-1, *tail))

    @property
    def K(self) -> int:
        return len(self.values) - 2

    def at(self, k: int) -> int:
        if k < -1 or k > self.K:
            raise DepthOutOfRange(f"b_{k} requested, sequence defined for -1..{self.K}")
        return self.values[k + 1]

    def violations(self) -> list:
        v = self.values
        problems = []
        if v[0] != -1:
            problems.append(f"b_-1 = {v[0]}, expected -1")
        if v[1] != 0:
            problems.append(f"b_0 = {v[1]}, expected 0")
        for i in range(1, len(v)):
            if v[i] < v[i - 1]:
                problems.append(f"decrease at k={i - 1}: b_{i - 2}={v[i - 1]} > b_{i - 1}={v[i]}")
        for i in range(2, len(v)):
            if v[i] - v[i - 2] < 1:
                problems.append(f"b_{i - 1} - b_{i - 3} = {v[i] - v[i - 2]} < 1")
        return problems

    @property
    def is_valid(self) -> bool:
        return not self.violations()

    def require_valid(self) -> "BSeq":
        problems = self.violations()
        if problems:
            raise InvalidBSeq(f"{list(self.values)}: " + "; ".join(problems))
        return self

    def distinct(self) -> list:
        """``[(B_n, multiplicity, k)]`` for the distinct values in increasing order.

        ``k`` is chosen so that ``B_n = b_{k-1}`` and, for a doubled value,
        ``b_{k-2} = b_{k-1}`` (the larger of the two indices plus one).
        """
        out = []
        for idx, val in enumerate(self.values):
            k = idx  # b_{k-1} == values[k]
            if out and out[-1][0] == val:
                out[-1] = (val, out[-1][1] + 1, k)
            else:
                out.append((val, 1, k))
        return out

    def __str__(self):
        return ",".join(map(str, self.values))


def bseq_to_powers(b: BSeq) -> tuple:
    """``m_n = b_{n+1} - b_{n-1}`` for ``n = 0 .. K-1``."""
    b.require_valid()
    return tuple(b.at(n + 1) - b.at(n - 1) for n in range(b.K))


def powers_to_bseq(powers: Sequence[int]) -> BSeq:
    """Invert ``m_n = b_{n+1} - b_{n-1}``; the result may be invalid (check ``is_valid``)."""
    powers = list(powers)
    if not powers:
        raise ValueError("need at least one power")
    if any(m < 1 for m in powers):
        raise ValueError(f"powers must be positive: {powers}")
    vals = [-1, 0]
    for n, m in enumerate(powers):
        # b_{n+1} = m_n + b_{n-1}
        vals.append(m + vals[n])
    return BSeq(tuple(vals))


def numerator_getter(numerators: Supply, ring: Ring | None = None) -> Callable[[int], Scalar]:
    """Normalize an explicit list or an index rule into ``n -> Scalar``.

    Explicit lists get a ``length`` attribute; rules are treated as infinite.
    """
    if callable(numerators):
        fn = numerators
        if ring is None:
            probe = fn(0)
            if isinstance(probe, Scalar):
                return fn
            ring = QQ

        def coerced(n):
            v = fn(n)
            return v if isinstance(v, Scalar) else ring.const(v)

        return coerced
    values = list(numerators)
    if ring is None:
        ring = next((v.ring for v in values if isinstance(v, Scalar)), QQ)
    values = [ring.const(v) if not isinstance(v, Scalar) else v for v in values]

    def get(n):
        if n < 0 or n >= len(values):
            raise DepthOutOfRange(f"numerator a_{n} not supplied (have {len(values)})")
        return values[n]

    get.length = len(values)
    return get


class CFrac:
    """Powers ``m_n`` and numerators ``a_n`` of a C-fraction.

    Either may be a finite sequence or a rule ``n -> value`` evaluated lazily.
    ``length`` is the number of levels available (None when unbounded).
    """

    def __init__(self, powers: Supply, numerators: Supply, ring: Ring | None = None):
        lengths = []
        if callable(powers):
            self._power = powers
        else:
            plist = [int(m) for m in powers]
            if any(m < 1 for m in plist):
                raise ValueError(f"powers must be positive: {plist}")
            self._power = plist.__getitem__
            lengths.append(len(plist))
        self._numerator = numerator_getter(numerators, ring)
        if hasattr(self._numerator, "length"):
            lengths.append(self._numerator.length)
        self.length = min(lengths) if lengths else None
        self.ring = ring if ring is not None else self._numerator(0).ring

    @classmethod
    def from_bseq(cls, b: BSeq, numerators: Supply, ring: Ring | None = None) -> "CFrac":
        return cls(bseq_to_powers(b), numerators, ring)

    def power(self, n: int) -> int:
        return self._power(n)

    def numerator(self, n: int) -> Scalar:
        return self._numerator(n)

    def tail(self, k: int) -> "CFrac":
        """The fraction ``f^{(k)}`` starting at level ``k``."""
        if self.length is not None and k > self.length:
            raise DepthOutOfRange(f"tail {k} of a fraction with {self.length} levels")
        out = object.__new__(CFrac)
        out._power = lambda n: self._power(n + k)
        out._numerator = lambda n: self._numerator(n + k)
        out.length = None if self.length is None else self.length - k
        out.ring = self.ring
        return out

    def depth_for(self, order: int) -> int:
        """Smallest ``d`` with ``m_0 + ... + m_{d-1} > order``.

        Only ``a_0 .. a_{d-2}`` enter the expansion.  A finite fraction with
        ``L`` levels is exact through ``x^{m_0 + ... + m_{L-1}}``: whatever
        follows it has power at least 1, so ``d = L + 1`` is accepted there.
        """
        total, d = 0, 0
        while total <= order:
            if self.length is not None and d >= self.length:
                if total == order:
                    return d + 1
                raise InsufficientDepth(
                    f"{self.length} levels give exact coefficients only up to x^{total}; order {order} requested"
                )
            total += self.power(d)
            d += 1
        return d

    def exact_order(self) -> int | None:
        """Highest coefficient index a finite fraction determines (None if unbounded)."""
        if self.length is None:
            return None
        return sum(self.power(j) for j in range(self.length))


def cfrac_expand(cf: CFrac, order: int) -> PowerSeries:
    """Coefficients ``f_0 .. f_order`` of the C-fraction, bottom-up over the tails."""
    if order < 0:
        raise ValueError("order must be non-negative")
    ring = cf.ring
    d = cf.depth_for(order)
    # budget[k]: truncation order needed for the tail starting at level k
    budget = [order]
    for k in range(d - 1):
        budget.append(budget[-1] - cf.power(k))
    g = None  # the level d-1 tail is replaced by 1
    for k in range(d - 1, -1, -1):
        n_k = budget[k]
        denom = [ring.one()] + [ring.zero()] * n_k
        if g is not None:
            a_k = cf.numerator(k)
            m_k = cf.power(k)
            for j in range(m_k, n_k + 1):
                c = g.coeffs[j - m_k]
                if c:
                    denom[j] = denom[j] - a_k * c
        g = series_reciprocal(PowerSeries(ring, tuple(denom)))
    return g


def convergents(b: BSeq, numerators: Supply, k: int) -> tuple:
    """``(A_k, B_k)`` from ``X_n = X_{n-1} - a_{n-2} x^{b_{n-1}-b_{n-3}} X_{n-2}``.

    Initial values ``A_0 = 0, A_1 = 1, B_0 = 1, B_1 = 1``.
    """
    b.require_valid()
    if k < 0 or k > b.K + 1:
        raise DepthOutOfRange(f"k={k} outside 0..{b.K + 1}")
    a = numerator_getter(numerators)
    ring = a(0).ring
    one = XPoly.const(ring, 1)
    A = [XPoly(ring, ()), one]
    B = [one, one]
    for n in range(2, k + 1):
        coef = a(n - 2)
        shift = b.at(n - 1) - b.at(n - 3)
        A.append(A[n - 1] - (A[n - 2] * coef).shift(shift))
        B.append(B[n - 1] - (B[n - 2] * coef).shift(shift))
    return A[k], B[k]


def jfraction_expand(diag: Supply, sub: Supply, order: int, ring: Ring | None = None) -> PowerSeries:
    """Expand ``1/(1 - d0 x - l1 x^2/(1 - d1 x - l2 x^2/(1 - ...)))``.

    ``diag`` gives ``d0, d1, ...`` and ``sub`` gives ``l1, l2, ...`` (so
    ``sub[0]`` is ``l1``).  Levels up to ``order // 2`` are used.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    depth = order // 2
    dget = numerator_getter(diag, ring)
    sget = numerator_getter(sub, ring)
    if getattr(dget, "length", depth + 1) < depth + 1 or getattr(sget, "length", depth) < depth:
        raise InsufficientDepth(f"order {order} needs {depth + 1} diagonal and {depth} sub-diagonal entries")
    ring = ring or dget(0).ring
    g = None
    for j in range(depth, -1, -1):
        n_j = order - 2 * j
        denom = [ring.one()] + [ring.zero()] * n_j
        if n_j >= 1:
            denom[1] = -dget(j)
        if g is not None:
            lam = sget(j)
            for i in range(2, n_j + 1):
                c = g.coeffs[i - 2]
                if c:
                    denom[i] = denom[i] - lam * c
        g = series_reciprocal(PowerSeries(ring, tuple(denom)))
    return g
