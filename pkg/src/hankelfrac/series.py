"""Truncated power series and polynomials in x with Scalar coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InsufficientOrder, NonUnitConstantTerm
from .exactalg import Ring, RingMismatch, Scalar

QQ = Ring(())


def _as_scalars(ring: Ring, values: Iterable) -> tuple:
    return tuple(ring.const(v) if not isinstance(v, Scalar) else v for v in values)


@dataclass(frozen=True, eq=False)
class PowerSeries:
    """``f_0 + f_1 x + ... + f_N x^N + O(x^{N+1})``.

    Indexing below 0 reads as 0; indexing above the truncation order raises
    :class:`InsufficientOrder`.
    """

    ring: Ring
    coeffs: tuple

    @classmethod
    def from_values(cls, values: Sequence, ring: Ring | None = None) -> "PowerSeries":
        if ring is None:
            ring = next((v.ring for v in values if isinstance(v, Scalar)), QQ)
        if not values:
            raise ValueError("a power series needs at least one coefficient")
        return cls(ring, _as_scalars(ring, values))

    @classmethod
    def one(cls, ring: Ring, order: int) -> "PowerSeries":
        return cls(ring, (ring.one(),) + (ring.zero(),) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Scalar:
        if n < 0:
            return self.ring.zero()
        if n > self.order:
            raise InsufficientOrder(f"coefficient {n} requested from a series of order {self.order}")
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise InsufficientOrder(f"cannot extend order {self.order} to {order}")
        return PowerSeries(self.ring, self.coeffs[: order + 1])

    def _check(self, other: "PowerSeries"):
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        n = min(self.order, other.order)
        return PowerSeries(self.ring, tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        n = min(self.order, other.order)
        return PowerSeries(self.ring, tuple(self.coeffs[i] - other.coeffs[i] for i in range(n + 1)))

    def __neg__(self):
        return PowerSeries(self.ring, tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            self._check(other)
            n = min(self.order, other.order)
            return PowerSeries(self.ring, _convolve(self.coeffs, other.coeffs, n, self.ring))
        return PowerSeries(self.ring, tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by ``x^k`` keeping the same truncation order."""
        zero = self.ring.zero()
        return PowerSeries(self.ring, ((zero,) * k + self.coeffs)[: self.order + 1])

    def reciprocal(self) -> "PowerSeries":
        return series_reciprocal(self)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PowerSeries([{', '.join(map(str, self.coeffs))}])"


def _convolve(a: Sequence[Scalar], b: Sequence[Scalar], n: int, ring: Ring) -> tuple:
    out = []
    for k in range(n + 1):
        acc = ring.zero()
        for j in range(k + 1):
            if a[j] and b[k - j]:
                acc = acc + a[j] * b[k - j]
        out.append(acc)
    return tuple(out)


def series_reciprocal(s: PowerSeries) -> PowerSeries:
    """``1/s`` for a series with constant term exactly 1."""
    if s.coeffs[0] != 1:
        raise NonUnitConstantTerm(f"constant term is {s.coeffs[0]}, expected 1")
    t = [s.ring.one()]
    for n in range(1, s.order + 1):
        acc = s.ring.zero()
        for j in range(1, n + 1):
            if s.coeffs[j] and t[n - j]:
                acc = acc - s.coeffs[j] * t[n - j]
        t.append(acc)
    return PowerSeries(s.ring, tuple(t))


@dataclass(frozen=True, eq=False)
class XPoly:
    """Polynomial in x, coefficients in ascending powers (no trailing zeros)."""

    ring: Ring
    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while c and not c[-1]:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_values(cls, values: Sequence, ring: Ring | None = None) -> "XPoly":
        if ring is None:
            ring = next((v.ring for v in values if isinstance(v, Scalar)), QQ)
        return cls(ring, _as_scalars(ring, values))

    @classmethod
    def x(cls, ring: Ring, power: int = 1) -> "XPoly":
        return cls(ring, (ring.zero(),) * power + (ring.one(),))

    @classmethod
    def const(cls, ring: Ring, value) -> "XPoly":
        return cls(ring, (ring.const(value),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> Scalar:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return self.ring.zero()

    def is_zero(self) -> bool:
        return not self.coeffs

    def _lift(self, other) -> "XPoly":
        if isinstance(other, XPoly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        return XPoly.const(self.ring, other)

    def __add__(self, other) -> "XPoly":
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(self.ring, tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return XPoly(self.ring, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "XPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "XPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "XPoly":
        if not isinstance(other, XPoly):
            return XPoly(self.ring, tuple(c * other for c in self.coeffs))
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return XPoly(self.ring, ())
        out = [self.ring.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return XPoly(self.ring, tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> "XPoly":
        """``x^k * self``."""
        if self.is_zero():
            return self
        return XPoly(self.ring, (self.ring.zero(),) * k + self.coeffs)

    def exact_div(self, c) -> "XPoly":
        return XPoly(self.ring, tuple(v.exact_div(c) for v in self.coeffs))

    def reverse(self, d: int) -> "XPoly":
        """``x^d * self(1/x)``; ``d`` must be at least the degree."""
        if d < self.degree:
            raise ValueError(f"reversal degree {d} below polynomial degree {self.degree}")
        padded = self.coeffs + (self.ring.zero(),) * (d + 1 - len(self.coeffs))
        return XPoly(self.ring, tuple(reversed(padded)))

    def __call__(self, value) -> Scalar:
        acc = self.ring.zero()
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Scalar)):
            if not other:
                return self.is_zero()
            return self.degree == 0 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            xp = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            if not xp:
                parts.append(f"({c})" if len(c.terms) > 1 else str(c))
            elif c == 1:
                parts.append(xp)
            elif c == -1:
                parts.append(f"-{xp}")
            elif len(c.terms) > 1:
                parts.append(f"({c})*{xp}")
            else:
                parts.append(f"{c}*{xp}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"XPoly({self})"
