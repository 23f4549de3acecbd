"""Named series, numerator rules and index-sequence families, plus reconstruction.

Parameters given as numbers are used as rationals; a parameter given as a
name (or left out) becomes an indeterminate of that name.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb

from .cfrac import BSeq, powers_to_bseq
from .errors import (
    IndexOutOfRange,
    InsufficientOrder,
    NonUnitConstantTerm,
    ParamOutOfRange,
    UnknownName,
    ZeroDeterminant,
)
from .exactalg import Ring, Scalar
from .hankel import hankel_det
from .series import QQ, PowerSeries

__all__ = [
    "BUILTINS",
    "builtin_series",
    "parse_builtin",
    "numerator_rule",
    "NUMERATOR_RULES",
    "bseq_family",
    "power_family",
    "BSEQ_FAMILIES",
    "POWER_FAMILIES",
    "reconstruct_cfrac",
    "qbinomial",
    "catalan",
    "family_bseq",
]


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def _param(value, default_name: str, ring: Ring | None):
    """Return ``(scalar, ring)``; ``None`` or a name string means symbolic."""
    if isinstance(value, Scalar):
        return value, value.ring
    if value is None or (isinstance(value, str) and re.fullmatch(r"[A-Za-z][A-Za-z0-9]*", value)):
        name = default_name if value is None else value
        ring = ring.extend(name) if ring is not None else Ring((name,))
        return ring.gen(name), ring
    ring = ring or QQ
    return ring.const(Fraction(value)), ring


def _catalan(order, ring):
    ring = ring or QQ
    return PowerSeries(ring, tuple(ring.const(catalan(n)) for n in range(order + 1)))


def _catalan_shifted(order, ring):
    ring = ring or QQ
    return PowerSeries(ring, tuple(ring.const(catalan(n + 1)) for n in range(order + 1)))


def _catalan_stretched(order, ring, m=2, a=None):
    if int(m) != m or m < 1:
        raise ParamOutOfRange(f"m must be a positive integer, got {m}")
    m = int(m)
    a, ring = _param(a, "a", ring)
    out = [ring.zero()] * (order + 1)
    for k in range(order // m + 1):
        out[m * k] = a**k * catalan(k)
    return PowerSeries(ring, tuple(out))


def _motzkin(order, ring):
    ring = ring or QQ
    M = [1]
    for n in range(1, order + 1):
        M.append(M[n - 1] + sum(M[k] * M[n - 2 - k] for k in range(n - 1)))
    return PowerSeries(ring, tuple(ring.const(v) for v in M))


def _motzkin_u(order, ring, u=None):
    u, ring = _param(u, "u", ring)
    out = []
    for n in range(order + 1):
        acc = ring.zero()
        for k in range(n // 2 + 1):
            acc = acc + u ** (n - 2 * k) * (catalan(k) * comb(n, 2 * k))
        out.append(acc)
    return PowerSeries(ring, tuple(out))


def _eisenstein(order, ring, q=None):
    q, ring = _param(q, "q", ring)
    return PowerSeries(ring, tuple(q ** comb(n + 1, 2) for n in range(order + 1)))


BUILTINS = {
    "catalan": _catalan,
    "catalan-shifted": _catalan_shifted,
    "catalan-stretched": _catalan_stretched,
    "motzkin": _motzkin,
    "motzkin-u": _motzkin_u,
    "eisenstein": _eisenstein,
}


def builtin_series(name: str, order: int, *params, ring: Ring | None = None) -> PowerSeries:
    """Coefficients ``f_0 .. f_order`` of a named series.

    ``catalan-stretched`` takes ``(m, a)``, ``motzkin-u`` takes ``u`` and
    ``eisenstein`` takes ``q``.
    """
    try:
        fn = BUILTINS[name]
    except KeyError:
        raise UnknownName(f"{name!r}; known: {sorted(BUILTINS)}") from None
    if order < 0:
        raise ParamOutOfRange("order must be non-negative")
    try:
        return fn(order, ring, *params)
    except TypeError as exc:
        raise ParamOutOfRange(f"{name}: {exc}") from None


def parse_builtin(text: str) -> tuple:
    """``"eisenstein(2)"`` -> ``("eisenstein", [Fraction(2)])``; names stay strings."""
    m = re.fullmatch(r"\s*([a-z][a-z-]*)\s*(?:\((.*)\))?\s*", text)
    if not m:
        raise UnknownName(f"cannot read builtin {text!r}")
    name, inner = m.group(1), m.group(2)
    params = []
    if inner and inner.strip():
        for tok in inner.split(","):
            tok = tok.strip()
            try:
                params.append(Fraction(tok))
            except ValueError:
                params.append(tok)
    return name, params


# -- numerator rules ----------------------------------------------------------


def _eisenstein_rule(q):
    # a_{2n} = q^{2n+1},  a_{2n+1} = (q^{n+1} - 1) q^{n+1}
    def a(j):
        n, odd = divmod(j, 2)
        if odd:
            return (q ** (n + 1) - 1) * q ** (n + 1)
        return q ** (2 * n + 1)

    return a


NUMERATOR_RULES = ("ones", "symbolic", "eisenstein")


def numerator_rule(name: str, ring: Ring | None = None, q=None):
    """``n -> a_n`` for ``ones``, ``symbolic`` (``a_n`` itself) or ``eisenstein``."""
    if name == "ones":
        ring = ring or QQ
        one = ring.one()
        return lambda n: one
    if name == "symbolic":
        if ring is None:
            raise ParamOutOfRange("symbolic numerators need a ring declaring a0, a1, ...")
        return ring.a
    if name == "eisenstein":
        q, _ = _param(q, "q", ring)
        return _eisenstein_rule(q)
    raise UnknownName(f"{name!r}; known: {list(NUMERATOR_RULES)}")


# -- index-sequence and power families ---------------------------------------


def _b_identity(k, m):
    return k


def _b_doubled(k, m):
    return k // 2


def _b_motzkin(k, m):
    j, r = divmod(k, 3)
    return 2 * j + (r == 2)


def _b_wide_motzkin(k, m):
    j, r = divmod(k, 3)
    return 5 * j + 3 * (r == 2)


def _b_stretched(k, m):
    j, r = divmod(k + 1, 2)
    return m * j - 1 if r == 0 else m * j


def _b_delayed(k, m):
    return 0 if k == 0 else m + k


def _b_periodic_122(k, m):
    j, r = divmod(k, 6)
    return 5 * j + (0, 0, 2, 2, 3, 4)[r]


BSEQ_FAMILIES = {
    "identity": _b_identity,
    "doubled": _b_doubled,
    "motzkin": _b_motzkin,
    "wide-motzkin": _b_wide_motzkin,
    "stretched": _b_stretched,
    "delayed": _b_delayed,
    "periodic-122": _b_periodic_122,
}

POWER_FAMILIES = {
    "alternating-21": lambda n, m: 2 if n % 2 == 0 else 1,
    "gapped": lambda n, m: 2 if n == 1 else 1,
}

_NEEDS_M = {"stretched", "delayed"}


def bseq_family(name: str, K: int, m: int | None = None) -> BSeq:
    """``b_{-1} .. b_K`` of a named valid family."""
    try:
        fn = BSEQ_FAMILIES[name]
    except KeyError:
        raise UnknownName(f"{name!r}; known: {sorted(BSEQ_FAMILIES)}") from None
    if name in _NEEDS_M and (m is None or m < 1):
        raise ParamOutOfRange(f"{name} needs m >= 1")
    if K < 0:
        raise ParamOutOfRange("K must be non-negative")
    return BSeq((-1,) + tuple(fn(k, m) for k in range(K + 1))).require_valid()


def power_family(name: str, length: int, m: int | None = None) -> list:
    """First ``length`` powers of a named family (valid or not)."""
    if name in POWER_FAMILIES:
        return [POWER_FAMILIES[name](n, m) for n in range(length)]
    b = bseq_family(name, length, m)
    return [b.at(n + 1) - b.at(n - 1) for n in range(length)]


def family_bseq(name: str, length: int, m: int | None = None) -> BSeq:
    """The (possibly invalid) index sequence generated by a power family."""
    return powers_to_bseq(power_family(name, length, m))


# -- reconstruction -----------------------------------------------------------


def reconstruct_cfrac(s: PowerSeries, upto: int) -> list:
    """Numerators ``a_0 .. a_{2*upto+1}`` of ``1/(1 - a0 x/(1 - a1 x/(1 - ...)))``.

    Uses ``d_1(n)/d(n) = a_0 a_2 ... a_{2n}`` and ``d(n)/d_1(n-1) = a_1 a_3 ... a_{2n-1}``.
    Determinants are checked in the order ``d(0), d_1(0), d(1), d_1(1), ...``; the
    first one that vanishes raises :class:`ZeroDeterminant` carrying the
    numerators recovered so far.
    """
    if s.coeffs[0] != 1:
        raise NonUnitConstantTerm(f"s_0 = {s.coeffs[0]}")
    if upto < 0:
        raise ParamOutOfRange("upto must be non-negative")
    if s.order < 2 * upto + 2:
        raise InsufficientOrder(f"recovering a_{2 * upto + 1} needs order {2 * upto + 2}")
    out: list = []
    even_prev = s.ring.one()  # a_0 a_2 ... a_{2n-2}
    odd_prev = s.ring.one()  # a_1 a_3 ... a_{2n-3}
    d1_prev = None
    for n in range(upto + 2):
        d = hankel_det(s, 0, n)
        if not d:
            raise ZeroDeterminant(n, 0, out)
        if n > 0:
            odd = d.exact_div(d1_prev)
            out.append(odd.exact_div(odd_prev))
            odd_prev = odd
        if n == upto + 1:
            break
        d1 = hankel_det(s, 1, n)
        if not d1:
            raise ZeroDeterminant(n, 1, out)
        even = d1.exact_div(d)
        out.append(even.exact_div(even_prev))
        even_prev, d1_prev = even, d1
    return out


def qbinomial(n: int, k: int, ring: Ring | None = None) -> Scalar:
    """Gaussian binomial ``[n, k]`` in ``q`` via ``[n,k] = [n-1,k-1] + q^k [n-1,k]``."""
    if n < 0 or k < 0 or k > n:
        raise IndexOutOfRange(f"q-binomial [{n},{k}] needs 0 <= k <= n")
    ring = ring or Ring(("q",))
    q = ring.gen("q")
    row = [ring.one()]
    for i in range(1, n + 1):
        new = [ring.one()] * (i + 1)
        for j in range(1, i):
            new[j] = row[j - 1] + q**j * row[j]
        row = new
    return row[k]
