"""Exact multivariate polynomials over the rationals and fraction-free determinants.

A :class:`Scalar` is a sparse polynomial in the indeterminates of a :class:`Ring`.
Terms are stored as a dict mapping exponent tuples (one slot per indeterminate)
to rational coefficients.  Coefficients with denominator 1 are kept as plain
``int`` so that the common integer case stays fast; everything else is a
:class:`fractions.Fraction`.

Textual form (used for printing, parsing and the CLI)::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := ("+" | "-") factor | atom ("^" INT)?
    atom   := INT | NAME | "(" expr ")"

``NAME`` is an indeterminate of the ring; ``a_3`` is accepted as an alias of
``a3``.  Division is exact division (rational constants always divide).
Printed output lists terms in decreasing graded-lexicographic order, e.g.
``a0^2*a1 - 3/2*a1 + 1``, and parsing it back yields an equal Scalar.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Coeff = Union[int, Fraction]
Monomial = tuple

__all__ = [
    "Ring",
    "Scalar",
    "RingMismatch",
    "InexactDivision",
    "ScalarParseError",
    "det_fraction_free",
    "scalar_exact_div",
]


class RingMismatch(ValueError):
    """Operands live over different indeterminate sets."""


class InexactDivision(ArithmeticError):
    """The divisor does not divide the dividend in the polynomial ring."""


class ScalarParseError(ValueError):
    pass


def _norm(c: Coeff) -> Coeff:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _grlex_key(mono: Monomial):
    return (sum(mono), mono)


class Ring:
    """A declared universe of indeterminates.

    Two rings are compatible when they declare the same names in the same
    order.  ``Ring.standard(k)`` gives ``a0 .. ak``; ``q`` and ``u`` are added
    on request.
    """

    __slots__ = ("names", "_index", "_zero_mono")

    def __init__(self, names: Iterable[str] = ()):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate indeterminate names in {names}")
        for name in names:
            if not re.fullmatch(r"[A-Za-z][A-Za-z0-9]*", name):
                raise ValueError(f"invalid indeterminate name {name!r}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}
        self._zero_mono = (0,) * len(names)

    @classmethod
    def standard(cls, k: int, q: bool = False, u: bool = False) -> "Ring":
        names = [f"a{j}" for j in range(k + 1)]
        if q:
            names.append("q")
        if u:
            names.append("u")
        return cls(names)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Ring({list(self.names)!r})"

    def __contains__(self, name: str) -> bool:
        return name in self._index

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"indeterminate {name!r} not declared in {self!r}") from None

    def zero(self) -> "Scalar":
        return Scalar(self, {})

    def one(self) -> "Scalar":
        return Scalar(self, {self._zero_mono: 1})

    def const(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.ring != self:
                raise RingMismatch(f"{value.ring!r} vs {self!r}")
            return value
        c = _norm(Fraction(value))
        return Scalar(self, {self._zero_mono: c} if c else {})

    def gen(self, name: str) -> "Scalar":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Scalar(self, {tuple(e): 1})

    def a(self, j: int) -> "Scalar":
        return self.gen(f"a{j}")

    def gens(self) -> list:
        return [self.gen(n) for n in self.names]

    def monomial(self, exponents: Mapping[str, int], coeff=1) -> "Scalar":
        e = [0] * self.nvars
        for name, k in exponents.items():
            if k < 0:
                raise ValueError("negative exponent")
            e[self.index(name)] += k
        c = _norm(Fraction(coeff))
        return Scalar(self, {tuple(e): c} if c else {})

    def extend(self, *names: str) -> "Ring":
        return Ring(self.names + tuple(n for n in names if n not in self._index))

    def parse(self, text: str) -> "Scalar":
        return _Parser(self, text).parse()

    def __call__(self, value) -> "Scalar":
        if isinstance(value, str):
            return self.parse(value)
        return self.const(value)


class Scalar:
    """Immutable sparse polynomial with rational coefficients.

    Arithmetic with ``int`` and ``Fraction`` operands coerces them to
    constants of the same ring.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        # ``terms`` is trusted: no zero coefficients, correct tuple width.
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (
            len(self.terms) == 1 and self.ring._zero_mono in self.terms
        )

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant(self) -> Coeff:
        """The rational value of a constant Scalar."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get(self.ring._zero_mono, 0)

    def constant_term(self) -> Coeff:
        return self.terms.get(self.ring._zero_mono, 0)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((m[i] for m in self.terms), default=-1)

    def leading_term(self):
        mono = max(self.terms, key=_grlex_key)
        return mono, self.terms[mono]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = _norm(v + c)
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Scalar(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.ring, {m: -c for m, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return Scalar(self.ring, {})
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        items_b = list(b.items())
        for ma, ca in a.items():
            for mb, cb in items_b:
                m = tuple([x + y for x, y in zip(ma, mb)])
                out[m] = get(m, 0) + ca * cb
        return Scalar(self.ring, {m: _norm(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Scalar":
        c = _norm(Fraction(c))
        if not c:
            return Scalar(self.ring, {})
        return Scalar(self.ring, {m: _norm(v * c) for m, v in self.terms.items()})

    def exact_div(self, divisor) -> "Scalar":
        """Return ``q`` with ``q * divisor == self``.

        Raises :class:`ZeroDivisionError` for a zero divisor and
        :class:`InexactDivision` when no polynomial quotient exists.
        """
        divisor = self._coerce(divisor)
        if divisor is NotImplemented:
            raise TypeError(f"cannot divide by {type(divisor).__name__}")
        d = divisor.terms
        if not d:
            raise ZeroDivisionError("division by the zero Scalar")
        if not self.terms:
            return self
        if len(d) == 1:
            ((dm, dc),) = d.items()
            out = {}
            for m, c in self.terms.items():
                e = tuple([x - y for x, y in zip(m, dm)])
                if min(e, default=0) < 0:
                    raise InexactDivision(f"{divisor} does not divide {self}")
                out[e] = _norm(Fraction(c) / dc)
            return Scalar(self.ring, out)
        return self._long_div(divisor)

    def _long_div(self, divisor: "Scalar") -> "Scalar":
        # Leading-term division with a max-heap of pending monomials.
        lead_m, lead_c = divisor.leading_term()
        rest = [(m, c) for m, c in divisor.terms.items() if m != lead_m]
        rem = dict(self.terms)
        heap = [(-sum(m), tuple(-x for x in m)) for m in rem]
        heapq.heapify(heap)
        quot: dict = {}
        while rem:
            neg_deg, neg_m = heapq.heappop(heap)
            m = tuple(-x for x in neg_m)
            c = rem.pop(m, None)
            if c is None:
                continue
            e = tuple([x - y for x, y in zip(m, lead_m)])
            if min(e, default=0) < 0:
                raise InexactDivision(f"{divisor} does not divide {self}")
            qc = _norm(Fraction(c) / lead_c)
            quot[e] = qc
            for rm, rc in rest:
                t = tuple([x + y for x, y in zip(e, rm)])
                v = rem.get(t)
                if v is None:
                    rem[t] = -qc * rc
                    heapq.heappush(heap, (-sum(t), tuple(-x for x in t)))
                else:
                    v = _norm(v - qc * rc)
                    if v:
                        rem[t] = v
                    else:
                        del rem[t]
        return Scalar(self.ring, quot)

    def __truediv__(self, other):
        return self.exact_div(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other.exact_div(self)

    # -- evaluation -------------------------------------------------------

    def subs(self, values: Mapping[str, object], ring: Ring | None = None) -> "Scalar":
        """Substitute indeterminates by rationals or Scalars.

        The result lives over ``ring`` (default: this Scalar's ring).  Names
        that are not substituted must exist in the target ring.
        """
        target = ring or self.ring
        subst = {}
        for name, v in values.items():
            subst[self.ring.index(name)] = target(v) if not isinstance(v, Scalar) else v
        keep = [
            (i, target.index(n)) for i, n in enumerate(self.ring.names) if i not in subst
        ]
        total = target.zero()
        powers: dict = {}
        for m, c in self.terms.items():
            e = [0] * target.nvars
            for i, j in keep:
                e[j] += m[i]
            term = Scalar(target, {tuple(e): c})
            for i, v in subst.items():
                if m[i]:
                    key = (i, m[i])
                    p = powers.get(key)
                    if p is None:
                        p = powers[key] = v ** m[i]
                    term = term * p
            total = total + term
        return total

    def embed(self, ring: Ring) -> "Scalar":
        """Map into a ring that declares (at least) all names used here."""
        if ring == self.ring:
            return self
        used = set()
        for m in self.terms:
            used.update(i for i, k in enumerate(m) if k)
        pos = {i: ring.index(self.ring.names[i]) for i in used}
        out = {}
        for m, c in self.terms.items():
            e = [0] * ring.nvars
            for i in used:
                e[pos[i]] = m[i]
            out[tuple(e)] = c
        return Scalar(ring, out)

    def coefficients_in(self, name: str, ring: Ring) -> dict:
        """Split off one indeterminate: ``{k: coefficient of name^k}`` over ``ring``."""
        i = self.ring.index(name)
        pos = [ring.index(n) if j != i else None for j, n in enumerate(self.ring.names)]
        out: dict = {}
        for m, c in self.terms.items():
            e = [0] * ring.nvars
            for j, k in enumerate(m):
                if j != i and k:
                    e[pos[j]] = k
            out.setdefault(m[i], {})[tuple(e)] = c
        return {k: Scalar(ring, t) for k, t in out.items()}

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.is_constant() and self.constant() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    # -- text -------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for name, k in zip(self.ring.names, m):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Scalar({str(self)!r})"


def scalar_exact_div(dividend: Scalar, divisor: Scalar) -> Scalar:
    return dividend.exact_div(divisor)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


class _Parser:
    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.text = text
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            mt = _TOKEN.match(text, pos)
            if mt is None:
                raise ScalarParseError(f"cannot tokenize {self.text!r} at {pos}")
            num, name, op = mt.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif name is not None:
                self.tokens.append(("name", name))
            else:
                if op not in "+-*/^()":
                    raise ScalarParseError(f"unexpected {op!r} in {self.text!r}")
                self.tokens.append(("op", op))
            pos = mt.end()
        self.i = 0

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def _take(self):
        tok = self._peek()
        self.i += 1
        return tok

    def parse(self) -> Scalar:
        if not self.tokens:
            raise ScalarParseError("empty expression")
        value = self._expr()
        if self.i != len(self.tokens):
            raise ScalarParseError(f"trailing input in {self.text!r}")
        return value

    def _expr(self):
        value = self._term()
        while self._peek() in (("op", "+"), ("op", "-")):
            op = self._take()[1]
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self):
        value = self._factor()
        while self._peek() in (("op", "*"), ("op", "/")):
            op = self._take()[1]
            rhs = self._factor()
            if op == "*":
                value = value * rhs
            else:
                try:
                    value = value.exact_div(rhs)
                except InexactDivision as exc:
                    raise ScalarParseError(str(exc)) from None
        return value

    def _factor(self):
        kind, val = self._peek()
        if kind == "op" and val in "+-":
            self._take()
            inner = self._factor()
            return -inner if val == "-" else inner
        base = self._atom()
        if self._peek() == ("op", "^"):
            self._take()
            kind, val = self._take()
            if kind != "num":
                raise ScalarParseError(f"exponent must be a non-negative integer in {self.text!r}")
            base = base ** val
        return base

    def _atom(self):
        kind, val = self._take()
        if kind == "num":
            return self.ring.const(val)
        if kind == "name":
            name = val
            if name not in self.ring:
                alias = name.replace("_", "")
                if alias in self.ring:
                    name = alias
                else:
                    raise ScalarParseError(
                        f"indeterminate {val!r} is not declared (have {', '.join(self.ring.names) or 'none'})"
                    )
            return self.ring.gen(name)
        if (kind, val) == ("op", "("):
            inner = self._expr()
            if self._take() != ("op", ")"):
                raise ScalarParseError(f"missing ')' in {self.text!r}")
            return inner
        raise ScalarParseError(f"unexpected token {val!r} in {self.text!r}")


# ---------------------------------------------------------------------------
# determinants


def _div(a, b):
    if isinstance(a, Scalar):
        return a.exact_div(b)
    if isinstance(b, Scalar):
        return b.ring.const(a).exact_div(b)
    return _norm(Fraction(a) / b)


def det_fraction_free(rows: Sequence[Sequence]):
    """Determinant by single-step fraction-free (Bareiss) elimination.

    Works for Scalars as well as plain ``int``/``Fraction`` entries (if any
    entry is a Scalar, all are coerced into its ring).  A zero pivot is
    replaced by the first nonzero entry below it, flipping the sign; a column
    without one makes the determinant 0.  The empty matrix has determinant 1.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    ring = next((v.ring for r in rows for v in r if isinstance(v, Scalar)), None)
    if ring is None:
        m = [[_norm(Fraction(v)) for v in r] for r in rows]
        one, zero = 1, 0
    else:
        m = [[ring.const(v) for v in r] for r in rows]
        one, zero = ring.one(), ring.zero()
    if n == 0:
        return one
    negate = False
    prev = None
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    negate = not negate
                    break
            else:
                return zero
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                if lead:
                    num = row_i[j] * pivot - lead * row_k[j]
                else:
                    num = row_i[j] * pivot
                row_i[j] = num if prev is None else _div(num, prev)
            row_i[k] = zero
        prev = pivot
    result = m[n - 1][n - 1]
    return -result if negate else result
