"""Exact arithmetic for integer Laurent polynomials and their quotients.

Everything here is exact: coefficients are Python integers, quotients are
kept as normalized numerator/denominator pairs, and the w-series expansion
is computed by exact power-series division.  The variable is abstract; the
same class is used for polynomials in t, z and w, with the symbol chosen
at rendering time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping


class LaurentError(ValueError):
    """Raised when an exact operation is impossible (bad division, etc.)."""


class LaurentPoly:
    """An element of Z[t, t^-1], stored sparsely as {exponent: coefficient}.

    Instances are immutable; arithmetic returns new objects.  Zero
    coefficients are never stored.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, a in items:
            if not isinstance(e, int) or not isinstance(a, int):
                raise LaurentError("exponents and coefficients must be int")
            if a:
                c[e] = c.get(e, 0) + a
                if not c[e]:
                    del c[e]
        self._c = c

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def const(cls, a: int) -> "LaurentPoly":
        return cls({0: a})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def var(cls) -> "LaurentPoly":
        return cls({1: 1})

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def min_exp(self) -> int:
        if not self._c:
            raise LaurentError("zero polynomial has no degree")
        return min(self._c)

    @property
    def max_exp(self) -> int:
        if not self._c:
            raise LaurentError("zero polynomial has no degree")
        return max(self._c)

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._c.items())

    def content(self) -> int:
        g = 0
        for a in self._c.values():
            g = gcd(g, a)
        return g

    def at_one(self) -> int:
        return sum(self._c.values())

    def __call__(self, x: Fraction | int) -> Fraction:
        total = Fraction(0)
        for e, a in self._c.items():
            total += a * Fraction(x) ** e
        return total

    def is_symmetric(self) -> bool:
        """True when p(t) == p(1/t)."""
        return all(self._c.get(-e, 0) == a for e, a in self._c.items())

    def even_exponents_only(self) -> bool:
        return all(e % 2 == 0 for e in self._c)

    # -- arithmetic --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -a for e, a in self._c.items()})

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        c = dict(self._c)
        for e, a in other._c.items():
            c[e] = c.get(e, 0) + a
            if not c[e]:
                del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    __radd__ = __add__

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.const(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        c: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + a1 * a2
                if not c[e]:
                    del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise LaurentError("negative powers are not defined for polynomials")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t**k."""
        return LaurentPoly({e + k: a for e, a in self._c.items()})

    def involute(self) -> "LaurentPoly":
        """Substitute t -> 1/t."""
        return LaurentPoly({-e: a for e, a in self._c.items()})

    def scalar_div(self, d: int) -> "LaurentPoly":
        if any(a % d for a in self._c.values()):
            raise LaurentError("coefficients not divisible by %d" % d)
        return LaurentPoly({e: a // d for e, a in self._c.items()})

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / other in Z[t, t^-1]; raises if inexact."""
        if other.is_zero:
            raise LaurentError("division by zero polynomial")
        if self.is_zero:
            return LaurentPoly.zero()
        # Normalize both to ordinary polynomials with nonzero constant term.
        num = self.shift(-self.min_exp)
        den = other.shift(-other.min_exp)
        qshift = self.min_exp - other.min_exp
        quot: dict[int, int] = {}
        rem = num
        dlead = den.max_exp
        dc = den.coeff(dlead)
        while not rem.is_zero and rem.max_exp >= dlead:
            e = rem.max_exp - dlead
            a = rem.coeff(rem.max_exp)
            if a % dc:
                raise LaurentError("inexact polynomial division")
            q = a // dc
            quot[e] = q
            rem = rem - den.shift(e) * q
        if not rem.is_zero:
            raise LaurentError("inexact polynomial division")
        return LaurentPoly(quot).shift(qshift)

    # -- rendering / parsing ----------------------------------------------

    def to_string(self, var: str = "t") -> str:
        """Canonical rendering: terms ordered by |exponent|, non-negative first.

        Examples: ``4 - 2*t - 2*t^-1``, ``1 + z^2``, ``-t + t^2``.
        """
        if not self._c:
            return "0"
        order = sorted(self._c, key=lambda e: (abs(e), e < 0))
        parts: list[str] = []
        for idx, e in enumerate(order):
            a = self._c[e]
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if e == 0:
                body = str(mag)
            else:
                vpart = var if e == 1 else "%s^%d" % (var, e)
                body = vpart if mag == 1 else "%d*%s" % (mag, vpart)
            if idx == 0:
                parts.append(body if a > 0 else "-" + body)
            else:
                parts.append("%s %s" % (sign, body))
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str, var: str = "t") -> "LaurentPoly":
        """Parse the rendering produced by :meth:`to_string` (any term order)."""
        s = text.strip()
        if s == "0":
            return cls.zero()
        token = re.compile(
            r"\s*([+-]?)\s*(?:(\d+)\s*\*\s*)?(?:(\d+)|%s(?:\^(-?\d+))?)" % re.escape(var)
        )
        pos = 0
        terms: list[tuple[int, int]] = []
        while pos < len(s):
            m = token.match(s, pos)
            if not m or m.end() == pos:
                raise LaurentError("cannot parse %r at position %d" % (text, pos))
            sign_s, coeff_s, const_s, exp_s = m.groups()
            if pos and not sign_s:
                raise LaurentError("missing +/- between terms in %r" % text)
            sign = -1 if sign_s == "-" else 1
            if const_s is not None:
                if coeff_s is not None:
                    raise LaurentError("malformed term in %r" % text)
                terms.append((0, sign * int(const_s)))
            else:
                coeff = int(coeff_s) if coeff_s is not None else 1
                exp = int(exp_s) if exp_s is not None else 1
                terms.append((exp, sign * coeff))
            pos = m.end()
        return cls(terms)

    def __repr__(self) -> str:
        return "LaurentPoly(%s)" % self.to_string()


# -- symmetric decompositions ---------------------------------------------

#: w = 2 - t - t^-1, the preferred local coordinate at t = 1.
W_IN_T = LaurentPoly({0: 2, 1: -1, -1: -1})


def symmetric_to_w(p: LaurentPoly) -> LaurentPoly:
    """Rewrite a symmetric Laurent polynomial exactly as a polynomial in w.

    Uses the identity t^k + t^-k in Z[t + t^-1] = Z[2 - w].  Raises
    :class:`LaurentError` when p is not symmetric.
    """
    if not p.is_symmetric():
        raise LaurentError("polynomial is not symmetric under t -> 1/t")
    out = LaurentPoly.zero()
    rem = p
    while not rem.is_zero:
        d = rem.max_exp
        if d < 0:
            raise LaurentError("symmetric reduction failed")
        a = rem.coeff(d)
        if d == 0:
            out += LaurentPoly.const(a)
            break
        # Leading t^d coefficient of w^d is (-1)^d.
        coeff = a if d % 2 == 0 else -a
        out += LaurentPoly.monomial(d, coeff)
        rem = rem - W_IN_T ** d * coeff
    return out


def w_to_t(p_w: LaurentPoly) -> LaurentPoly:
    """Substitute w = 2 - t - t^-1 into a polynomial in w."""
    out = LaurentPoly.zero()
    for e, a in p_w.items():
        if e < 0:
            raise LaurentError("negative powers of w are not substitutable")
        out += W_IN_T ** e * a
    return out


def to_w_basis(p: LaurentPoly) -> list[int]:
    """Coefficients [b_1, b_2, ...] with p = sum b_k * w^k, exactly.

    Requires p symmetric with p(1) = 0; both are checked.
    """
    if p.at_one() != 0:
        raise LaurentError("polynomial does not vanish at t = 1")
    pw = symmetric_to_w(p)
    if pw.coeff(0):
        raise LaurentError("w-expansion has a constant term")  # unreachable
    if pw.is_zero:
        return []
    return [pw.coeff(k) for k in range(1, pw.max_exp + 1)]


def substitute_z2(p_z: LaurentPoly) -> LaurentPoly:
    """Substitute z^2 = t - 2 + t^-1 into an even polynomial in z."""
    if not p_z.even_exponents_only():
        raise LaurentError("polynomial has odd powers of z")
    z2 = -W_IN_T  # z^2 = -(2 - t - t^-1)
    out = LaurentPoly.zero()
    for e, a in p_z.items():
        if e < 0:
            raise LaurentError("negative powers of z are not substitutable")
        out += z2 ** (e // 2) * a
    return out


def alexander_from_conway(nabla: LaurentPoly) -> LaurentPoly:
    """Alexander polynomial (symmetric normalization) of a knot from its Conway polynomial."""
    return substitute_z2(nabla)


def conway_normalize(delta: LaurentPoly) -> LaurentPoly:
    """Conway polynomial of a knot from a symmetric Alexander polynomial.

    The input must be symmetric with delta(1) = +-1; the output is a
    polynomial in z with constant term +1 and even powers only.
    """
    v = delta.at_one()
    if v not in (1, -1):
        raise LaurentError("Alexander polynomial must evaluate to +-1 at t = 1")
    if v == -1:
        delta = -delta
    pw = symmetric_to_w(delta)
    # w = -z^2
    out = LaurentPoly.zero()
    for e, a in pw.items():
        out += LaurentPoly.monomial(2 * e, a if e % 2 == 0 else -a)
    return out


# -- rational functions ----------------------------------------------------


@dataclass(frozen=True)
class RationalLaurent:
    """A quotient of integer Laurent polynomials, kept in a canonical form.

    Canonical form: the denominator's lowest-degree term sits at exponent 0
    with positive coefficient, and the integer content common to numerator
    and denominator is removed.  Equality is therefore structural.
    """

    num: LaurentPoly
    den: LaurentPoly

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den.is_zero:
            raise LaurentError("zero denominator")
        if num.is_zero:
            object.__setattr__(self, "num", LaurentPoly.zero())
            object.__setattr__(self, "den", LaurentPoly.one())
            return
        shift = -den.min_exp
        num = num.shift(shift)
        den = den.shift(shift)
        if den.coeff(den.min_exp) < 0:
            num, den = -num, -den
        g = gcd(num.content(), den.content())
        if g > 1:
            num = num.scalar_div(g)
            den = den.scalar_div(g)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalLaurent":
        return cls(p, LaurentPoly.one())

    @classmethod
    def from_int(cls, a: int) -> "RationalLaurent":
        return cls.from_poly(LaurentPoly.const(a))

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        if self.den == LaurentPoly.one():
            return True
        try:
            self.num.exact_div(self.den)
            return True
        except LaurentError:
            return False

    def as_poly(self) -> LaurentPoly:
        return self.num.exact_div(self.den)

    def is_symmetric(self) -> bool:
        return self.num * self.den.involute() == self.num.involute() * self.den

    def at_one(self) -> Fraction:
        d = self.den.at_one()
        if d == 0:
            raise LaurentError("denominator vanishes at t = 1")
        return Fraction(self.num.at_one(), d)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "RationalLaurent | LaurentPoly | int") -> "RationalLaurent":
        other = _coerce(other)
        return RationalLaurent(self.num * other.den + other.num * self.den,
                               self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalLaurent":
        return RationalLaurent(-self.num, self.den)

    def __sub__(self, other: "RationalLaurent | LaurentPoly | int") -> "RationalLaurent":
        return self + (-_coerce(other))

    def __rsub__(self, other: "RationalLaurent | LaurentPoly | int") -> "RationalLaurent":
        return _coerce(other) + (-self)

    def __mul__(self, other: "RationalLaurent | LaurentPoly | int") -> "RationalLaurent":
        other = _coerce(other)
        return RationalLaurent(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalLaurent":
        if self.is_zero:
            raise LaurentError("cannot invert zero")
        return RationalLaurent(self.den, self.num)

    def involute(self) -> "RationalLaurent":
        return RationalLaurent(self.num.involute(), self.den.involute())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (LaurentPoly, int)):
            other = _coerce(other)
        if not isinstance(other, RationalLaurent):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def to_string(self, var: str = "t") -> str:
        if self.den == LaurentPoly.one():
            return self.num.to_string(var)
        return "(%s) / (%s)" % (self.num.to_string(var), self.den.to_string(var))

    def __repr__(self) -> str:
        return "RationalLaurent(%s)" % self.to_string()


def _coerce(x: "RationalLaurent | LaurentPoly | int") -> RationalLaurent:
    if isinstance(x, RationalLaurent):
        return x
    if isinstance(x, LaurentPoly):
        return RationalLaurent.from_poly(x)
    if isinstance(x, int):
        return RationalLaurent.from_int(x)
    raise TypeError("cannot coerce %r" % (x,))


# -- w-series ---------------------------------------------------------------


@dataclass(frozen=True)
class WSeries:
    """Truncated power series sum b_k w^k, k = 1..order, with integer b_k."""

    coeffs: tuple[int, ...]
    order: int

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.order:
            raise LaurentError("coefficient count does not match order")
        if any(not isinstance(b, int) for b in self.coeffs):
            raise LaurentError("w-series coefficients must be integers")

    def beta(self, k: int) -> int:
        if not 1 <= k <= self.order:
            raise LaurentError("k out of range")
        return self.coeffs[k - 1]

    def to_string(self) -> str:
        return LaurentPoly({k + 1: b for k, b in enumerate(self.coeffs)}).to_string("w")

    def __repr__(self) -> str:
        return "WSeries(%s + O(w^%d))" % (self.to_string(), self.order + 1)


def expand_rational_w(r: RationalLaurent, order: int) -> WSeries:
    """w-adic expansion of a symmetric rational function vanishing at t = 1.

    The quotient is rewritten with symmetric numerator and denominator,
    both converted exactly to Z[w], then divided as power series.  The
    coefficients must come out integral and the constant term zero; either
    failure raises :class:`LaurentError`.
    """
    if order < 0:
        raise LaurentError("order must be nonnegative")
    if r.is_zero:
        return WSeries((0,) * order, order)
    if not r.is_symmetric():
        raise LaurentError("function is not symmetric under t -> 1/t")
    num = r.num * r.den.involute()
    den = r.den * r.den.involute()
    a = symmetric_to_w(num)
    b = symmetric_to_w(den)
    # Cancel common factors of w so the denominator has a unit constant term.
    while not a.is_zero and a.coeff(0) == 0 and b.coeff(0) == 0:
        a = a.exact_div(LaurentPoly.var())
        b = b.exact_div(LaurentPoly.var())
    if b.coeff(0) == 0:
        raise LaurentError("denominator vanishes at t = 1 with no matching numerator zero")
    b0 = b.coeff(0)
    cs: list[Fraction] = []
    for k in range(order + 1):
        acc = Fraction(a.coeff(k))
        for j in range(k):
            acc -= cs[j] * b.coeff(k - j)
        cs.append(acc / b0)
    if cs[0] != 0:
        raise LaurentError("series has a nonzero constant term (does not vanish at t = 1)")
    out: list[int] = []
    for k in range(1, order + 1):
        if cs[k].denominator != 1:
            raise LaurentError("w-series coefficient b_%d is not an integer" % k)
        out.append(int(cs[k]))
    return WSeries(tuple(out), order)


# -- determinants ------------------------------------------------------------


def det_laurent(matrix: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant of a square matrix over Z[t, t^-1], computed exactly.

    Cofactor expansion for size <= 4; fraction-free Bareiss elimination
    (whose divisions are exact by construction) above that.
    """
    n = len(matrix)
    if n == 0:
        return LaurentPoly.one()
    for row in matrix:
        if len(row) != n:
            raise LaurentError("matrix is not square")
    if n <= 4:
        return _det_cofactor(matrix)
    return _det_bareiss(matrix)


def _det_cofactor(m: list[list[LaurentPoly]]) -> LaurentPoly:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = LaurentPoly.zero()
    for j in range(n):
        if m[0][j].is_zero:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _det_bareiss(m: list[list[LaurentPoly]]) -> LaurentPoly:
    a = [row[:] for row in m]
    n = len(a)
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if a[k][k].is_zero:
            for i in range(k + 1, n):
                if not a[i][k].is_zero:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det
