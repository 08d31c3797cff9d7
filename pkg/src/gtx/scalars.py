"""Exact scalars: rationals, rational binomials and univariate rational functions.

Every scalar in the package is a ``gmpy2.mpq``.  Rational functions live in a
single formal variable ``t`` and are kept in lowest terms with a monic
denominator, so the order of a zero or pole at ``t = 0`` can be read off the
coefficient lists directly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from gmpy2 import mpq

Rational = type(mpq(0))
RationalLike = Union[int, str, Fraction, "mpq"]

ZERO = mpq(0)
ONE = mpq(1)
HALF = mpq(1, 2)


class PoleAtPoint(ArithmeticError):
    """A rational function was evaluated where its denominator vanishes."""


def Q(value: RationalLike, den: int | None = None) -> Rational:
    """Coerce ints, "a/b" strings and Fractions to an exact rational."""
    if den is not None:
        return mpq(value, den)
    if isinstance(value, Rational):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a string or Fraction")
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return mpq(value.strip())
    return mpq(value)


def fmt(q: Rational) -> str:
    # str(mpq) already drops a unit denominator: "-3/2", "5"
    return str(q)


def is_integer(q: Rational) -> bool:
    return q.denominator == 1


def is_nonneg_integer(q: Rational) -> bool:
    return q.denominator == 1 and q >= 0


def binom_rational(a: RationalLike, i: int) -> Rational:
    """a(a-1)...(a-i+1)/i! for rational ``a``."""
    if i < 0:
        raise ValueError("binomial index must be nonnegative")
    a = Q(a)
    out = ONE
    for j in range(i):
        out = out * (a - j) / (j + 1)
    return out


# --------------------------------------------------------------------------
# polynomials in t, coefficients low degree first


class Poly:
    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Q(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def const(cls, a) -> "Poly":
        return cls((a,))

    @classmethod
    def linear(cls, a, b) -> "Poly":
        """a + b*t"""
        return cls((a, b))

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def lead(self) -> Rational:
        return self.c[-1]

    def _coerce(self, other) -> "Poly":
        return other if isinstance(other, Poly) else Poly((other,))

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-x for x in self.c])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.c or not other.c:
            return Poly()
        out = [ZERO] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if x == 0:
                continue
            for j, y in enumerate(other.c):
                out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return self.c == self._coerce(other).c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Poly({[fmt(x) for x in self.c]})"

    def scale(self, a) -> "Poly":
        return Poly([a * x for x in self.c])

    def __call__(self, t0) -> Rational:
        acc = ZERO
        for x in reversed(self.c):
            acc = acc * t0 + x
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * x for i, x in enumerate(self.c)][1:])

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        dq = other.degree
        inv = 1 / other.lead()
        quo = [ZERO] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            coef = rem[i] * inv
            if coef == 0:
                continue
            quo[i - dq] = coef
            for j, y in enumerate(other.c):
                rem[i - dq + j] -= coef * y
        return Poly(quo), Poly(rem[:dq] if dq > 0 else [])

    def monic(self) -> "Poly":
        return self.scale(1 / self.lead()) if self.c else self


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else Poly((1,))


T = Poly.linear(0, 1)


class RationalFunction1V:
    """num(t)/den(t), coprime, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly.const(num)
        den = Poly((1,)) if den is None else (den if isinstance(den, Poly) else Poly.const(den))
        if den.is_zero():
            raise ZeroDivisionError("denominator is identically zero")
        if num.is_zero():
            self.num, self.den = Poly(), Poly((1,))
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
        lead = den.lead()
        if lead != 1:
            num, den = num.scale(1 / lead), den.scale(1 / lead)
        self.num, self.den = num, den

    def _coerce(self, other):
        if isinstance(other, RationalFunction1V):
            return other
        return RationalFunction1V(other)

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            return RationalFunction1V(self.num + o.num, self.den)
        return RationalFunction1V(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction1V(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalFunction1V(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction1V(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other):
        o = self._coerce(other)
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"({self.num!r})/({self.den!r})"

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def pole_order_at_zero(self) -> int:
        """Multiplicity of t as a factor of the (reduced) denominator."""
        order = 0
        for x in self.den.c:
            if x != 0:
                break
            order += 1
        return order

    def derivative(self) -> "RationalFunction1V":
        n, d = self.num, self.den
        return RationalFunction1V(n.derivative() * d - n * d.derivative(), d * d)


def rf_eval(f: RationalFunction1V, t0: RationalLike) -> Rational:
    t0 = Q(t0)
    d = f.den(t0)
    if d == 0:
        raise PoleAtPoint(f"denominator of {f!r} vanishes at t={fmt(t0)}")
    return f.num(t0) / d


def rf_derivative_at_zero(f: RationalFunction1V) -> Rational:
    """Half the derivative at t = 0, i.e. the operator (d/dv21 - d/dv22)/2
    after substituting v21 = x+t, v22 = x-t."""
    n, d = f.num.c, f.den.c
    d0 = d[0] if d else ZERO
    if d0 == 0:
        raise PoleAtPoint(f"{f!r} has a pole at t=0")
    n0 = n[0] if n else ZERO
    n1 = n[1] if len(n) > 1 else ZERO
    d1 = d[1] if len(d) > 1 else ZERO
    return HALF * (n1 * d0 - n0 * d1) / (d0 * d0)


def parse_rational_list(text: str | Sequence) -> list[Rational]:
    if isinstance(text, str):
        return [Q(x) for x in text.split(",") if x.strip()]
    return [Q(x) for x in text]
