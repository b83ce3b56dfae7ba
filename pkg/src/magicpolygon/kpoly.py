"""Polynomials in one variable k over Q and their fraction field.

Only what exact row reduction needs: ring operations, Euclidean division,
gcd, and normalized rational functions.  Coefficients are ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Number = Union[int, Fraction]


class KPolynomial:
    """Coefficients low degree first; trailing zeros are stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: Number) -> "KPolynomial":
        return cls([c])

    @classmethod
    def k(cls) -> "KPolynomial":
        return cls([0, 1])

    @classmethod
    def linear(cls, slope: Number, intercept: Number) -> "KPolynomial":
        return cls([intercept, slope])

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, k: Number) -> Fraction:
        if isinstance(k, int) and all(c.denominator == 1 for c in self.coeffs):
            acc = 0
            for c in reversed(self.coeffs):
                acc = acc * k + c.numerator
            return Fraction(acc)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = KPolynomial.constant(other)
        if not isinstance(other, KPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return KPolynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return KPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return KPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return KPolynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "KPolynomial"):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        lead = other.lead
        d = other.degree
        while len(rem) - 1 >= d and any(rem):
            shift = len(rem) - 1 - d
            factor = rem[-1] / lead
            quot[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return KPolynomial(quot), KPolynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "KPolynomial":
        if self.is_zero():
            return self
        lead = self.lead
        return KPolynomial(c / lead for c in self.coeffs)

    def __repr__(self):
        return f"KPolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "k" if power == 1 else f"k^{power}"
                body = var if mag == 1 else f"{mag}{var}" if mag.denominator == 1 else f"({mag}){var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += sign + body
        return out


def _as_poly(x):
    if isinstance(x, KPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return KPolynomial.constant(x)
    return None


def poly_gcd(a: KPolynomial, b: KPolynomial) -> KPolynomial:
    """Monic gcd; gcd(0, 0) is 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class RationalFunction:
    """num/den in lowest terms with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = _as_poly(num), _as_poly(den)
        if num is None or den is None:
            raise TypeError("numerator and denominator must be polynomials or rationals")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = KPolynomial(), KPolynomial.constant(1)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.lead
        self.num = KPolynomial(c / lead for c in num.coeffs)
        self.den = KPolynomial(c / lead for c in den.coeffs)

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        return x if isinstance(x, RationalFunction) else cls(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __bool__(self):
        return not self.is_zero()

    def __call__(self, k: Number) -> Fraction:
        d = self.den(k)
        if d == 0:
            raise ZeroDivisionError(f"pole at k={k}")
        return self.num(k) / d

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, KPolynomial)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __add__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_rf(other) - self

    def __mul__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_rf(other) / self

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)  # monic constant denominator is 1
        return f"({self.num})/({self.den})"


def _as_rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction, KPolynomial)):
        return RationalFunction(x)
    return None
