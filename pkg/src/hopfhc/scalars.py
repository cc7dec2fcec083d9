"""Exact scalars: rationals (``fractions.Fraction``) and rational functions in q.

Rational functions are kept as reduced fractions of polynomials with
rational coefficients and a monic denominator, so ``==`` is a syntactic
comparison.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

Poly = tuple  # coefficients low -> high, no trailing zeros; () is zero


def _trim(coeffs) -> Poly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(Fraction(c) for c in coeffs)


def poly_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def poly_neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        factor = rem[-1] / lead
        quot[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        rem = list(_trim(rem))
    return _trim(quot), _trim(rem)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return ()
    lead = a[-1]
    return tuple(c / lead for c in a)


def poly_eval(a: Poly, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _format_poly(p: Poly, var: str = "q") -> str:
    if not p:
        return "0"
    parts = []
    for i, c in enumerate(p):
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and c == 1:
            parts.append(mono)
        elif mono and c == -1:
            parts.append("-" + mono)
        elif mono:
            parts.append(f"{c}*{mono}")
        else:
            parts.append(str(c))
    return " + ".join(parts).replace("+ -", "- ")


class RatFun:
    """An element of Q(q), stored reduced with a monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=(Fraction(1),), _reduced=False):
        num = _trim(num)
        den = _trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if not num:
                den = (Fraction(1),)
            else:
                g = poly_gcd(num, den)
                if len(g) > 1:
                    num = poly_divmod(num, g)[0]
                    den = poly_divmod(den, g)[0]
                lead = den[-1]
                if lead != 1:
                    num = tuple(c / lead for c in num)
                    den = tuple(c / lead for c in den)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def q(cls) -> "RatFun":
        return cls((0, 1))

    @classmethod
    def coerce(cls, x) -> "RatFun":
        if isinstance(x, RatFun):
            return x
        if isinstance(x, (int, Rational)):
            return cls((Fraction(x),), _reduced=True) if x else cls(())
        return NotImplemented

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = RatFun.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            if len(self.den) == 1 and len(self.num) <= 1:
                self._hash = hash(self.num[0] if self.num else 0)
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def __add__(self, other):
        other = RatFun.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFun(poly_add(self.num, other.num), self.den)
        return RatFun(
            poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den)),
            poly_mul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFun(poly_neg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        other = RatFun.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = RatFun.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(poly_mul(self.num, other.num), poly_mul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if not self.num:
            raise ZeroDivisionError("RatFun division by zero")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        other = RatFun.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFun.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = RatFun.coerce(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def evaluate(self, x):
        return poly_eval(self.num, Fraction(x)) / poly_eval(self.den, Fraction(x))

    def __repr__(self):
        if self.den == (1,):
            return f"RatFun({_format_poly(self.num)})"
        return f"RatFun(({_format_poly(self.num)})/({_format_poly(self.den)}))"

    def __str__(self):
        if self.den == (1,):
            return _format_poly(self.num)
        return f"({_format_poly(self.num)})/({_format_poly(self.den)})"


def is_root_of_unity(x) -> bool:
    """True for exact rationals 1 and -1 (the only rational roots of unity)."""
    if isinstance(x, RatFun):
        return False
    return x == 1 or x == -1


def scalar_str(c) -> str:
    return str(c)
