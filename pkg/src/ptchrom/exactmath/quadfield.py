"""Exact arithmetic in the real quadratic field Q(sqrt 5)."""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

SQRT5_FLOAT = math.sqrt(5.0)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


class QuadNum:
    """The number ``a + b*sqrt(5)`` with rational ``a`` and ``b``."""

    __slots__ = ("_a", "_b")

    def __init__(self, a=0, b=0) -> None:
        self._a = _frac(a)
        self._b = _frac(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def coerce(cls, x) -> QuadNum:
        if isinstance(x, QuadNum):
            return x
        return cls(_frac(x), 0)

    @classmethod
    def parse(cls, text: str) -> QuadNum:
        """Inverse of ``str``: accepts ``3``, ``-13+6√5``, ``(-15+7√5)/2``, ``sqrt5`` for ``√5``."""
        t = text.strip().replace(" ", "").replace("sqrt5", "√5").replace("−", "-")
        den = Fraction(1)
        m = re.fullmatch(r"\((.*)\)/(\d+)", t)
        if m:
            t, den = m.group(1), Fraction(int(m.group(2)))
        terms = re.findall(r"[+-]?[^+-]+", t)
        if not terms or "".join(terms) != t:
            raise ValueError(f"cannot parse {text!r} as a + b√5")
        a = b = Fraction(0)
        for term in terms:
            m = re.fullmatch(r"([+-]?)(\d+(?:/\d+)?)?(√5)?", term)
            if m is None or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot parse {text!r} as a + b√5")
            v = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            if m.group(1) == "-":
                v = -v
            if m.group(3):
                b += v
            else:
                a += v
        return cls(a / den, b / den)

    def conjugate(self) -> QuadNum:
        return QuadNum(self._a, -self._b)

    def norm(self) -> Fraction:
        return self._a * self._a - 5 * self._b * self._b

    def is_rational(self) -> bool:
        return self._b == 0

    def sign(self) -> int:
        """Exact sign of the real number ``a + b*sqrt(5)``."""
        a, b = self._a, self._b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 against 5 b^2
        diff = a * a - 5 * b * b
        if diff == 0:
            return 0
        return sa if diff > 0 else sb

    def __abs__(self) -> QuadNum:
        return -self if self.sign() < 0 else self

    def __float__(self) -> float:
        a, b = self._a, self._b
        if a and b and (a > 0) != (b > 0):
            # opposite signs cancel; use a + b sqrt5 = norm / (a - b sqrt5)
            return float(self.norm()) / (float(a) - float(b) * SQRT5_FLOAT)
        return float(a) + float(b) * SQRT5_FLOAT

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __eq__(self, other) -> bool:
        try:
            o = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self._a == o._a and self._b == o._b

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - other).sign() >= 0

    def __neg__(self) -> QuadNum:
        return QuadNum(-self._a, -self._b)

    def __pos__(self) -> QuadNum:
        return self

    def __add__(self, other) -> QuadNum:
        try:
            o = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadNum(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __sub__(self, other) -> QuadNum:
        try:
            o = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadNum(self._a - o._a, self._b - o._b)

    def __rsub__(self, other) -> QuadNum:
        return (-self) + other

    def __mul__(self, other) -> QuadNum:
        try:
            o = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadNum(
            self._a * o._a + 5 * self._b * o._b,
            self._a * o._b + self._b * o._a,
        )

    __rmul__ = __mul__

    def inverse(self) -> QuadNum:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QuadNum division by zero")
        return QuadNum(self._a / n, -self._b / n)

    def __truediv__(self, other) -> QuadNum:
        try:
            o = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> QuadNum:
        return QuadNum.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> QuadNum:
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = QuadNum(1)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self) -> str:
        return f"QuadNum({self._a!s}, {self._b!s})"

    def __str__(self) -> str:
        """Render as e.g. ``-13+6√5`` or ``(-15+7√5)/2``."""
        a, b = self._a, self._b
        if b == 0:
            return str(a)
        den = math.lcm(a.denominator, b.denominator)
        an, bn = a * den, b * den
        if bn == 1:
            rad = "√5"
        elif bn == -1:
            rad = "-√5"
        else:
            rad = f"{bn}√5"
        if an == 0:
            body = rad
        else:
            body = f"{an}{'+' if bn > 0 else ''}{rad}"
        return body if den == 1 else f"({body})/{den}"


SQRT5 = QuadNum(0, 1)
TAU = QuadNum(Fraction(1, 2), Fraction(1, 2))
TAU_PLUS_1 = TAU + 1
TAU_MINUS_1 = TAU - 1
TAU_MINUS_2 = TAU - 2
