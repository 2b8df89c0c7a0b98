"""Dense univariate polynomials and rational functions in ``q`` over Q."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from ptchrom.exactmath.quadfield import QuadNum


class ExactDivisionError(ArithmeticError):
    """Raised when a polynomial division that must be exact leaves a remainder."""


def _to_frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as a rational coefficient")


class Polynomial:
    """Immutable dense polynomial; ``coeffs[i]`` multiplies ``q**i``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()) -> None:
        c = [_to_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[Fraction, ...] = tuple(c)

    # constructors -----------------------------------------------------
    @classmethod
    def q(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> Polynomial:
        return cls((c,))

    @classmethod
    def coerce(cls, x) -> Polynomial:
        if isinstance(x, Polynomial):
            return x
        return cls((x,))

    @classmethod
    def from_roots(cls, roots: Iterable) -> Polynomial:
        q = cls.q()
        return reduce(lambda acc, r: acc * (q - r), roots, cls.const(1))

    @classmethod
    def falling(cls, s: int) -> Polynomial:
        """``q(q-1)...(q-s+1)``, the chromatic polynomial of K_s."""
        return cls.from_roots(range(s))

    # accessors --------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def __getitem__(self, i: int) -> Fraction:
        return self._c[i] if 0 <= i < len(self._c) else Fraction(0)

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Polynomial.const(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    # arithmetic -------------------------------------------------------
    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self._c)

    def __pos__(self) -> Polynomial:
        return self

    def __add__(self, other) -> Polynomial:
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        o = Polynomial.coerce(other)._c
        a = self._c
        n = max(len(a), len(o))
        return Polynomial(
            (a[i] if i < len(a) else 0) + (o[i] if i < len(o) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __sub__(self, other) -> Polynomial:
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return Polynomial.coerce(other) - self

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self._c)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Euclidean division over Q."""
        other = Polynomial.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        d = other.degree
        lc = other.leading
        if len(rem) - 1 < d:
            return Polynomial(), self
        quo = [Fraction(0)] * (len(rem) - d)
        oc = other._c
        for k in range(len(rem) - 1 - d, -1, -1):
            coef = rem[k + d] / lc
            quo[k] = coef
            if coef:
                for j in range(d + 1):
                    rem[k + j] -= coef * oc[j]
        return Polynomial(quo), Polynomial(rem[:d])

    def __floordiv__(self, other) -> Polynomial:
        return self.divmod(other)[0]

    def __mod__(self, other) -> Polynomial:
        return self.divmod(other)[1]

    def exact_div(self, other) -> Polynomial:
        quo, rem = self.divmod(other)
        if rem:
            raise ExactDivisionError(f"{self} is not divisible by {other}")
        return quo

    def divides(self, other: Polynomial) -> bool:
        """True iff ``self`` divides ``other``."""
        return not (Polynomial.coerce(other) % self)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / other)
        if isinstance(other, Polynomial):
            return RationalFunction(self, other)
        return NotImplemented

    # evaluation -------------------------------------------------------
    def __call__(self, x):
        """Horner evaluation; works for ints, Fractions, floats, complex and QuadNum."""
        if isinstance(x, QuadNum):
            return self.eval_quad(x)
        if isinstance(x, Polynomial):
            return self.compose(x)
        if isinstance(x, (float, complex)):
            acc = 0.0 if isinstance(x, float) else 0j
            for c in reversed(self._c):
                acc = acc * x + float(c)
            return acc
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def eval_quad(self, x: QuadNum) -> QuadNum:
        acc = QuadNum(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def compose(self, inner: Polynomial) -> Polynomial:
        acc = Polynomial()
        for c in reversed(self._c):
            acc = acc * inner + c
        return acc

    def shift(self, c) -> Polynomial:
        """Exact Taylor shift: the polynomial ``p(q + c)``."""
        a = list(self._c)
        c = _to_frac(c)
        n = len(a)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                a[j] += c * a[j + 1]
        return Polynomial(a)

    def derivative(self) -> Polynomial:
        return Polynomial(i * c for i, c in enumerate(self._c) if i)

    def monic(self) -> Polynomial:
        if not self._c:
            return self
        return self * (1 / self.leading)

    def integer_coeffs(self) -> list[int]:
        """Primitive integer coefficient list with positive leading coefficient."""
        if not self._c:
            return []
        den = reduce(math.lcm, (c.denominator for c in self._c), 1)
        ints = [int(c * den) for c in self._c]
        g = reduce(math.gcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        return [x // g for x in ints]

    def gcd(self, other: Polynomial) -> Polynomial:
        """Monic greatest common divisor (zero if both are zero)."""
        a = _int_poly(self)
        b = _int_poly(Polynomial.coerce(other))
        while b:
            a, b = b, _primitive(_prem(a, b))
        return Polynomial(a).monic() if a else Polynomial()

    def square_free(self) -> Polynomial:
        """Square-free part ``p / gcd(p, p')``, made monic."""
        if self.degree <= 0:
            return self.monic()
        return self.exact_div(self.gcd(self.derivative())).monic()

    def multiplicity(self, factor: Polynomial) -> int:
        k, p = 0, self
        while p and factor.degree > 0:
            quo, rem = p.divmod(factor)
            if rem:
                break
            p, k = quo, k + 1
        return k

    def to_floats(self) -> list[float]:
        return [float(c) for c in self._c]

    # rendering --------------------------------------------------------
    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self._c]})"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "q") -> str:
        if not self._c:
            return "0"
        parts: list[str] = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                if mag == 1:
                    body = mono
                elif mag.denominator == 1:
                    body = f"{mag}{mono}"
                else:
                    body = f"({mag}){mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def format_factored(self, var: str = "q") -> str:
        """Pull out powers of ``q-k`` for k = 0..3 and show the cofactor."""
        if self.degree <= 0:
            return self.format(var)
        rest = self
        pieces: list[str] = []
        for k in range(4):
            lin = Polynomial((-k, 1))
            e = rest.multiplicity(lin)
            if e:
                rest = rest.exact_div(lin**e)
                base = var if k == 0 else f"({var}-{k})"
                pieces.append(base if e == 1 else f"{base}^{e}")
        if rest.degree > 0:
            pieces.append(f"({rest.format(var).replace(' ', '')})")
            lead = Fraction(1)
        else:
            lead = rest.leading
        prefix = "" if lead == 1 else ("-" if lead == -1 else f"{lead}*")
        return prefix + ("".join(pieces) if pieces else "1")


# integer polynomial helpers (lists of int, low -> high) -----------------


def _int_poly(p: Polynomial) -> list[int]:
    return p.integer_coeffs()


def _primitive(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    if not a:
        return a
    g = reduce(math.gcd, a, 0)
    if a[-1] < 0:
        g = -g
    return [x // g for x in a]


def _prem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Pseudo-remainder of ``a`` by ``b`` scaled by ``|lc(b)|**(da-db+1)``."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    scale_sign = 1 if lc > 0 else -1
    alc = abs(lc)
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        lead = r[-1]
        r = [x * alc for x in r]
        f = lead * scale_sign
        for j in range(db + 1):
            r[k + j] -= f * b[j]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def int_sign_at(a: Sequence[int], x: Fraction) -> int:
    """Exact sign of an integer polynomial at a rational point."""
    num, den = x.numerator, x.denominator
    acc = 0
    pw = 1
    for c in reversed(a):
        acc = acc * num + c * pw
        pw *= den
    # acc = den**deg * p(x) up to a positive factor
    return (acc > 0) - (acc < 0)


class RationalFunction:
    """Quotient ``num/den`` of polynomials, kept in lowest terms with monic ``den``."""

    __slots__ = ("_num", "_den")

    def __init__(self, num, den=None) -> None:
        num = Polynomial.coerce(num)
        den = Polynomial.const(1) if den is None else Polynomial.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self._num, self._den = Polynomial(), Polynomial.const(1)
            return
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lc = den.leading
        self._num = num * (1 / lc)
        self._den = den * (1 / lc)

    @classmethod
    def coerce(cls, x) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return x
        return cls(Polynomial.coerce(x))

    @property
    def num(self) -> Polynomial:
        return self._num

    @property
    def den(self) -> Polynomial:
        return self._den

    def is_polynomial(self) -> bool:
        return self._den.degree == 0

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ExactDivisionError(f"{self} is not a polynomial")
        return self._num

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self._num * o._den == o._num * self._den

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self._num, self._den)

    def __add__(self, other) -> RationalFunction:
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self._num * o._den + o._num * self._den, self._den * o._den)

    __radd__ = __add__

    def __sub__(self, other) -> RationalFunction:
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> RationalFunction:
        return RationalFunction.coerce(other) - self

    def __mul__(self, other) -> RationalFunction:
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self._num * o._num, self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFunction:
        o = RationalFunction.coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("rational function division by zero")
        return RationalFunction(self._num * o._den, self._den * o._num)

    def __rtruediv__(self, other) -> RationalFunction:
        return RationalFunction.coerce(other) / self

    def __pow__(self, k: int) -> RationalFunction:
        if k < 0:
            return RationalFunction(self._den**-k, self._num**-k)
        return RationalFunction(self._num**k, self._den**k)

    def __call__(self, x):
        d = self._den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at {x}")
        return self._num(x) / d

    def __repr__(self) -> str:
        return f"RationalFunction({self._num!r}, {self._den!r})"

    def __str__(self) -> str:
        if self.is_polynomial():
            return self._num.format_factored()
        return f"{self._num.format_factored()} / {self._den.format_factored()}"


Q = Polynomial.q()
