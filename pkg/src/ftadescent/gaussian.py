"""Exact arithmetic over the Gaussian rationals Q(i).

Both components are :class:`fractions.Fraction` values, which are always
kept in lowest terms with a positive denominator, so equality is exact.
Mixing with ``float``/``complex`` operands degrades to a Python ``complex``
the same way ``Fraction`` degrades to ``float``.
"""

import re
from fractions import Fraction
from numbers import Complex, Rational

__all__ = ["GaussianRational", "gq_field_op", "gq_pow", "gq_signs", "I", "ONE", "ZERO"]


def _sign(q):
    return (q > 0) - (q < 0)


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, str):
            if im != 0:
                raise TypeError("text form takes no imaginary argument")
            parsed = GaussianRational.parse(re)
            re, im = parsed.re, parsed.im
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("floats are not exact; pass Fraction or str")
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    @classmethod
    def coerce(cls, x):
        """Return ``x`` as a GaussianRational, or ``None`` if it is inexact."""
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Rational)) and not isinstance(x, bool):
            return cls(x)
        return None

    # -- text form "p/q+r/s i" -------------------------------------------

    _TEXT = re.compile(
        r"^\s*([+-]?\d+(?:/\d+)?)?\s*(?:([+-])\s*(\d+(?:/\d+)?)?\s*i)?\s*$"
    )

    @classmethod
    def parse(cls, text):
        m = cls._TEXT.match(text)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"not a Gaussian rational: {text!r}")
        re_part = Fraction(m.group(1)) if m.group(1) else Fraction(0)
        im_part = Fraction(0)
        if m.group(2):
            im_part = Fraction(m.group(3)) if m.group(3) else Fraction(1)
            if m.group(2) == "-":
                im_part = -im_part
        return cls(re_part, im_part)

    def __str__(self):
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self):
        return f"GaussianRational('{self}')"

    # -- comparisons / conversions ---------------------------------------

    def __eq__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            if isinstance(other, Complex):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm2(self):
        """|z|^2 as an exact Fraction; the modulus itself is never taken."""
        return self.re * self.re + self.im * self.im

    # -- arithmetic ------------------------------------------------------

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return complex(self) + other if isinstance(other, Complex) else NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return complex(self) - other if isinstance(other, Complex) else NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return complex(self) * other if isinstance(other, Complex) else NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return complex(self) / other if isinstance(other, Complex) else NotImplemented
        d = o.norm2()
        if d == 0:
            raise ZeroDivisionError("Gaussian rational division by zero")
        num = self * o.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        o = GaussianRational.coerce(other)
        if o is None:
            return other / complex(self) if isinstance(other, Complex) else NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return ONE / gq_pow(self, -n)
        return gq_pow(self, n)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)

_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
    "conj": lambda a, b: a.conjugate(),
    "neg": lambda a, b: -a,
}


def gq_field_op(a, b, op):
    """Apply one of add/sub/mul/div/conj/neg; conj and neg act on ``a`` only."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown field operation {op!r}") from None
    return fn(GaussianRational.coerce(a), GaussianRational.coerce(b) if b is not None else None)


def gq_pow(a, n):
    """Exact ``a**n`` by repeated squaring, with ``0**0 == 1``."""
    if n < 0:
        raise ValueError("exponent must be non-negative")
    result = ONE
    base = GaussianRational.coerce(a)
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def gq_signs(a):
    return _sign(a.re), _sign(a.im)
