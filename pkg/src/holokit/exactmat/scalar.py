"""Gaussian-rational scalars."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["Scalar", "as_fraction", "parse_rational", "format_rational", "I"]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"not an exact rational: {x!r}")


def parse_rational(s: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; floats are rejected."""
    s = s.strip()
    if "." in s or "e" in s.lower():
        raise ValueError(f"inexact literal {s!r}")
    return Fraction(s)


def format_rational(x) -> str:
    x = as_fraction(x)
    return f"{x.numerator}/{x.denominator}"


class Scalar:
    """An element ``re + im*i`` of Q(i). Immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", as_fraction(re))
        object.__setattr__(self, "im", as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact")
        return cls(x, 0)

    @classmethod
    def parse(cls, s: str) -> "Scalar":
        """Parse ``a``, ``a+bi``, ``bi``, ``3/5+4/5i`` style literals."""
        t = s.replace(" ", "").replace("*", "")
        if not t.endswith("i"):
            return cls(parse_rational(t))
        body = t[:-1]
        # split at the last sign that is not a leading sign or part of p/q
        cut = max(body.rfind("+", 1), body.rfind("-", 1))
        if cut <= 0:
            re, im = "0", body
        else:
            re, im = body[:cut], body[cut:]
        if im in ("", "+"):
            im = "1"
        elif im == "-":
            im = "-1"
        return cls(parse_rational(re), parse_rational(im))

    def is_real(self) -> bool:
        return self.im == 0

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, o):
        o = Scalar.coerce(o)
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = Scalar.coerce(o)
        return Scalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return Scalar.coerce(o) - self

    def __mul__(self, o):
        o = Scalar.coerce(o)
        return Scalar(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = Scalar.coerce(o)
        d = o.norm2()
        if d == 0:
            raise ZeroDivisionError("division by zero scalar")
        num = self * o.conjugate()
        return Scalar(num.re / d, num.im / d)

    def __rtruediv__(self, o):
        return Scalar.coerce(o) / self

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __eq__(self, o):
        try:
            o = Scalar.coerce(o)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.im == 0:
            return f"Scalar({self.re})"
        return f"Scalar({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def to_json(self):
        """``"p/q"`` for real values, ``{"re": .., "im": ..}`` otherwise."""
        if self.im == 0:
            return format_rational(self.re)
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    @classmethod
    def from_json(cls, obj) -> "Scalar":
        if isinstance(obj, dict):
            return cls(parse_rational(obj["re"]), parse_rational(obj["im"]))
        if isinstance(obj, str):
            return cls(parse_rational(obj))
        if isinstance(obj, int):
            return cls(obj)
        raise ValueError(f"bad scalar literal {obj!r}")


I = Scalar(0, 1)
