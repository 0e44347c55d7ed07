"""Exact arithmetic in a real quadratic field Q(sqrt d).

A :class:`Scalar` is ``a + b*sqrt(d)`` with rational ``a``, ``b`` and a
square-free tag ``d``.  Purely rational values are normalized to ``b = 0,
d = 0`` so they combine with any field.  Sign decisions are exact: the
irrational part never touches floating point.

>>> r2 = root(2)
>>> (1 + r2) * (1 - r2)
Scalar(-1)
>>> 1 / (1 + r2)
Scalar(-1, 1, 2)
>>> (1 + r2) > 2
True
"""

from __future__ import annotations

import decimal
from fractions import Fraction
from functools import total_ordering
from numbers import Rational

from .errors import FieldMismatchError

__all__ = ["Scalar", "root", "as_scalar", "common_field", "ZERO", "ONE"]


def _squarefree(d: int) -> bool:
    if d < 0:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


_F0 = Fraction(0)


@total_ordering
class Scalar:
    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        d = int(d)
        if d == 1:
            a, b, d = a + b, Fraction(0), 0
        if b == 0 or d == 0:
            b, d = Fraction(0), 0
        elif not _squarefree(d):
            raise ValueError(f"field tag d={d} is not square-free")
        self.a = a
        self.b = b
        self.d = d

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int) -> "Scalar":
        """Build from already-normalized Fraction parts, skipping validation."""
        x = object.__new__(cls)
        x.a = a
        if b:
            x.b, x.d = b, d
        else:
            x.b, x.d = _F0, 0
        return x

    # -- coercion -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Scalar | None":
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Rational)):
            return Scalar._raw(Fraction(other), _F0, 0)
        return None

    def _join(self, other: "Scalar") -> int:
        if self.d == other.d or other.d == 0:
            return self.d
        if self.d == 0:
            return other.d
        raise FieldMismatchError(
            f"cannot combine elements of Q(sqrt {self.d}) and Q(sqrt {other.d})",
            left=self.d, right=other.d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.b and not self.b:
            return Scalar._raw(self.a + o.a, _F0, 0)
        d = self._join(o)
        return Scalar._raw(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.b and not self.b:
            return Scalar._raw(self.a - o.a, _F0, 0)
        d = self._join(o)
        return Scalar._raw(self.a - o.a, self.b - o.b, d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.b and not self.b:
            return Scalar._raw(self.a * o.a, _F0, 0)
        d = self._join(o)
        return Scalar._raw(self.a * o.a + self.b * o.b * d,
                           self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def conjugate(self) -> "Scalar":
        return Scalar(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - d b^2``; zero only for the zero element."""
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        if not self.b:
            return Scalar._raw(1 / self.a, _F0, 0)
        n = self.norm()
        return Scalar._raw(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.b == 0:
            if o.a == 0:
                raise ZeroDivisionError("division by zero in Q(sqrt d)")
            return Scalar._raw(self.a / o.a, self.b / o.a, self.d)
        self._join(o)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = Scalar(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- order ------------------------------------------------------------
    def sign(self) -> int:
        a, b = self.a, self.b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: the larger of a^2 and d b^2 wins
        return sa if a * a > self.d * b * b else sb

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b and (self.b == 0 or self.d == o.d)

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def compare(self, other) -> int:
        """Exact sign of ``self - other``."""
        return (self - Scalar._coerce(other)).sign()

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    # -- rendering --------------------------------------------------------
    def to_decimal(self, digits: int = 30) -> decimal.Decimal:
        ctx = decimal.Context(prec=digits + 10)
        val = ctx.divide(decimal.Decimal(self.a.numerator), decimal.Decimal(self.a.denominator))
        if self.b:
            r = ctx.sqrt(decimal.Decimal(self.d))
            bq = ctx.divide(decimal.Decimal(self.b.numerator), decimal.Decimal(self.b.denominator))
            val = ctx.add(val, ctx.multiply(bq, r))
        return ctx.create_decimal(val).normalize(decimal.Context(prec=digits))

    def __float__(self):
        if self.b == 0:
            return float(self.a)
        return float(self.to_decimal(40))

    def literal(self) -> dict:
        """JSON literal ``{"a": "p/q", "b": "p/q"}``."""
        return {"a": str(self.a), "b": str(self.b)}

    def __repr__(self):
        if self.b == 0:
            return f"Scalar({self.a})" if self.a.denominator == 1 else f"Scalar({str(self.a)!r})"
        fa = str(self.a) if self.a.denominator == 1 else repr(str(self.a))
        fb = str(self.b) if self.b.denominator == 1 else repr(str(self.b))
        return f"Scalar({fa}, {fb}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt({self.d})"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*sqrt({self.d})"


def root(d: int) -> Scalar:
    """The element ``sqrt(d)``."""
    return Scalar(0, 1, d)


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Rational, str)):
        return Scalar(x)
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


def common_field(values) -> int:
    """Shared field tag of an iterable of scalars (0 if all rational)."""
    d = 0
    for v in values:
        if v.d:
            if d and v.d != d:
                raise FieldMismatchError("mixed quadratic fields", left=d, right=v.d)
            d = v.d
    return d


ZERO = Scalar(0)
ONE = Scalar(1)
