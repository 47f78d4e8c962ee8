"""Exact and floating scalar arithmetic.

Two scalar kinds flow through the package:

* :class:`GaussianRational` -- exact complex rationals ``re + im*i`` with
  arbitrary-precision rational parts.  Closed under + - * / with no rounding.
* plain ``complex`` -- double precision, used wherever a construction leaves
  the rational field (points on conics, tracked roots, ...).

Code above this module is written generically against the arithmetic
protocol (+, -, *, /, **) so either kind (and the dual/jet scalars) can be
substituted.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _Q

_ZERO = _Q(0)
_ONE = _Q(1)


class GaussianRational:
    """Exact element of Q(i), stored as a pair of rationals."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _Q(re) if not isinstance(re, type(_ZERO)) else re
        self.im = _Q(im) if not isinstance(im, type(_ZERO)) else im

    @classmethod
    def _raw(cls, re, im):
        self = object.__new__(cls)
        self.re = re
        self.im = im
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational._raw(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise TypeError("GaussianRational powers must be non-negative ints")
        out = GaussianRational._raw(_ONE, _ZERO)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if not self.im:
            return f"GR({self.re})"
        return f"GR({self.re}, {self.im})"


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, type(_ZERO))):
        return GaussianRational._raw(_Q(x), _ZERO)
    return NotImplemented


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


def gr(re, im=0):
    """Shorthand constructor, accepts ints, rationals or '3/4' strings."""
    return GaussianRational(_Q(re), _Q(im))


def is_exact(x):
    return isinstance(x, (GaussianRational, int)) or isinstance(x, type(_ZERO))


def to_complex(x):
    """Map any supported scalar onto a python complex."""
    if isinstance(x, complex):
        return x
    if isinstance(x, GaussianRational):
        return complex(x)
    return complex(x)


def is_zero(x, tol=0.0):
    """Exact zero test for exact scalars, |x| <= tol for floats."""
    if isinstance(x, GaussianRational):
        return not x
    if is_exact(x):
        return x == 0
    return abs(x) <= tol
