"""First-order forward-mode duals with a gradient vector.

A DerivNumber carries a complex value and its gradient with respect to a
declared list of parameters.  The chain rule is exact for +, -, *, /, integer
powers and sqrt; that is all the chart maps need.
"""

from __future__ import annotations

import cmath

import numpy as np

from .scalars import GaussianRational, to_complex


class DerivNumber:
    __slots__ = ("value", "grad")

    def __init__(self, value, grad):
        self.value = complex(value)
        self.grad = np.asarray(grad, dtype=complex)

    @classmethod
    def constant(cls, value, nparams):
        return cls(value, np.zeros(nparams, dtype=complex))

    @classmethod
    def seed(cls, values):
        """One DerivNumber per entry, each carrying a unit gradient."""
        values = list(values)
        n = len(values)
        out = []
        for i, v in enumerate(values):
            g = np.zeros(n, dtype=complex)
            g[i] = 1.0
            out.append(cls(v, g))
        return out

    def _coerce(self, other):
        if isinstance(other, DerivNumber):
            return other
        if isinstance(other, (int, float, complex, GaussianRational)):
            return DerivNumber(to_complex(other), np.zeros_like(self.grad))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DerivNumber(self.value + o.value, self.grad + o.grad)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DerivNumber(self.value - o.value, self.grad - o.grad)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DerivNumber(
            self.value * o.value, self.grad * o.value + o.grad * self.value
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        inv = 1.0 / o.value
        return DerivNumber(
            self.value * inv,
            (self.grad - o.grad * (self.value * inv)) * inv,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return DerivNumber(-self.value, -self.grad)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise TypeError("DerivNumber powers must be non-negative ints")
        out = DerivNumber(1.0, np.zeros_like(self.grad))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def sqrt(self, near=None):
        v = cmath.sqrt(self.value)
        if near is not None and abs(v - near) > abs(-v - near):
            v = -v
        return DerivNumber(v, self.grad / (2.0 * v))

    def __repr__(self):
        return f"DerivNumber({self.value}, grad={self.grad})"
