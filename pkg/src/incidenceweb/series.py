"""Truncated multivariate power series (jets of arbitrary order).

A TruncatedSeries is a coefficient vector over the graded monomial basis of
C[[u_1..u_n]] / (degree > order).  Products use a precomputed index table, so
multiplication is a single fused gather/scatter.  Division and square roots
are Newton iterations in the series ring, each doubling the accurate order.

These are the high-order cousins of the first-order duals in `autodiff`; the
jet-rank solver runs entire chart constructions (root tracking included) on
this scalar to read off Taylor coefficients of leaf maps with no stencil
bias.  One caveat inherited from truncation: `partial` loses the top degree,
so an order-M context yields derivatives trusted through degree M-1.
"""

from __future__ import annotations

import cmath

import numpy as np

from .multipoly import monomials_up_to_degree
from .scalars import GaussianRational, to_complex


class SeriesContext:
    """Monomial basis and multiplication table for a fixed (nvars, order)."""

    def __init__(self, nvars, order):
        self.nvars = nvars
        self.order = order
        self.monomials = list(monomials_up_to_degree(nvars, order))
        self.index = {m: i for i, m in enumerate(self.monomials)}
        self.size = len(self.monomials)
        self.degrees = np.array([sum(m) for m in self.monomials])

        src_a, src_b, dst = [], [], []
        for ia, ma in enumerate(self.monomials):
            da = sum(ma)
            for ib, mb in enumerate(self.monomials):
                if da + sum(mb) > order:
                    continue
                mc = tuple(x + y for x, y in zip(ma, mb))
                src_a.append(ia)
                src_b.append(ib)
                dst.append(self.index[mc])
        self._mul_a = np.array(src_a)
        self._mul_b = np.array(src_b)
        self._mul_dst = np.array(dst)

        # partial-derivative maps: (source index, target index, factor)
        self._diff = []
        for v in range(nvars):
            src, tgt, fac = [], [], []
            for i, m in enumerate(self.monomials):
                if m[v]:
                    lower = list(m)
                    lower[v] -= 1
                    src.append(i)
                    tgt.append(self.index[tuple(lower)])
                    fac.append(m[v])
            self._diff.append(
                (np.array(src), np.array(tgt), np.array(fac, dtype=complex))
            )

    # -- constructors ---------------------------------------------------
    def constant(self, value):
        c = np.zeros(self.size, dtype=complex)
        c[0] = to_complex(value)
        return TruncatedSeries(self, c)

    def variable(self, i, base=0.0, scale=1.0):
        """Series base + scale * u_i."""
        c = np.zeros(self.size, dtype=complex)
        c[0] = to_complex(base)
        exps = [0] * self.nvars
        exps[i] = 1
        c[self.index[tuple(exps)]] = to_complex(scale)
        return TruncatedSeries(self, c)

    def seed_point(self, values, scale=1.0):
        """One series per coordinate: values[i] + scale * u_i."""
        return [self.variable(i, v, scale) for i, v in enumerate(values)]

    def mul_coeffs(self, a, b):
        out = np.zeros(self.size, dtype=complex)
        np.add.at(out, self._mul_dst, a[self._mul_a] * b[self._mul_b])
        return out


class TruncatedSeries:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs

    @property
    def value(self):
        return complex(self.coeffs[0])

    def coefficient(self, exponents):
        return complex(self.coeffs[self.ctx.index[tuple(exponents)]])

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, float, complex, GaussianRational)):
            return self.ctx.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TruncatedSeries(self.ctx, self.coeffs + o.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TruncatedSeries(self.ctx, self.coeffs - o.coeffs)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, float, complex, GaussianRational)):
            return TruncatedSeries(self.ctx, self.coeffs * to_complex(other))
        if isinstance(other, TruncatedSeries):
            return TruncatedSeries(
                self.ctx, self.ctx.mul_coeffs(self.coeffs, other.coeffs)
            )
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return TruncatedSeries(self.ctx, -self.coeffs)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise TypeError("series powers must be non-negative ints")
        out = self.ctx.constant(1.0)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        v0 = self.coeffs[0]
        if v0 == 0:
            raise ZeroDivisionError("series with zero constant term")
        y = self.ctx.constant(1.0 / v0)
        steps = max(1, (self.ctx.order).bit_length() + 1)
        for _ in range(steps):
            y = y * (2.0 - self * y)
        return y

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def sqrt(self, near=None):
        v0 = cmath.sqrt(self.coeffs[0])
        if near is not None and abs(v0 - near) > abs(-v0 - near):
            v0 = -v0
        # Newton on the inverse square root avoids divisions
        u = self.ctx.constant(1.0 / v0)
        steps = max(1, (self.ctx.order).bit_length() + 1)
        for _ in range(steps):
            u = u * (1.5 - 0.5 * self * u * u)
        return self * u

    def partial(self, v):
        """d/du_v; the top-degree slice of the result is untrusted."""
        src, tgt, fac = self.ctx._diff[v]
        out = np.zeros(self.ctx.size, dtype=complex)
        if src.size:
            np.add.at(out, tgt, self.coeffs[src] * fac)
        return TruncatedSeries(self.ctx, out)

    def truncate_above(self, degree):
        out = self.coeffs.copy()
        out[self.ctx.degrees > degree] = 0.0
        return TruncatedSeries(self.ctx, out)

    def __repr__(self):
        nz = int(np.count_nonzero(self.coeffs))
        return f"TruncatedSeries(order={self.ctx.order}, nz={nz}, value={self.value})"
