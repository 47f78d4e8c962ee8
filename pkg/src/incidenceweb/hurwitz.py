"""Complexified Hurwitz algebras via Cayley-Dickson doubling.

Levels 0..3 give the complexifications of R, C, H, O (dimensions 1, 2, 4, 8).
Multiplication is computed structurally by the doubling rule

    (a, b) (c, d) = (a c - conj(d) b,  d a + b conj(c))

with doubling parameter -1 at every level; over C all signatures are
equivalent, so one code path covers all four algebras.  Conjugation fixes the
unit (index 0) and negates every other basis direction.  Basis order is the
binary order of the doubling tree.

Coefficients may be exact Gaussian rationals or complex floats; the recursion
only uses ring operations.
"""

from __future__ import annotations

from .scalars import GaussianRational, to_complex

HURWITZ_LEVELS = {"R": 0, "C": 1, "H": 2, "O": 3}


class CompositionAlgebra:
    def __init__(self, level):
        if level not in (0, 1, 2, 3):
            raise ValueError("doubling level must be 0..3")
        self.level = level
        self.dim = 2 ** level

    def element(self, coeffs):
        return CAElement(self, list(coeffs))

    def zero(self, exact=True):
        z = GaussianRational(0) if exact else 0j
        return self.element([z] * self.dim)

    def unit(self, exact=True):
        z = GaussianRational(0) if exact else 0j
        o = GaussianRational(1) if exact else 1 + 0j
        return self.element([o] + [z] * (self.dim - 1))

    def basis_element(self, k, exact=True):
        z = GaussianRational(0) if exact else 0j
        o = GaussianRational(1) if exact else 1 + 0j
        coeffs = [z] * self.dim
        coeffs[k] = o
        return self.element(coeffs)

    def random_element(self, rng, lo=-3, hi=3):
        return self.element(
            [GaussianRational(rng.randint(lo, hi)) for _ in range(self.dim)]
        )

    def __repr__(self):
        return f"CompositionAlgebra(level={self.level}, dim={self.dim})"


def _conj_raw(v):
    return [v[0]] + [-c for c in v[1:]]


def _mul_raw(a, b):
    n = len(a)
    if n == 1:
        return [a[0] * b[0]]
    h = n // 2
    a1, a2 = a[:h], a[h:]
    c1, c2 = b[:h], b[h:]
    p = _mul_raw(a1, c1)
    q = _mul_raw(_conj_raw(c2), a2)
    r = _mul_raw(c2, a1)
    s = _mul_raw(a2, _conj_raw(c1))
    return [p[i] - q[i] for i in range(h)] + [r[i] + s[i] for i in range(h)]


class CAElement:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        if len(coeffs) != algebra.dim:
            raise ValueError("coefficient length does not match algebra dimension")
        self.algebra = algebra
        self.coeffs = list(coeffs)

    def _check(self, other):
        if not isinstance(other, CAElement) or other.algebra.dim != self.algebra.dim:
            raise ValueError("dimension mismatch between composition algebra elements")

    def __add__(self, other):
        self._check(other)
        return CAElement(
            self.algebra, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        self._check(other)
        return CAElement(
            self.algebra, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self):
        return CAElement(self.algebra, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, CAElement):
            self._check(other)
            return CAElement(self.algebra, _mul_raw(self.coeffs, other.coeffs))
        return CAElement(self.algebra, [a * other for a in self.coeffs])

    def __rmul__(self, other):
        return CAElement(self.algebra, [other * a for a in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, CAElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"CAElement({self.coeffs})"

    def conjugate(self):
        return CAElement(self.algebra, _conj_raw(self.coeffs))

    def float_image(self):
        return CAElement(
            CompositionAlgebra(self.algebra.level),
            [to_complex(c) for c in self.coeffs],
        )


def cd_multiply(a, b):
    return a * b


def conjugate(a):
    return a.conjugate()


def norm_form(a, check=True):
    """The scalar x * conj(x); the quadratic norm admitting composition."""
    prod = (a * a.conjugate()).coeffs
    if check:
        for c in prod[1:]:
            if isinstance(c, GaussianRational):
                if c:
                    raise ArithmeticError("x * conj(x) is not scalar")
            elif abs(c) > 1e-10 * (1 + abs(prod[0])):
                raise ArithmeticError("x * conj(x) is not scalar")
    return prod[0]


def polarized_norm_matrix(level):
    """Gram matrix of the norm form in the doubling basis (exact)."""
    alg = CompositionAlgebra(level)
    n = alg.dim
    basis = [alg.basis_element(k) for k in range(n)]
    half = GaussianRational(1) / GaussianRational(2)
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            nij = norm_form(basis[i] + basis[j], check=False)
            ni = norm_form(basis[i], check=False)
            nj = norm_form(basis[j], check=False)
            row.append((nij - ni - nj) * half)
        gram.append(row)
    return gram
