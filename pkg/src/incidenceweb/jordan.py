"""Rank-3 Jordan algebras: hermitian 3x3 algebras over the Hurwitz algebras,
spin factors, and direct products.

An element x satisfies a monic degree-3 relation

    x^3 - T(x) x^2 + S(x) x - N(x) e = 0

whose coefficients are recovered per element by exact linear algebra (the
kernel of the powers matrix [e, x, x^2, x^3]) rather than from hardcoded
closed forms; the closed spin-factor forms are kept alongside as a
cross-check.  The adjoint is x^# = x^2 - T x + S e, the inverse x^# / N.

Elements of rank < 3 still get a monic degree-3 relation: the minimal
polynomial is extended by a deterministic cofactor and flagged non-generic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hurwitz import HURWITZ_LEVELS, CAElement, CompositionAlgebra
from .linalg import exact_row_reduce, numeric_rank
from .scalars import GaussianRational, gr, is_exact, to_complex


class SingularElementError(ZeroDivisionError):
    pass


def _half_like(c):
    if is_exact(c) or isinstance(c, GaussianRational):
        return GaussianRational(1) / GaussianRational(2)
    return 0.5


def _zero_one(exact):
    if exact:
        return GaussianRational(0), GaussianRational(1)
    return 0j, 1 + 0j


# ---------------------------------------------------------------------------
# algebra variants
# ---------------------------------------------------------------------------

class JordanAlgebra:
    """Base: a finite-dimensional commutative algebra with unit."""

    dim = 0

    def product(self, xc, yc):
        raise NotImplementedError

    def unit_coeffs(self, exact=True):
        raise NotImplementedError

    def element(self, coeffs):
        return JElement(self, list(coeffs))

    def unit(self, exact=True):
        return self.element(self.unit_coeffs(exact))

    def zero(self, exact=True):
        z, _ = _zero_one(exact)
        return self.element([z] * self.dim)

    def random_element(self, rng, lo=-3, hi=3):
        return self.element(
            [GaussianRational(rng.randint(lo, hi)) for _ in range(self.dim)]
        )

    def random_regular_element(self, rng, lo=-3, hi=3, max_tries=200):
        """Random element with rank 3 and nonzero norm (redrawn until found)."""
        for _ in range(max_tries):
            x = self.random_element(rng, lo, hi)
            if element_rank(x) == 3 and generic_coefficients(x).N:
                return x
        raise RuntimeError("could not sample a regular element")

    def descriptor(self):
        raise NotImplementedError


class ComplexJordan(JordanAlgebra):
    """The rank-1 algebra C itself."""

    dim = 1

    def product(self, xc, yc):
        return [xc[0] * yc[0]]

    def unit_coeffs(self, exact=True):
        _, o = _zero_one(exact)
        return [o]

    def descriptor(self):
        return {"type": "complex"}

    def __repr__(self):
        return "ComplexJordan()"


class HermitianJordan(JordanAlgebra):
    """Herm_3(A) with the symmetrized matrix product M.N = (MN + NM)/2.

    Storage: three diagonal scalars, then the three strictly upper
    triangular entries a1 = M[0,1], a2 = M[0,2], a3 = M[1,2] as coefficient
    blocks over the composition algebra.
    """

    def __init__(self, level_or_letter):
        level = (
            HURWITZ_LEVELS[level_or_letter]
            if isinstance(level_or_letter, str)
            else level_or_letter
        )
        self.ca = CompositionAlgebra(level)
        self.dim = 3 + 3 * self.ca.dim

    def unit_coeffs(self, exact=True):
        z, o = _zero_one(exact)
        return [o, o, o] + [z] * (3 * self.ca.dim)

    def _to_matrix(self, xc):
        d = self.ca.dim
        z, _ = _zero_one(isinstance(xc[0], GaussianRational) or is_exact(xc[0]))

        def scal(c):
            return CAElement(self.ca, [c] + [z] * (d - 1))

        a1 = CAElement(self.ca, xc[3 : 3 + d])
        a2 = CAElement(self.ca, xc[3 + d : 3 + 2 * d])
        a3 = CAElement(self.ca, xc[3 + 2 * d : 3 + 3 * d])
        return [
            [scal(xc[0]), a1, a2],
            [a1.conjugate(), scal(xc[1]), a3],
            [a2.conjugate(), a3.conjugate(), scal(xc[2])],
        ]

    def product(self, xc, yc):
        m = self._to_matrix(xc)
        n = self._to_matrix(yc)
        half = _half_like(xc[0])

        def sym_entry(i, j):
            acc = None
            for k in range(3):
                term = m[i][k] * n[k][j] + n[i][k] * m[k][j]
                acc = term if acc is None else acc + term
            return acc * half

        diag = [sym_entry(i, i).coeffs[0] for i in range(3)]
        a1 = sym_entry(0, 1).coeffs
        a2 = sym_entry(0, 2).coeffs
        a3 = sym_entry(1, 2).coeffs
        return diag + a1 + a2 + a3

    def descriptor(self):
        letter = {v: k for k, v in HURWITZ_LEVELS.items()}[self.ca.level]
        return {"type": "herm3", "hurwitz": letter}

    def __repr__(self):
        return f"HermitianJordan(level={self.ca.level}, dim={self.dim})"


class SpinFactorJordan(JordanAlgebra):
    """The rank-2 spin factor C + V with (l, v).(l', v') = (ll' - q(v,v'), lv' + l'v).

    q is the standard nondegenerate sum of squares on V = C^(r-1), so the
    polarized form is q(v, v') = sum v_i v'_i.
    """

    def __init__(self, r):
        if r < 2:
            raise ValueError("spin factor needs r >= 2")
        self.r = r
        self.dim = r

    def unit_coeffs(self, exact=True):
        z, o = _zero_one(exact)
        return [o] + [z] * (self.dim - 1)

    def product(self, xc, yc):
        lam, v = xc[0], xc[1:]
        lamp, vp = yc[0], yc[1:]
        qvv = None
        for a, b in zip(v, vp):
            t = a * b
            qvv = t if qvv is None else qvv + t
        head = lam * lamp if qvv is None else lam * lamp - qvv
        return [head] + [lam * b + lamp * a for a, b in zip(v, vp)]

    def q_value(self, v):
        acc = None
        for a in v:
            t = a * a
            acc = t if acc is None else acc + t
        return acc if acc is not None else GaussianRational(0)

    def descriptor(self):
        return {"type": "spin-factor", "r": self.r, "q": "standard"}

    def __repr__(self):
        return f"SpinFactorJordan(r={self.r})"


class ProductJordan(JordanAlgebra):
    def __init__(self, factors):
        self.factors = list(factors)
        self.dim = sum(f.dim for f in self.factors)

    def _split(self, xc):
        out = []
        at = 0
        for f in self.factors:
            out.append(xc[at : at + f.dim])
            at += f.dim
        return out

    def product(self, xc, yc):
        out = []
        for f, xf, yf in zip(self.factors, self._split(xc), self._split(yc)):
            out.extend(f.product(xf, yf))
        return out

    def unit_coeffs(self, exact=True):
        out = []
        for f in self.factors:
            out.extend(f.unit_coeffs(exact))
        return out

    def descriptor(self):
        return {"type": "product", "factors": [f.descriptor() for f in self.factors]}

    def __repr__(self):
        return f"ProductJordan({self.factors})"


def spin_rank3(r):
    """J_q^(r+1) = C x (spin factor of dimension r); the rank-3 spin algebra."""
    return ProductJordan([ComplexJordan(), SpinFactorJordan(r)])


def ccc():
    """C x C x C, the smallest rank-3 algebra."""
    return ProductJordan([ComplexJordan(), ComplexJordan(), ComplexJordan()])


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class JElement:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        if len(coeffs) != algebra.dim:
            raise ValueError("coefficient length does not match algebra dimension")
        self.algebra = algebra
        self.coeffs = list(coeffs)

    def _check(self, other):
        if not isinstance(other, JElement) or other.algebra.dim != self.algebra.dim:
            raise ValueError("dimension mismatch between Jordan elements")

    def __add__(self, other):
        self._check(other)
        return JElement(
            self.algebra, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        self._check(other)
        return JElement(
            self.algebra, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self):
        return JElement(self.algebra, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, JElement):
            self._check(other)
            return JElement(self.algebra, self.algebra.product(self.coeffs, other.coeffs))
        return JElement(self.algebra, [a * other for a in self.coeffs])

    def __rmul__(self, other):
        return JElement(self.algebra, [other * a for a in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, JElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def is_zero(self):
        return all(not c if is_exact(c) else c == 0 for c in self.coeffs)

    def is_exact(self):
        return all(is_exact(c) for c in self.coeffs)

    def float_image(self):
        return JElement(self.algebra, [to_complex(c) for c in self.coeffs])

    def __repr__(self):
        return f"JElement({self.coeffs})"


def jproduct(x, y):
    return x * y


# ---------------------------------------------------------------------------
# generic degree-3 relation, adjoint, inverse, rank
# ---------------------------------------------------------------------------

@dataclass
class GenericCoefficients:
    T: object
    S: object
    N: object
    non_generic: bool = False

    def as_tuple(self):
        return (self.T, self.S, self.N)


def _powers(x):
    e = x.algebra.unit(exact=x.is_exact())
    x2 = x * x
    x3 = x2 * x
    return e, x, x2, x3


def _powers_matrix(cols):
    return [[c.coeffs[i] for c in cols] for i in range(cols[0].algebra.dim)]


def element_rank(x):
    """Dimension of span{e, x, x^2, x^3}; 0 iff x = 0."""
    if x.is_zero():
        return 0
    e, x1, x2, x3 = _powers(x)
    rows = _powers_matrix([e, x1, x2, x3])
    if x.is_exact():
        rank, _ = exact_row_reduce(rows)
        return rank
    return numeric_rank(np.array([[to_complex(v) for v in r] for r in rows]))


def generic_coefficients(x):
    """Coefficients (T, S, N) of the monic degree-3 relation satisfied by x.

    Rank-3 elements determine the relation uniquely (kernel of the powers
    matrix).  Rank < 3 leaves the cofactor beyond the minimal polynomial
    undetermined by powers of x alone; it is fixed by continuity, via exact
    cubic extrapolation of (T, S, N) along the line x + s w through a regular
    element w.  The result extends the minimal polynomial, satisfies the
    relation identically, and is flagged non-generic.
    """
    if x.is_zero():
        z = GaussianRational(0) if x.is_exact() else 0j
        return GenericCoefficients(z, z, z, non_generic=True)
    if not x.is_exact():
        return _generic_coefficients_float(x)
    gc = _kernel_coefficients(x)
    if gc is not None:
        return gc
    if element_rank(x) == 1:
        alpha = _scalar_direction(x)
        return GenericCoefficients(
            3 * alpha, 3 * alpha * alpha, alpha ** 3, non_generic=True
        )
    return _extrapolated_coefficients(x)


def _kernel_coefficients(x):
    """The (T, S, N) of a rank-3 element, or None when the rank drops."""
    e, x1, x2, x3 = _powers(x)
    rows = _powers_matrix([e, x1, x2, x3])
    rank, kernel = exact_row_reduce(rows)
    if rank != 3:
        return None
    k0, k1, k2, k3 = next(v for v in kernel if v[3])
    return GenericCoefficients(-k2 / k3, k1 / k3, -k0 / k3)


def _extrapolated_coefficients(x):
    """True (T, S, N) at a degenerate x by Lagrange extrapolation to s = 0.

    T, S, N restricted to the line s -> x + s w are polynomials of degree
    <= 3 in s, so four regular sample points determine the values at s = 0:
    f(0) = 4 f(1) - 6 f(2) + 4 f(3) - f(4).
    """
    import random

    nodes = [1, 2, 3, 4]
    weights = [GaussianRational(c) for c in (4, -6, 4, -1)]
    for attempt in range(64):
        rng = random.Random(90_000 + attempt)
        w = x.algebra.random_element(rng)
        samples = []
        for s in nodes:
            gc = _kernel_coefficients(x + w * GaussianRational(s))
            if gc is None:
                break
            samples.append(gc)
        if len(samples) == len(nodes):
            t = sum((wt * gc.T for wt, gc in zip(weights, samples)), GaussianRational(0))
            s_ = sum((wt * gc.S for wt, gc in zip(weights, samples)), GaussianRational(0))
            n = sum((wt * gc.N for wt, gc in zip(weights, samples)), GaussianRational(0))
            return GenericCoefficients(t, s_, n, non_generic=True)
    raise RuntimeError("could not regularize a degenerate element")


def _scalar_direction(x):
    e = x.algebra.unit(exact=x.is_exact())
    for xe, ee in zip(x.coeffs, e.coeffs):
        if ee:
            return xe / ee
    raise RuntimeError("unit has no support")


def _generic_coefficients_float(x):
    e, x1, x2, x3 = _powers(x)
    a = np.array(
        [[to_complex(v) for v in row] for row in _powers_matrix([e, x1, x2])]
    )
    b = np.array([to_complex(v) for v in x3.coeffs])
    sol, residual, rank, _ = np.linalg.lstsq(a, b, rcond=None)
    non_generic = rank < 3
    # x^3 = sol0 e + sol1 x + sol2 x^2  ->  T = sol2, S = -sol1, N = sol0
    return GenericCoefficients(sol[2], -sol[1], sol[0], non_generic=non_generic)


def adjoint(x):
    """x^# = x^2 - T x + S e; satisfies x.x^# = N e and (x^#)^# = N x."""
    gc = generic_coefficients(x)
    e = x.algebra.unit(exact=x.is_exact())
    return (x * x) - (x * gc.T) + (e * gc.S)


def jinverse(x, tol=1e-12):
    gc = generic_coefficients(x)
    if is_exact(gc.N) or isinstance(gc.N, GaussianRational):
        if not gc.N:
            raise SingularElementError("singular element")
    elif abs(gc.N) <= tol:
        raise SingularElementError("singular element")
    e = x.algebra.unit(exact=x.is_exact())
    sharp = (x * x) - (x * gc.T) + (e * gc.S)
    return sharp * (_one_like(gc.N) / gc.N)


def _one_like(c):
    return GaussianRational(1) if isinstance(c, GaussianRational) or is_exact(c) else 1.0


def algebra_rank(algebra, samples=20, seed=0):
    """Max element rank over a random sample; 3 for every algebra housed here."""
    import random

    rng = random.Random(seed)
    best = 0
    for _ in range(samples):
        best = max(best, element_rank(algebra.random_element(rng)))
        if best == 3:
            break
    return best


# ---------------------------------------------------------------------------
# closed spin-factor forms (cross-checked against the kernel computation)
# ---------------------------------------------------------------------------

def spin_adjoint_closed(algebra, x):
    """x^# = (lambda^2 + q(v), (alpha lambda, -alpha v)) on C x spin factor."""
    _require_spin_rank3(algebra)
    alpha = x.coeffs[0]
    lam = x.coeffs[1]
    v = x.coeffs[2:]
    spin = algebra.factors[1]
    head = lam * lam + spin.q_value(v)
    return algebra.element([head, alpha * lam] + [-alpha * c for c in v])


def spin_norm_closed(algebra, x):
    """N(x) = alpha (lambda^2 + q(v)) on C x spin factor."""
    _require_spin_rank3(algebra)
    alpha = x.coeffs[0]
    lam = x.coeffs[1]
    v = x.coeffs[2:]
    return alpha * (lam * lam + algebra.factors[1].q_value(v))


def _require_spin_rank3(algebra):
    ok = (
        isinstance(algebra, ProductJordan)
        and len(algebra.factors) == 2
        and isinstance(algebra.factors[0], ComplexJordan)
        and isinstance(algebra.factors[1], SpinFactorJordan)
    )
    if not ok:
        raise TypeError("expected the product C x spin factor")


# ---------------------------------------------------------------------------
# descriptors
# ---------------------------------------------------------------------------

def algebra_from_descriptor(desc):
    """Build an algebra from its JSON descriptor (see External Interfaces)."""
    if not isinstance(desc, dict) or "type" not in desc:
        raise ValueError("descriptor must be a dict with a 'type' key")
    kind = desc["type"]
    if kind == "herm3":
        letter = desc.get("hurwitz")
        if letter not in HURWITZ_LEVELS:
            raise ValueError("herm3 descriptor needs 'hurwitz' in R/C/H/O")
        return HermitianJordan(letter)
    if kind == "spin":
        if "r" not in desc:
            raise ValueError("spin descriptor needs 'r'")
        r = int(desc["r"])
        if desc.get("q", "standard") != "standard":
            raise ValueError("only the standard quadratic form is housed")
        return spin_rank3(r)
    if kind == "product":
        return ProductJordan(
            [algebra_from_descriptor(f) for f in desc.get("factors", [])]
        )
    if kind == "complex":
        return ComplexJordan()
    raise ValueError(f"unknown algebra type {kind!r}")


ALGEBRA_ALIASES = {
    "herm3-R": {"type": "herm3", "hurwitz": "R"},
    "herm3-C": {"type": "herm3", "hurwitz": "C"},
    "herm3-H": {"type": "herm3", "hurwitz": "H"},
    "herm3-O": {"type": "herm3", "hurwitz": "O"},
    "spin-r2": {"type": "spin", "r": 2},
    "spin-r3": {"type": "spin", "r": 3},
    "spin-r4": {"type": "spin", "r": 4},
    "ccc": {
        "type": "product",
        "factors": [{"type": "complex"}, {"type": "complex"}, {"type": "complex"}],
    },
}


def algebra_from_name(name):
    if isinstance(name, dict):
        return algebra_from_descriptor(name)
    if name in ALGEBRA_ALIASES:
        return algebra_from_descriptor(ALGEBRA_ALIASES[name])
    raise ValueError(f"unknown algebra alias {name!r}")
