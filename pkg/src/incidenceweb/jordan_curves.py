"""The cubic curve over a rank-3 Jordan algebra and its twisted-cubic family.

Points live in P(C + J + J + C), dimension 2r+4 over an algebra of dimension
r+1.  The two affine charts are

    nu(x)     = [1 : x : x^# : N(x)]
    nu_hat(y) = [N(y) : y^# : y : 1]

and the pencil x gives the rational curve C_x parametrized by
[lam : gam] -> nu(lam e + gam x), a twisted cubic whenever x has rank 3.
The tangential projection from nu(0) reads [x^# : N(x)]; its degree on C_x
is the standardness witness (3 on these varieties, < 3 on scrolls, and < 3
again for rank-2 pencils).

Everything here is exact; degrees come from parametrizations and exact gcds,
never from implicit equations.
"""

from __future__ import annotations

import random

from .jordan import JElement, adjoint, element_rank, generic_coefficients, jinverse
from .multipoly import MultiPoly, poly_gcd_exact, sparse_random
from .roots import univariate_roots
from .scalars import GaussianRational, gr, is_exact, to_complex
from .univar import polyval


class IndeterminacyError(ValueError):
    pass


class CenterOfProjectionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------

class Z2Point:
    """Homogeneous point [a : x : y : b] of P(C + J + J + C)."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        coords = list(coords)
        if len(coords) != 2 * algebra.dim + 2:
            raise ValueError("coordinate length mismatch")
        if all(not c if is_exact(c) else c == 0 for c in coords):
            raise ValueError("all coordinates zero")
        self.algebra = algebra
        self.coords = coords

    @property
    def a(self):
        return self.coords[0]

    @property
    def b(self):
        return self.coords[-1]

    def x_block(self):
        d = self.algebra.dim
        return self.coords[1 : 1 + d]

    def y_block(self):
        d = self.algebra.dim
        return self.coords[1 + d : 1 + 2 * d]

    def __repr__(self):
        return f"Z2Point({self.coords})"


def projectively_equal(p, q, tol=0.0):
    """All 2x2 minors of the coordinate pair vanish (exactly or below tol)."""
    u, v = p.coords, q.coords
    if len(u) != len(v):
        return False
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            m = u[i] * v[j] - u[j] * v[i]
            if is_exact(m) or isinstance(m, GaussianRational):
                if m:
                    return False
            elif abs(m) > tol:
                return False
    return True


def nu(x):
    """[1 : x : x^# : N(x)], the affine chart of the cubic curve."""
    gc = generic_coefficients(x)
    one = gr(1) if x.is_exact() else 1 + 0j
    return Z2Point(x.algebra, [one] + x.coeffs + adjoint(x).coeffs + [gc.N])


def nu_hat(y):
    """[N(y) : y^# : y : 1], the opposite chart."""
    gc = generic_coefficients(y)
    one = gr(1) if y.is_exact() else 1 + 0j
    return Z2Point(y.algebra, [gc.N] + adjoint(y).coeffs + y.coeffs + [one])


def infinity_point(algebra, exact=True):
    z = gr(0) if exact else 0j
    o = gr(1) if exact else 1 + 0j
    return Z2Point(algebra, [z] * (2 * algebra.dim + 1) + [o])


def _nonzero_scalar(c):
    return bool(c) if is_exact(c) else c != 0


def translate(a, p):
    """The translation x -> x + a of the nu chart, extended through nu_hat."""
    alg = a.algebra
    if _nonzero_scalar(p.a):
        x = JElement(alg, [c / p.a for c in p.x_block()])
        return nu(x + a)
    if _nonzero_scalar(p.b):
        y = JElement(alg, [c / p.b for c in p.y_block()])
        if _nonzero_scalar(generic_coefficients(y).N):
            return nu(jinverse(y) + a)
    raise IndeterminacyError("indeterminacy locus")


# ---------------------------------------------------------------------------
# the twisted cubic family C_x
# ---------------------------------------------------------------------------

class RationalCurveParam:
    """A degree-q rational curve in P^N as an (N+1) x (q+1) coefficient matrix.

    Row i holds the ascending coefficients of the i-th homogeneous coordinate
    in the affine parameter t = gam / lam.
    """

    def __init__(self, ambient_dim, degree, rows, degenerate=False):
        self.ambient_dim = ambient_dim
        self.degree = degree
        self.rows = [list(r) for r in rows]
        self.degenerate = degenerate
        if all(all(not c if is_exact(c) else c == 0 for c in r) for r in self.rows):
            raise ValueError("identically zero curve parametrization")

    def point_at(self, t):
        return [polyval(row, t) for row in self.rows]

    def float_rows(self):
        return [[to_complex(c) for c in row] for row in self.rows]

    def exact_degree(self):
        """Degree after removing the common factor of all components."""
        comps = [row for row in self.rows if any(_nz(c) for c in row)]
        maxdeg = max(_poly_deg(row) for row in comps)
        g = None
        for row in comps:
            g = poly_gcd_exact(row, g) if g is not None else _trimmed(row)
            if len(g) == 1:
                break
        return maxdeg - (len(g) - 1)

    def coefficient_rank_columns(self):
        """Float rank of the coefficient matrix (columns = t powers)."""
        import numpy as np

        from .linalg import numeric_rank

        return numeric_rank(np.array(self.float_rows()))

    def to_json(self):
        return {
            "ambient_dim": self.ambient_dim,
            "degree": self.degree,
            "coefficients": [
                [[_reim(c)[0], _reim(c)[1]] for c in row] for row in self.rows
            ],
        }


def _reim(c):
    z = to_complex(c)
    return z.real, z.imag


def _nz(c):
    return bool(c) if is_exact(c) else c != 0


def _poly_deg(row):
    d = -1
    for k, c in enumerate(row):
        if _nz(c):
            d = k
    return d


def _trimmed(row):
    out = list(row)
    while out and not _nz(out[-1]):
        out.pop()
    return out


def expansion_blocks(x):
    """The t-coefficients of ((e + t x)^#, N(e + t x)).

    Returns four (element, scalar) pairs: (e, 1), (T e - x, T), (x^#, S),
    (0, N).  Valid for every x by continuity of the generic forms.
    """
    gc = generic_coefficients(x)
    alg = x.algebra
    e = alg.unit(exact=x.is_exact())
    zero = alg.zero(exact=x.is_exact())
    one = gr(1) if x.is_exact() else 1 + 0j
    return [
        (e, one),
        (e * gc.T - x, gc.T),
        (adjoint(x), gc.S),
        (zero, gc.N),
    ]


def curve_Cx(x):
    """The parametrization [lam : gam] -> nu(lam e + gam x), homogenized to degree 3."""
    alg = x.algebra
    blocks = expansion_blocks(x)
    zero = gr(0) if x.is_exact() else 0j
    one = gr(1) if x.is_exact() else 1 + 0j
    d = alg.dim
    rows = []
    rows.append([one, zero, zero, zero])  # lam^3
    e = alg.unit(exact=x.is_exact())
    for i in range(d):  # lam^2 (lam e + gam x)
        rows.append([e.coeffs[i], x.coeffs[i], zero, zero])
    for i in range(d):  # lam (lam e + gam x)^#
        rows.append([blocks[0][0].coeffs[i], blocks[1][0].coeffs[i], blocks[2][0].coeffs[i], zero])
    rows.append([blocks[0][1], blocks[1][1], blocks[2][1], blocks[3][1]])  # N
    degenerate = element_rank(x) < 3
    return RationalCurveParam(2 * d + 3, 3, rows, degenerate=degenerate)


def tangential_projection(x):
    """tau from the tangent space at nu(0): x -> [x^# : N(x)]."""
    gc = generic_coefficients(x)
    coords = adjoint(x).coeffs + [gc.N]
    if all(not c if is_exact(c) else c == 0 for c in coords):
        raise CenterOfProjectionError("center of projection")
    return coords


def projected_curve(x):
    """tau(C_x) as a curve in P^(r+1): rows for [lam (lam e + gam x)^# : N]."""
    alg = x.algebra
    blocks = expansion_blocks(x)
    zero = gr(0) if x.is_exact() else 0j
    d = alg.dim
    rows = []
    for i in range(d):
        rows.append([blocks[0][0].coeffs[i], blocks[1][0].coeffs[i], blocks[2][0].coeffs[i], zero])
    rows.append([blocks[0][1], blocks[1][1], blocks[2][1], blocks[3][1]])
    return RationalCurveParam(d, 3, rows, degenerate=element_rank(x) < 3)


def projected_degree(x):
    """Degree of tau(C_x); the standardness witness.  Requires rank 3."""
    if element_rank(x) != 3:
        raise ValueError("non-generic direction")
    return projected_curve(x).exact_degree()


def projected_degree_raw(x):
    """Degree of tau(C_x) without the rank precondition (dichotomy probes)."""
    return projected_curve(x).exact_degree()


# ---------------------------------------------------------------------------
# index numerology and ambient intersection counts for the four X_A
# ---------------------------------------------------------------------------

def hurwitz_index(level):
    """i(X_A) = 2 dim(A) + 2."""
    return 2 * 2 ** level + 2


def hurwitz_r(level):
    """r_A = dim X_A - 1 = 3 dim(A) + 2."""
    return 3 * 2 ** level + 2


def ambient_intersection_roots(x, seed, nterms=250, coeff_range=5):
    """Roots of a random degree-(i+1) ambient form restricted to C_x.

    The form lives in the 2r+4 homogeneous coordinates of P(Z_2(J)); its
    restriction to the degree-3 curve has degree 3(i+1) = 2 r_A + 5, the
    order of the incidence webs on X_A.
    """
    alg = x.algebra
    level = getattr(getattr(alg, "ca", None), "level", None)
    if level is None:
        raise TypeError("ambient counts are housed for the hermitian algebras")
    i_index = hurwitz_index(level)
    nvars = 2 * alg.dim + 2
    rng = random.Random(seed)
    form = sparse_random(nvars, i_index + 1, nterms, rng, -coeff_range, coeff_range)
    # every C_x passes through [0 : 0 : 0 : 1] at t = infinity; keep the form
    # nonzero there so no intersection escapes to the boundary of the chart
    top = (0,) * (nvars - 1) + (i_index + 1,)
    if top not in form.terms:
        form = form + MultiPoly.monomial(nvars, top, GaussianRational(rng.randint(1, coeff_range)))
    curve = curve_Cx(x)
    # restrict: substitute the curve's component polynomials (univariate in t)
    comps = [
        MultiPoly(1, {(k,): to_complex(c) for k, c in enumerate(row) if _nz(c)})
        for row in curve.rows
    ]
    restricted = form.float_image().evaluate(comps)
    coeffs = restricted.dense_coeffs() if restricted else []
    return univariate_roots([to_complex(c) for c in coeffs])
