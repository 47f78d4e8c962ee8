"""Sparse multivariate polynomials over exact or floating scalars.

Terms are a dict mapping exponent tuples to nonzero coefficients.  The class
stays deliberately small: ring arithmetic, partial derivatives and generic
evaluation.  Evaluation accepts any scalar type with arithmetic dunders
(complex, GaussianRational, dual numbers, truncated series, or MultiPoly
itself, which gives substitution/composition for free).
"""

from __future__ import annotations

from .scalars import GaussianRational, is_exact, to_complex


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                if _nonzero(c):
                    clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars, i, c=1):
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): c})

    @classmethod
    def monomial(cls, nvars, exps, c=1):
        return cls(nvars, {tuple(exps): c})

    # -- predicates ---------------------------------------------------
    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- ring arithmetic ----------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if _is_scalar(other):
                return MultiPoly(
                    self.nvars, {e: c * other for e, c in self.terms.items()}
                )
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise TypeError("polynomial powers must be non-negative ints")
        out = MultiPoly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if _is_scalar(other):
            return MultiPoly.constant(self.nvars, other)
        return NotImplemented

    # -- calculus and evaluation ---------------------------------------
    def partial(self, i):
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MultiPoly(self.nvars, out)

    def evaluate(self, point):
        """Evaluate at a point of scalars (or MultiPolys, for substitution)."""
        if len(point) != self.nvars:
            raise ValueError("point length mismatch")
        if not self.terms:
            return _zero_like(point)
        floaty = any(isinstance(p, (complex, float)) for p in point)
        # per-variable power cache keeps evaluation linear in the term count
        maxe = [0] * self.nvars
        for e in self.terms:
            for i, k in enumerate(e):
                if k > maxe[i]:
                    maxe[i] = k
        powers = []
        for i, p in enumerate(point):
            col = [None, p]
            for k in range(2, maxe[i] + 1):
                col.append(col[-1] * p)
            powers.append(col)
        total = None
        for e, c in self.terms.items():
            term = to_complex(c) if floaty else c
            for i, k in enumerate(e):
                if k:
                    term = powers[i][k] * term
            total = term if total is None else total + term
        return total

    def subs(self, replacements):
        """Substitute MultiPolys (all in a common variable set) for the variables."""
        return self.evaluate(list(replacements))

    def float_image(self):
        return MultiPoly(
            self.nvars, {e: to_complex(c) for e, c in self.terms.items()}
        )

    def map_coeffs(self, fn):
        return MultiPoly(self.nvars, {e: fn(c) for e, c in self.terms.items()})

    # -- univariate views ----------------------------------------------
    def dense_coeffs(self):
        """Ascending coefficient list; only for univariate polynomials."""
        if self.nvars != 1:
            raise ValueError("dense_coeffs needs a univariate polynomial")
        if not self.terms:
            return []
        deg = max(e[0] for e in self.terms)
        out = [0] * (deg + 1)
        for (k,), c in self.terms.items():
            out[k] = c
        return out

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(f"x{i}^{k}" for i, k in enumerate(e) if k)
            bits.append(f"({c}){'*' + mono if mono else ''}")
        return " + ".join(bits)


def monomials_of_degree(nvars, degree):
    """All exponent tuples of the given total degree (lexicographic)."""
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


def monomials_up_to_degree(nvars, degree):
    for d in range(degree + 1):
        yield from monomials_of_degree(nvars, d)


# -- exact univariate gcd ------------------------------------------------

def poly_gcd_exact(a, b):
    """Monic gcd of two univariate polynomials with exact coefficients.

    Inputs are ascending coefficient lists of ints / GaussianRationals.
    """
    fa = _trim_exact([_as_gr(c) for c in a])
    fb = _trim_exact([_as_gr(c) for c in b])
    while fb:
        fa, fb = fb, _poly_mod_exact(fa, fb)
    if not fa:
        return []
    lead = fa[-1]
    return [c / lead for c in fa]


def _poly_mod_exact(a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        f = a[-1] / lb
        for i in range(db + 1):
            a[da - db + i] = a[da - db + i] - f * b[i]
        a = _trim_exact(a[:-1])
        if not a:
            break
    return _trim_exact(a)


def _trim_exact(a):
    while a and not a[-1]:
        a.pop()
    return a


def _as_gr(c):
    return c if isinstance(c, GaussianRational) else GaussianRational(c)


def _is_scalar(x):
    return is_exact(x) or isinstance(x, (complex, float))


def _nonzero(c):
    if isinstance(c, (complex, float)):
        return c != 0.0
    return bool(c)


def _zero_like(point):
    for p in point:
        if isinstance(p, MultiPoly):
            return MultiPoly.zero(p.nvars)
    if any(isinstance(p, (complex, float)) for p in point):
        return 0j
    return GaussianRational(0)


def binomial(n, k):
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def count_monomials_up_to(nvars, degree):
    return binomial(nvars + degree, degree)


def homogeneous_random(nvars, degree, rng, lo=-3, hi=3, density=1.0):
    """Random homogeneous form with small integer coefficients."""
    terms = {}
    for exps in monomials_of_degree(nvars, degree):
        if density < 1.0 and rng.random() > density:
            continue
        c = rng.randint(lo, hi)
        if c:
            terms[exps] = GaussianRational(c)
    return MultiPoly(nvars, terms)


def sparse_random(nvars, degree, nterms, rng, lo=-5, hi=5):
    """Random homogeneous form with a bounded number of monomials."""
    monos = list(monomials_of_degree(nvars, degree))
    rng.shuffle(monos)
    terms = {}
    for exps in monos[: min(nterms, len(monos))]:
        c = rng.randint(lo, hi)
        if c:
            terms[exps] = GaussianRational(c)
    return MultiPoly(nvars, terms)
