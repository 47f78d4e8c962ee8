"""Univariate complex root finding.

Companion-matrix eigenvalues with one Newton polish per root.  Good for the
degrees met here (<= 60).  Roots come back with a "simple" flag: a root is
simple iff its distance to every other root exceeds the separation
tolerance.
"""

from __future__ import annotations

import numpy as np

from . import univar

SEPARATION_TOL = 1e-6
RESIDUAL_TOL = 1e-9


class DegenerateRestrictionError(ValueError):
    """Raised for an identically-zero polynomial (curve inside the hypersurface)."""


def univariate_roots(coeffs, separation_tol=SEPARATION_TOL, polish_steps=1):
    """All roots (with multiplicity) of an ascending complex coefficient list.

    Returns a list of (root, simple) pairs of length deg after trimming
    ~zero leading coefficients.
    """
    c = np.asarray(list(coeffs), dtype=complex)
    if c.size == 0 or np.abs(c).max() == 0.0:
        raise DegenerateRestrictionError("degenerate restriction")
    scale = np.abs(c).max()
    trim_tol = 1e-13 * scale
    deg = c.size - 1
    while deg > 0 and abs(c[deg]) <= trim_tol:
        deg -= 1
    if deg < 1:
        raise ValueError("constant restriction, no roots to return")
    c = c[: deg + 1]

    comp = np.zeros((deg, deg), dtype=complex)
    comp[1:, :-1] = np.eye(deg - 1)
    comp[:, -1] = -c[:-1] / c[-1]
    roots = np.linalg.eigvals(comp)

    clist = list(c)
    for _ in range(polish_steps):
        roots = np.array([univar.newton_root(clist, t, steps=1) for t in roots])

    order = np.lexsort((roots.imag, roots.real))
    roots = roots[order]
    flags = []
    for i, t in enumerate(roots):
        sep = min(
            (abs(t - s) for j, s in enumerate(roots) if j != i), default=np.inf
        )
        flags.append(sep > separation_tol)
    return [(complex(t), bool(f)) for t, f in zip(roots, flags)]


def simple_roots(coeffs, separation_tol=SEPARATION_TOL):
    """Roots list when all roots are expected simple; raises if any is not."""
    pairs = univariate_roots(coeffs, separation_tol)
    if not all(f for _, f in pairs):
        raise ValueError("repeated or clustered roots where simple ones expected")
    return [t for t, _ in pairs]


def max_residual(coeffs, roots):
    clist = [complex(x) for x in coeffs]
    return max(abs(univar.polyval(clist, t)) for t in roots)
