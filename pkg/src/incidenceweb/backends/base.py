"""Shared backend interface: a concrete admissible triple (X, Sigma, Z).

A backend owns a rational model of X inside one affine chart: ambient
coordinates, optional manifold constraints cutting X out of the model, the
affine form cutting Z, and the adjoint numerator basis.  Its chart maps a
vector of rn scalars to a rational curve of the family; the curve exposes
ambient points and the strict restriction polynomial of Z (forced
intersections already removed), both generic over the scalar type so the
same code serves plain evaluation, first-order duals and truncated series.
"""

from __future__ import annotations

import numpy as np

from ..roots import simple_roots
from ..scalars import to_complex


class BackendConstructionError(RuntimeError):
    pass


class CurveModel:
    """A realized curve: ambient affine points and the strict restriction."""

    def __init__(self, point_fn, restriction_coeffs):
        self._point_fn = point_fn
        self._restriction = restriction_coeffs

    def point(self, t):
        return self._point_fn(t)

    def restriction(self):
        return self._restriction


class IncidenceBackend:
    tag = "base"

    # subclasses set: r, n, num, ambient_dim, chart_dim, constraints (list of
    # MultiPoly over ambient vars), defining_form (MultiPoly), adjoints (list)

    def curve(self, sigma):
        raise NotImplementedError

    def base_chart_point(self, rng, radius=0.2, max_tries=25):
        """A random admissible chart point: d_exc simple strict intersections."""
        for _ in range(max_tries):
            sigma = [
                radius * (rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1))
                for _ in range(self.chart_dim)
            ]
            try:
                ts = self.probe(sigma)
            except Exception:
                continue
            if len(ts) == self.num.d_exc:
                return sigma
        raise BackendConstructionError(
            f"no admissible chart point found for {self.tag}"
        )

    def probe(self, sigma):
        """Strict intersection parameters at a float chart point."""
        curve = self.curve([complex(s) for s in sigma])
        coeffs = [to_complex(c) for c in curve.restriction()]
        return simple_roots(coeffs)

    def adjoint_count(self):
        return len(self.adjoints)

    def describe(self):
        return {
            "backend": self.tag,
            "r": self.r,
            "n": self.n,
            "d_exc": self.num.d_exc,
            "rho": self.num.rho_max_at_dexc,
            "chart_dim": self.chart_dim,
            "adjoint_count": self.adjoint_count(),
        }

    # -- residue scaffolding -------------------------------------------
    def constraint_gradients(self, point_values):
        """Float Jacobian of (constraints..., defining form) at an ambient point."""
        rows = []
        for g in list(self.constraints) + [self.defining_form]:
            rows.append(
                [to_complex(g.partial(i).evaluate(point_values)) for i in range(self.ambient_dim)]
            )
        return np.array(rows, dtype=complex)
