"""The (r, n) numerology: critical degrees, curve degree, and the housed
maximal-rank instances.

d_P = (r+1)(n-1)+2 is the classical bound; d_exc = (r+2)(n-1)+1 is the one
order where non-algebraizable maximal-rank webs can occur (r > 1, n >= 3).
Curves have degree q = d_exc - r(n-1) - 2 = 2n-3, and the valuation-zero
relation count is d_exc - r(n-1) - 1.

rho_max is a table of the instances actually used (n=3 and n=4 for all
r >= 2, plus (2,5) and (2,6)); the general closed formula is not restated
here.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass


class NumerologyError(ValueError):
    pass


@dataclass(frozen=True)
class Numerology:
    r: int
    n: int
    d_P: int
    d_exc: int
    q: int
    val0_count: int
    rho_max_at_dexc: int

    def as_dict(self):
        return asdict(self)


def rho_max(r, n):
    if n == 3 and r >= 2:
        return 2 * r + 4
    if n == 4 and r >= 2:
        return 3 * r + 6
    if (r, n) == (2, 5):
        return 16
    if (r, n) == (2, 6):
        return 20
    raise NumerologyError("rho instance not in paper")


def numerology(r, n):
    if r < 2 or n < 3:
        raise NumerologyError("need r >= 2 and n >= 3")
    rho = rho_max(r, n)
    d_p = (r + 1) * (n - 1) + 2
    d_exc = (r + 2) * (n - 1) + 1
    q = d_exc - r * (n - 1) - 2
    val0 = d_exc - r * (n - 1) - 1
    assert q == 2 * n - 3
    return Numerology(r, n, d_p, d_exc, q, val0, rho)
