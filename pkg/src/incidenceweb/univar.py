"""Generic univariate polynomial helpers.

Coefficient lists are ascending in the parameter.  Entries may be complex,
dual numbers or truncated series; everything here sticks to ring/field
operations so all three work.
"""

from __future__ import annotations


def polyval(coeffs, t):
    """Horner evaluation of an ascending coefficient list at t."""
    if not coeffs:
        return 0 * t
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * t + c
    return acc


def polyder(coeffs):
    return [c * k for k, c in enumerate(coeffs)][1:]


def deflate_linear(coeffs, root):
    """Synthetic division by (t - root): returns (quotient, remainder)."""
    if not coeffs:
        return [], 0 * root
    acc = coeffs[-1]
    out = [acc]
    for c in reversed(coeffs[:-1]):
        acc = acc * root + c
        out.append(acc)
    out.reverse()
    return out[1:], out[0]


def newton_root(coeffs, t0, steps=30, tol=1e-14):
    """Polish a root of a complex polynomial starting from t0."""
    d = polyder(coeffs)
    t = t0
    scale = max(abs(c) for c in coeffs) or 1.0
    for _ in range(steps):
        p = polyval(coeffs, t)
        dp = polyval(d, t)
        if dp == 0:
            break
        step = p / dp
        t = t - step
        if abs(step) <= tol * (1 + abs(t)) and abs(p) <= tol * scale * 10:
            break
    return t
