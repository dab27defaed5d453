"""Gamma-family special functions.

All three are evaluated by shifting the argument above 10 with the usual
recurrences and then applying the asymptotic (Bernoulli) series, which keeps
the absolute error comfortably below 1e-10 over [0.1, 100].  They accept
scalars or numpy arrays and are used both by the Beta-divergence loss and
its gradient.
"""

from __future__ import annotations

import numpy as np

_SHIFT = 10.0

# B_{2k}/(2k) terms of the digamma asymptotic series.
_DIGAMMA_COEF = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
)

# B_{2k} terms of the trigamma asymptotic series.
_TRIGAMMA_COEF = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
)

# B_{2k}/(2k(2k-1)) terms of the Stirling series for log-gamma.
_LGAMMA_COEF = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
)

_HALF_LOG_2PI = 0.5 * np.log(2.0 * np.pi)


def _as_positive_array(x, name):
    arr = np.asarray(x, dtype=np.float64)
    if arr.size == 0 or not np.all(arr > 0.0):
        raise ValueError(f"{name} requires strictly positive arguments")
    return arr


def _maybe_scalar(out, x):
    if np.isscalar(x) or np.ndim(x) == 0:
        return float(out)
    return out


def digamma(x):
    """psi(x) = d/dx ln Gamma(x), for x > 0."""
    arr = _as_positive_array(x, "digamma")
    y = arr.copy()
    acc = np.zeros_like(y)
    while True:
        small = y < _SHIFT
        if not small.any():
            break
        acc[small] -= 1.0 / y[small]
        y[small] += 1.0
    inv2 = 1.0 / (y * y)
    series = np.zeros_like(y)
    term = inv2
    for c in _DIGAMMA_COEF:
        series += c * term
        term = term * inv2
    out = acc + np.log(y) - 0.5 / y - series
    return _maybe_scalar(out, x)


def trigamma(x):
    """psi'(x), for x > 0."""
    arr = _as_positive_array(x, "trigamma")
    y = arr.copy()
    acc = np.zeros_like(y)
    while True:
        small = y < _SHIFT
        if not small.any():
            break
        acc[small] += 1.0 / (y[small] * y[small])
        y[small] += 1.0
    inv = 1.0 / y
    inv2 = inv * inv
    series = np.zeros_like(y)
    term = inv * inv2
    for c in _TRIGAMMA_COEF:
        series += c * term
        term = term * inv2
    out = acc + inv + 0.5 * inv2 + series
    return _maybe_scalar(out, x)


def lgamma(x):
    """ln Gamma(x), for x > 0."""
    arr = _as_positive_array(x, "lgamma")
    y = arr.copy()
    acc = np.zeros_like(y)
    while True:
        small = y < _SHIFT
        if not small.any():
            break
        acc[small] -= np.log(y[small])
        y[small] += 1.0
    inv = 1.0 / y
    inv2 = inv * inv
    series = np.zeros_like(y)
    term = inv
    for c in _LGAMMA_COEF:
        series += c * term
        term = term * inv2
    out = acc + (y - 0.5) * np.log(y) - y + _HALF_LOG_2PI + series
    return _maybe_scalar(out, x)


def log_beta(a, b):
    """ln B(a, b) for positive a, b."""
    return lgamma(a) + lgamma(b) - lgamma(np.asarray(a, dtype=np.float64) + b)
