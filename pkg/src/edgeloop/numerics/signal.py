"""Complex-vector helpers: unitary transforms and circular noise.

The DFT pair uses the unitary convention (1/sqrt(N) both ways) so round
trips are exact and energy is preserved, which keeps the transmit-side
power bookkeeping in the channel module trivial.
"""

from __future__ import annotations

import numpy as np

from .rng import RngStream


def _as_complex_vec(v) -> np.ndarray:
    arr = np.asarray(v, dtype=np.complex128)
    if arr.ndim != 1 or arr.size < 1:
        raise ValueError("expected a non-empty 1-D complex vector")
    return arr


def dft(v) -> np.ndarray:
    """Unitary DFT of a complex vector."""
    return np.fft.fft(_as_complex_vec(v), norm="ortho")


def idft(v) -> np.ndarray:
    """Unitary inverse DFT of a complex vector."""
    return np.fft.ifft(_as_complex_vec(v), norm="ortho")


def energy(v) -> float:
    """Sum of squared magnitudes."""
    arr = np.asarray(v, dtype=np.complex128)
    return float(np.sum(arr.real**2 + arr.imag**2))


def sample_complex_gaussian(rng: RngStream, n: int, variance: float) -> np.ndarray:
    """n i.i.d. circular complex Gaussians with E|x|^2 = variance.

    Real and imaginary parts are each N(0, variance/2).
    """
    if variance < 0:
        raise ValueError(f"variance must be >= 0, got {variance}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    scale = np.sqrt(variance / 2.0)
    re = rng.standard_normal(n)
    im = rng.standard_normal(n)
    return scale * (re + 1j * im)
