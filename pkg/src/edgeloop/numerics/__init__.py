from .rng import RngStream, stable_hash64
from .special import digamma, lgamma, trigamma
from .signal import dft, energy, idft, sample_complex_gaussian
from .tensor import Tensor
from .gradcheck import GradCheckResult, grad_check

__all__ = [
    "RngStream",
    "stable_hash64",
    "digamma",
    "lgamma",
    "trigamma",
    "dft",
    "idft",
    "energy",
    "sample_complex_gaussian",
    "Tensor",
    "GradCheckResult",
    "grad_check",
]
