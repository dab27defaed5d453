"""Central-difference verification of reverse-mode gradients."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .rng import RngStream
from .tensor import Tensor, backward, zero_grad


@dataclass
class GradCheckResult:
    rel_errors: np.ndarray
    max_rel_error: float

    def fraction_below(self, tol: float) -> float:
        if self.rel_errors.size == 0:
            return 1.0
        return float(np.mean(self.rel_errors < tol))


def grad_check(loss_fn, params, step: float = 1e-4, sample: int | None = None,
               rng: RngStream | None = None) -> GradCheckResult:
    """Compare analytic gradients of loss_fn against central differences.

    loss_fn must be deterministic (freeze any sampled noise outside the
    closure) and return a scalar Tensor.  `sample` limits the check to a
    seeded subset of scalar parameter entries.  Relative error per entry is
    |a - f| / max(|a|, |f|, 1e-8).
    """
    params = list(params)
    zero_grad(params)
    loss = loss_fn()
    if not isinstance(loss, Tensor):
        raise TypeError("loss_fn must return a Tensor")
    backward(loss)
    analytic = [np.zeros_like(p.data) if p.grad is None else p.grad.copy() for p in params]

    entries = []
    for pi, p in enumerate(params):
        for flat in range(p.data.size):
            entries.append((pi, flat))
    if sample is not None and sample < len(entries):
        if rng is None:
            rng = RngStream(0, 0)
        idx = rng.gen.choice(len(entries), size=sample, replace=False)
        entries = [entries[i] for i in sorted(idx)]

    rel = np.empty(len(entries))
    for k, (pi, flat) in enumerate(entries):
        flatview = params[pi].data.reshape(-1)
        orig = flatview[flat]
        flatview[flat] = orig + step
        hi = float(loss_fn().data)
        flatview[flat] = orig - step
        lo = float(loss_fn().data)
        flatview[flat] = orig
        fd = (hi - lo) / (2.0 * step)
        an = float(analytic[pi].reshape(-1)[flat])
        rel[k] = abs(an - fd) / max(abs(an), abs(fd), 1e-8)
    return GradCheckResult(rel_errors=rel, max_rel_error=float(rel.max()) if rel.size else 0.0)
