"""Rollout kernel backend selection.

The compiled core is preferred when the extension built; set
EDGELOOP_PURE_PYTHON=1 to force the numpy fallback (used by the benchmark
and by the backend-parity tests).
"""

import os

from . import purepy

if os.environ.get("EDGELOOP_PURE_PYTHON"):
    _backend = purepy
else:
    try:
        from . import _fastcore as _backend  # type: ignore[attr-defined]
    except ImportError:
        _backend = purepy

gru_step = _backend.gru_step
traj_rollout = _backend.traj_rollout
ctrl_rollout = _backend.ctrl_rollout


def backend_name() -> str:
    return _backend.NAME


def backends():
    """All importable backends, for parity tests and benchmarks."""
    out = {"purepy": purepy}
    try:
        from . import _fastcore

        out["fastcore"] = _fastcore
    except ImportError:
        pass
    return out
