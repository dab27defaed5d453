"""Pure-numpy rollout kernels (fallback backend).

These mirror edgeloop.kernels._fastcore step for step; both backends must
produce the same sequences to float tolerance.  Weight layout for a GRU:
wi (in, 3H), wh (H, 3H), bi (3H,), bh (3H,) with gate columns packed
[reset | update | candidate], and the candidate's hidden contribution
(including its bias slice) multiplied by the reset gate.
"""

from __future__ import annotations

import numpy as np

NAME = "purepy"


def _sigmoid(x):
    return 1.0 / (1.0 + np.exp(-np.clip(x, -500, 500)))


def _softplus(x):
    return np.logaddexp(0.0, x)


def gru_step(x, h, wi, wh, bi, bh):
    """One GRU step for 1-D x (in,) and h (H,)."""
    hdim = h.shape[0]
    gx = x @ wi + bi
    gh = h @ wh + bh
    r = _sigmoid(gx[:hdim] + gh[:hdim])
    u = _sigmoid(gx[hdim : 2 * hdim] + gh[hdim : 2 * hdim])
    n = np.tanh(gx[2 * hdim :] + r * gh[2 * hdim :])
    return (1.0 - u) * n + u * h


def traj_rollout(h0, dest, wi, wh, bi, bh, ww, wb, steps, wp_scale):
    """Autoregressive waypoint rollout.

    Hidden starts at the trajectory feature; each step consumes the previous
    cumulative waypoint (scaled) plus the destination cue and emits a
    displacement.  Returns (hidden_seq (steps, H), waypoints (steps, 2)).
    """
    hdim = h0.shape[0]
    hs = np.empty((steps, hdim))
    wps = np.empty((steps, 2))
    h = h0
    wp = np.zeros(2)
    for k in range(steps):
        x = np.concatenate((wp / wp_scale, dest))
        h = gru_step(x, h, wi, wh, bi, bh)
        wp = wp + (h @ ww + wb)
        hs[k] = h
        wps[k] = wp
    return hs, wps


def ctrl_rollout(r0, mid, traj_hs, wi, wh, bi, bh, gate_w, gate_b,
                 feat_w, feat_b, beta_w, beta_b, steps):
    """Autoregressive control-feature rollout with feature-map gating.

    The hidden starts at zero and first consumes the control feature r0.
    Each step gates the trunk's mid-layer map with a sigmoid of the paired
    (trajectory, control) hidden states, maps the gated features to the next
    control feature, and emits Beta command parameters (softplus + 1).

    Returns (hidden_seq (steps, H), features (steps+1, F), betas (steps+1, 4))
    where features[0] = r0.
    """
    hdim = wh.shape[0]
    fdim = r0.shape[0]
    hs = np.empty((steps, hdim))
    feats = np.empty((steps + 1, fdim))
    betas = np.empty((steps + 1, beta_w.shape[1]))
    feats[0] = r0
    betas[0] = _softplus(r0 @ beta_w + beta_b) + 1.0
    h = np.zeros(hdim)
    x = r0
    for k in range(steps):
        h = gru_step(x, h, wi, wh, bi, bh)
        hs[k] = h
        gate = _sigmoid(np.concatenate((traj_hs[k], h)) @ gate_w + gate_b)
        r = np.tanh((gate * mid) @ feat_w + feat_b)
        feats[k + 1] = r
        betas[k + 1] = _softplus(r @ beta_w + beta_b) + 1.0
        x = r
    return hs, feats, betas
