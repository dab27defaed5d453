# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled rollout kernels.

Same contracts as edgeloop.kernels.purepy; the per-step matvecs and gate
arithmetic run as C loops, which removes the interpreter overhead that
dominates slot-rate inference in closed-loop episodes.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, log1p, tanh

cnp.import_array()

NAME = "fastcore"


cdef inline double _sigmoid(double x) nogil:
    if x >= 0.0:
        return 1.0 / (1.0 + exp(-x))
    cdef double e = exp(x)
    return e / (1.0 + e)


cdef inline double _softplus(double x) nogil:
    if x > 0.0:
        return x + log1p(exp(-x))
    return log1p(exp(x))


cdef void _matvec_add(const double[::1] x, const double[:, ::1] w,
                      const double[::1] b, double[::1] out) nogil:
    # out = x @ w + b, with w laid out (in, out) row-major.
    cdef Py_ssize_t n = w.shape[0]
    cdef Py_ssize_t m = w.shape[1]
    cdef Py_ssize_t i, j
    cdef double xi
    for j in range(m):
        out[j] = b[j]
    for i in range(n):
        xi = x[i]
        for j in range(m):
            out[j] += xi * w[i, j]


cdef void _gru_step_c(const double[::1] x, double[::1] h,
                      const double[:, ::1] wi, const double[:, ::1] wh,
                      const double[::1] bi, const double[::1] bh,
                      double[::1] gx, double[::1] gh) nogil:
    cdef Py_ssize_t hdim = wh.shape[0]
    cdef Py_ssize_t j
    cdef double r, u, n
    _matvec_add(x, wi, bi, gx)
    _matvec_add(h, wh, bh, gh)
    for j in range(hdim):
        r = _sigmoid(gx[j] + gh[j])
        u = _sigmoid(gx[hdim + j] + gh[hdim + j])
        n = tanh(gx[2 * hdim + j] + r * gh[2 * hdim + j])
        h[j] = (1.0 - u) * n + u * h[j]


def gru_step(x, h, wi, wh, bi, bh):
    """One GRU step for 1-D x (in,) and h (H,)."""
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    h_out = np.array(h, dtype=np.float64, copy=True)
    cdef double[::1] hv = h_out
    cdef double[:, ::1] wiv = np.ascontiguousarray(wi, dtype=np.float64)
    cdef double[:, ::1] whv = np.ascontiguousarray(wh, dtype=np.float64)
    cdef double[::1] biv = np.ascontiguousarray(bi, dtype=np.float64)
    cdef double[::1] bhv = np.ascontiguousarray(bh, dtype=np.float64)
    gx = np.empty(3 * h_out.shape[0])
    gh = np.empty(3 * h_out.shape[0])
    _gru_step_c(xv, hv, wiv, whv, biv, bhv, gx, gh)
    return h_out


def traj_rollout(h0, dest, wi, wh, bi, bh, ww, wb, Py_ssize_t steps, double wp_scale):
    """Autoregressive waypoint rollout; see purepy.traj_rollout."""
    cdef Py_ssize_t hdim = h0.shape[0]
    hs = np.empty((steps, hdim))
    wps = np.empty((steps, 2))
    cdef double[:, ::1] hs_v = hs
    cdef double[:, ::1] wps_v = wps
    h_buf = np.array(h0, dtype=np.float64, copy=True)
    cdef double[::1] h = h_buf
    cdef double[:, ::1] wiv = np.ascontiguousarray(wi, dtype=np.float64)
    cdef double[:, ::1] whv = np.ascontiguousarray(wh, dtype=np.float64)
    cdef double[::1] biv = np.ascontiguousarray(bi, dtype=np.float64)
    cdef double[::1] bhv = np.ascontiguousarray(bh, dtype=np.float64)
    cdef double[:, ::1] wwv = np.ascontiguousarray(ww, dtype=np.float64)
    cdef double[::1] wbv = np.ascontiguousarray(wb, dtype=np.float64)
    cdef double[::1] destv = np.ascontiguousarray(dest, dtype=np.float64)
    cdef double[::1] gx = np.empty(3 * hdim)
    cdef double[::1] gh = np.empty(3 * hdim)
    cdef double[::1] x = np.empty(4)
    cdef double wx = 0.0, wy = 0.0, dx, dy
    cdef Py_ssize_t k, i
    for k in range(steps):
        x[0] = wx / wp_scale
        x[1] = wy / wp_scale
        x[2] = destv[0]
        x[3] = destv[1]
        _gru_step_c(x, h, wiv, whv, biv, bhv, gx, gh)
        dx = wbv[0]
        dy = wbv[1]
        for i in range(hdim):
            dx += h[i] * wwv[i, 0]
            dy += h[i] * wwv[i, 1]
        wx += dx
        wy += dy
        for i in range(hdim):
            hs_v[k, i] = h[i]
        wps_v[k, 0] = wx
        wps_v[k, 1] = wy
    return hs, wps


def ctrl_rollout(r0, mid, traj_hs, wi, wh, bi, bh, gate_w, gate_b,
                 feat_w, feat_b, beta_w, beta_b, Py_ssize_t steps):
    """Gated control-feature rollout; see purepy.ctrl_rollout."""
    cdef Py_ssize_t hdim = wh.shape[0]
    cdef Py_ssize_t fdim = r0.shape[0]
    cdef Py_ssize_t mdim = gate_w.shape[1]
    cdef Py_ssize_t bdim = beta_w.shape[1]
    hs = np.empty((steps, hdim))
    feats = np.empty((steps + 1, fdim))
    betas = np.empty((steps + 1, bdim))
    cdef double[:, ::1] hs_v = hs
    cdef double[:, ::1] feats_v = feats
    cdef double[:, ::1] betas_v = betas
    cdef double[::1] r0v = np.ascontiguousarray(r0, dtype=np.float64)
    cdef double[::1] midv = np.ascontiguousarray(mid, dtype=np.float64)
    cdef double[:, ::1] thv = np.ascontiguousarray(traj_hs, dtype=np.float64)
    cdef double[:, ::1] wiv = np.ascontiguousarray(wi, dtype=np.float64)
    cdef double[:, ::1] whv = np.ascontiguousarray(wh, dtype=np.float64)
    cdef double[::1] biv = np.ascontiguousarray(bi, dtype=np.float64)
    cdef double[::1] bhv = np.ascontiguousarray(bh, dtype=np.float64)
    cdef double[:, ::1] gwv = np.ascontiguousarray(gate_w, dtype=np.float64)
    cdef double[::1] gbv = np.ascontiguousarray(gate_b, dtype=np.float64)
    cdef double[:, ::1] fwv = np.ascontiguousarray(feat_w, dtype=np.float64)
    cdef double[::1] fbv = np.ascontiguousarray(feat_b, dtype=np.float64)
    cdef double[:, ::1] bwv = np.ascontiguousarray(beta_w, dtype=np.float64)
    cdef double[::1] bbv = np.ascontiguousarray(beta_b, dtype=np.float64)
    cdef double[::1] h = np.zeros(hdim)
    cdef double[::1] x = np.empty(fdim)
    cdef double[::1] gx = np.empty(3 * hdim)
    cdef double[::1] gh = np.empty(3 * hdim)
    cdef double[::1] gin = np.empty(2 * hdim)
    cdef double[::1] gated = np.empty(mdim)
    cdef double[::1] fraw = np.empty(fdim)
    cdef double[::1] braw = np.empty(bdim)
    cdef Py_ssize_t k, i, j

    for i in range(fdim):
        feats_v[0, i] = r0v[i]
        x[i] = r0v[i]
    _matvec_add(r0v, bwv, bbv, braw)
    for j in range(bdim):
        betas_v[0, j] = _softplus(braw[j]) + 1.0

    for k in range(steps):
        _gru_step_c(x, h, wiv, whv, biv, bhv, gx, gh)
        for i in range(hdim):
            hs_v[k, i] = h[i]
            gin[i] = thv[k, i]
            gin[hdim + i] = h[i]
        _matvec_add(gin, gwv, gbv, gated)
        for j in range(mdim):
            gated[j] = _sigmoid(gated[j]) * midv[j]
        _matvec_add(gated, fwv, fbv, fraw)
        for i in range(fdim):
            x[i] = tanh(fraw[i])
            feats_v[k + 1, i] = x[i]
        _matvec_add(x, bwv, bbv, braw)
        for j in range(bdim):
            betas_v[k + 1, j] = _softplus(braw[j]) + 1.0
    return hs, feats, betas
