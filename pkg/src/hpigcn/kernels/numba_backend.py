"""Numba-compiled scalar kernels.

Loop order is pinned: output elements accumulate input channel outer,
kernel tap inner, so fused-vs-unfused comparisons are bit-stable and the
pool/conv expansion identity is exact. No fastmath anywhere; it would let
LLVM reassociate the accumulations.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange


@njit(cache=True, parallel=True)
def _temporal_conv(xp, weight, bias, stride, t_out):
    n_b, c_in, _, n_v = xp.shape
    c_out = weight.shape[0]
    k = weight.shape[2]
    out = np.empty((n_b, c_out, t_out, n_v), xp.dtype)
    for no in prange(n_b * c_out):
        n = no // c_out
        o = no % c_out
        for t in range(t_out):
            for v in range(n_v):
                out[n, o, t, v] = bias[o]
            for i in range(c_in):
                for kk in range(k):
                    w = weight[o, i, kk]
                    base = t * stride + kk
                    for v in range(n_v):
                        out[n, o, t, v] += w * xp[n, i, base, v]
    return out


@njit(cache=True, parallel=True)
def _pointwise_conv(x, weight):
    n_b, c_in, n_t, n_v = x.shape
    c_out = weight.shape[0]
    out = np.empty((n_b, c_out, n_t, n_v), x.dtype)
    for no in prange(n_b * c_out):
        n = no // c_out
        o = no % c_out
        for t in range(n_t):
            for v in range(n_v):
                out[n, o, t, v] = 0.0
            for i in range(c_in):
                w = weight[o, i]
                for v in range(n_v):
                    out[n, o, t, v] += w * x[n, i, t, v]
    return out


@njit(cache=True, parallel=True)
def _graph_conv(x, matrix):
    n_b, c, n_t, n_v = x.shape
    out = np.empty_like(x)
    for nc in prange(n_b * c):
        n = nc // c
        ch = nc % c
        for t in range(n_t):
            for v in range(n_v):
                out[n, ch, t, v] = 0.0
            for u in range(n_v):
                xu = x[n, ch, t, u]
                for v in range(n_v):
                    out[n, ch, t, v] += xu * matrix[u, v]
    return out


@njit(cache=True, parallel=True)
def _grouped_graph_conv(x, matrices, groups):
    n_b, c, n_t, n_v = x.shape
    cg = c // groups
    out = np.empty_like(x)
    for nc in prange(n_b * c):
        n = nc // c
        ch = nc % c
        g = ch // cg
        for t in range(n_t):
            for v in range(n_v):
                out[n, ch, t, v] = 0.0
            for u in range(n_v):
                xu = x[n, ch, t, u]
                for v in range(n_v):
                    out[n, ch, t, v] += xu * matrices[g, u, v]
    return out


@njit(cache=True, parallel=True)
def _avg_pool_time(xp, inv, k, stride, t_out):
    n_b, c, _, n_v = xp.shape
    out = np.empty((n_b, c, t_out, n_v), xp.dtype)
    for nc in prange(n_b * c):
        n = nc // c
        ch = nc % c
        for t in range(t_out):
            for v in range(n_v):
                out[n, ch, t, v] = 0.0
            for kk in range(k):
                base = t * stride + kk
                for v in range(n_v):
                    out[n, ch, t, v] += inv * xp[n, ch, base, v]
    return out


def _pad_time(x, padding):
    if padding == 0:
        return np.ascontiguousarray(x)
    n, c, t, v = x.shape
    out = np.zeros((n, c, t + 2 * padding, v), dtype=x.dtype)
    out[:, :, padding:padding + t, :] = x
    return out


def temporal_conv(x, weight, bias, stride, padding):
    t_out = (x.shape[2] + 2 * padding - weight.shape[2]) // stride + 1
    return _temporal_conv(_pad_time(x, padding), np.ascontiguousarray(weight),
                          np.ascontiguousarray(bias), stride, t_out)


def pointwise_conv(x, weight, bias):
    out = _pointwise_conv(np.ascontiguousarray(x), np.ascontiguousarray(weight))
    if bias is not None:
        out += bias[:, None, None]
    return out


def graph_conv(x, matrix):
    return _graph_conv(np.ascontiguousarray(x), np.ascontiguousarray(matrix))


def grouped_graph_conv(x, matrices, groups):
    stacked = np.ascontiguousarray(np.stack(matrices))
    return _grouped_graph_conv(np.ascontiguousarray(x), stacked, groups)


def avg_pool_time(x, k, stride, padding):
    t_out = (x.shape[2] + 2 * padding - k) // stride + 1
    inv = x.dtype.type(1) / x.dtype.type(k)
    return _avg_pool_time(_pad_time(x, padding), inv, k, stride, t_out)
