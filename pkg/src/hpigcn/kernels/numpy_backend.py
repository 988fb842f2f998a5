"""Pure-numpy kernels; contractions go through BLAS.

Accumulation over kernel taps happens tap by tap in increasing k order in
every kernel here. That order is what makes the average-pool / expanded-conv
and zero-padded-kernel identities hold bit-exactly, so keep it.
"""

from __future__ import annotations

import numpy as np


def _pad_time(x: np.ndarray, padding: int) -> np.ndarray:
    if padding == 0:
        return x
    n, c, t, v = x.shape
    out = np.zeros((n, c, t + 2 * padding, v), dtype=x.dtype)
    out[:, :, padding:padding + t, :] = x
    return out


def temporal_conv(x, weight, bias, stride, padding):
    n, c_in, t, v = x.shape
    c_out, _, k = weight.shape
    t_out = (t + 2 * padding - k) // stride + 1
    xp = _pad_time(x, padding)
    out = np.empty((n, c_out, t_out, v), dtype=x.dtype)
    out[:] = bias[:, None, None]
    span = (t_out - 1) * stride + 1
    for kk in range(k):
        xs = xp[:, :, kk:kk + span:stride, :].reshape(n, c_in, t_out * v)
        out += np.matmul(weight[:, :, kk], xs).reshape(n, c_out, t_out, v)
    return out


def pointwise_conv(x, weight, bias):
    n, c_in, t, v = x.shape
    out = np.matmul(weight, x.reshape(n, c_in, t * v)).reshape(n, -1, t, v)
    if bias is not None:
        out += bias[:, None, None]
    return out


def graph_conv(x, matrix):
    n, c, t, v = x.shape
    return np.matmul(x.reshape(-1, v), matrix).reshape(n, c, t, v)


def grouped_graph_conv(x, matrices, groups):
    n, c, t, v = x.shape
    cg = c // groups
    out = np.empty_like(x)
    for g in range(groups):
        xs = x[:, g * cg:(g + 1) * cg].reshape(-1, v)
        out[:, g * cg:(g + 1) * cg] = np.matmul(xs, matrices[g]).reshape(n, cg, t, v)
    return out


def avg_pool_time(x, k, stride, padding):
    n, c, t, v = x.shape
    t_out = (t + 2 * padding - k) // stride + 1
    xp = _pad_time(x, padding)
    out = np.zeros((n, c, t_out, v), dtype=x.dtype)
    inv = x.dtype.type(1) / x.dtype.type(k)
    span = (t_out - 1) * stride + 1
    for kk in range(k):
        out += inv * xp[:, :, kk:kk + span:stride, :]
    return out
