"""Parameter containers for the dense (batch, channel, time, vertex) engine.

Activations are plain numpy arrays of rank 4 in NCTV order, row-major.
The engine runs in a single dtype per model, float32 or float64; every
parameter container carries arrays of that dtype and refuses mixtures.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, ShapeError

DTYPES = {"f32": np.float32, "f64": np.float64}

DEFAULT_BN_EPS = 1e-5


def dtype_name(dtype) -> str:
    dt = np.dtype(dtype)
    for name, cand in DTYPES.items():
        if dt == np.dtype(cand):
            return name
    raise ConfigError(f"unsupported dtype {dt}; the engine runs f32 or f64")


def resolve_dtype(dtype) -> np.dtype:
    """Accept 'f32'/'f64' strings or numpy dtypes; reject anything else."""
    if isinstance(dtype, str):
        if dtype not in DTYPES:
            raise ConfigError(f"unknown dtype name {dtype!r}; expected one of {sorted(DTYPES)}")
        return np.dtype(DTYPES[dtype])
    dt = np.dtype(dtype)
    dtype_name(dt)
    return dt


def _check_array(name: str, arr: np.ndarray, ndim: int) -> None:
    if not isinstance(arr, np.ndarray) or arr.ndim != ndim:
        raise ShapeError(f"{name} must be a rank-{ndim} array, got "
                         f"{getattr(arr, 'shape', type(arr).__name__)}")
    dtype_name(arr.dtype)
    if not np.all(np.isfinite(arr)):
        raise ConfigError(f"{name} contains non-finite values")


@dataclass(frozen=True)
class TemporalConvParams:
    """A K-tap convolution along the time axis, never mixing vertices.

    weight is (C_out, C_in, K); padding adds zeros symmetrically on the
    time axis before the kernel slides with the given stride.
    """

    weight: np.ndarray
    bias: np.ndarray
    stride: int = 1
    padding: int = 0

    def __post_init__(self) -> None:
        _check_array("temporal conv weight", self.weight, 3)
        _check_array("temporal conv bias", self.bias, 1)
        if self.bias.shape[0] != self.weight.shape[0]:
            raise ShapeError(f"bias length {self.bias.shape[0]} does not match "
                             f"C_out {self.weight.shape[0]}")
        if self.bias.dtype != self.weight.dtype:
            raise ConfigError("weight and bias dtypes differ")
        if self.stride < 1:
            raise ConfigError(f"stride must be positive, got {self.stride}")
        if self.padding < 0:
            raise ConfigError(f"padding must be non-negative, got {self.padding}")

    @property
    def c_out(self) -> int:
        return self.weight.shape[0]

    @property
    def c_in(self) -> int:
        return self.weight.shape[1]

    @property
    def k(self) -> int:
        return self.weight.shape[2]

    @property
    def dtype(self) -> np.dtype:
        return self.weight.dtype


@dataclass(frozen=True)
class PointwiseConvParams:
    """A 1x1 convolution: channel mixing only, (C_out, C_in) weight."""

    weight: np.ndarray
    bias: np.ndarray | None = None

    def __post_init__(self) -> None:
        _check_array("pointwise conv weight", self.weight, 2)
        if self.bias is not None:
            _check_array("pointwise conv bias", self.bias, 1)
            if self.bias.shape[0] != self.weight.shape[0]:
                raise ShapeError(f"bias length {self.bias.shape[0]} does not match "
                                 f"C_out {self.weight.shape[0]}")
            if self.bias.dtype != self.weight.dtype:
                raise ConfigError("weight and bias dtypes differ")

    @property
    def c_out(self) -> int:
        return self.weight.shape[0]

    @property
    def c_in(self) -> int:
        return self.weight.shape[1]

    @property
    def dtype(self) -> np.dtype:
        return self.weight.dtype


@dataclass(frozen=True)
class BatchNormParams:
    """Inference-time batch norm statistics and affine terms, per channel."""

    mean: np.ndarray
    var: np.ndarray
    scale: np.ndarray
    shift: np.ndarray
    eps: float = DEFAULT_BN_EPS

    def __post_init__(self) -> None:
        for name, arr in (("bn mean", self.mean), ("bn var", self.var),
                          ("bn scale", self.scale), ("bn shift", self.shift)):
            _check_array(name, arr, 1)
            if arr.shape != self.mean.shape:
                raise ShapeError("batch norm arrays must share one channel count")
            if arr.dtype != self.mean.dtype:
                raise ConfigError("batch norm arrays must share one dtype")
        if self.eps <= 0:
            raise ConfigError(f"bn eps must be positive, got {self.eps}")
        if np.any(self.var < 0) or np.any(self.var + self.eps <= 0):
            raise ConfigError("bn variance must satisfy var >= 0 and var + eps > 0")

    @property
    def channels(self) -> int:
        return self.mean.shape[0]

    @property
    def dtype(self) -> np.dtype:
        return self.mean.dtype


@dataclass(frozen=True)
class AdjacencyParam:
    """A learnable vertex-topology matrix, (V, V), unconstrained."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        _check_array("adjacency matrix", self.matrix, 2)
        if self.matrix.shape[0] != self.matrix.shape[1]:
            raise ShapeError(f"adjacency matrix must be square, got {self.matrix.shape}")

    @property
    def vertices(self) -> int:
        return self.matrix.shape[0]

    @property
    def dtype(self) -> np.dtype:
        return self.matrix.dtype


def identity_batch_norm(channels: int, dtype, eps: float = 2.0 ** -20) -> BatchNormParams:
    """A batch norm that is exactly the identity map.

    The default eps is a power of two so that var + eps reconstructs 1.0
    bit-exactly in both f32 and f64.
    """
    dt = resolve_dtype(dtype)
    one = np.ones(channels, dtype=dt)
    return BatchNormParams(mean=np.zeros(channels, dtype=dt),
                           var=one - dt.type(eps),
                           scale=one.copy(),
                           shift=np.zeros(channels, dtype=dt),
                           eps=eps)
