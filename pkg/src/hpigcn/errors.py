"""Exception types shared across the engine."""


class ShapeError(ValueError):
    """Tensor or parameter shapes are inconsistent."""


class ConfigError(ValueError):
    """A structural or configuration constraint is violated."""


class WeightStoreError(Exception):
    """A weight container file is malformed or cannot be decoded."""
