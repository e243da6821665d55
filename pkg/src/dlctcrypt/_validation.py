"""Input checking helpers used by the public functions and the estimators."""

import math
from numbers import Integral, Real

import numpy as np

from .exceptions import ParameterError, ShapeError


def check_gray_image(img, *, min_size=1, name="image"):
    """Return ``img`` as a C-contiguous 2D uint8 array.

    Integer arrays are accepted if every value lies in [0, 255]; float arrays
    must additionally hold integral values.
    """
    arr = np.asarray(img)
    if arr.ndim != 2:
        raise ShapeError(f"{name} must be 2D, got shape {arr.shape}")
    if arr.shape[0] < min_size or arr.shape[1] < min_size:
        raise ShapeError(f"{name} must be at least {min_size}x{min_size}, got {arr.shape}")
    if arr.dtype == np.uint8:
        return np.ascontiguousarray(arr)
    if arr.dtype.kind == "b" or arr.dtype.kind not in "iuf":
        raise ParameterError(f"{name} must hold integer intensities, got dtype {arr.dtype}")
    if arr.dtype.kind == "f" and not np.all(np.isfinite(arr) & (arr == np.round(arr))):
        raise ParameterError(f"{name} has non-integral intensities")
    if arr.size and (arr.min() < 0 or arr.max() > 255):
        raise ParameterError(f"{name} intensities must lie in [0, 255]")
    return np.ascontiguousarray(arr, dtype=np.uint8)


def check_complex_matrix(c, *, min_size=1, name="matrix"):
    arr = np.asarray(c)
    if arr.ndim != 2:
        raise ShapeError(f"{name} must be 2D, got shape {arr.shape}")
    if arr.shape[0] < min_size or arr.shape[1] < min_size:
        raise ShapeError(f"{name} must be at least {min_size}x{min_size}, got {arr.shape}")
    if arr.dtype.kind not in "biufc":
        raise ParameterError(f"{name} must be numeric, got dtype {arr.dtype}")
    arr = np.ascontiguousarray(arr, dtype=np.complex128)
    if not np.all(np.isfinite(arr)):
        raise ParameterError(f"{name} contains NaN or Inf")
    return arr


def check_same_shape(a, b):
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch: {a.shape} vs {b.shape}")


def check_finite_real(value, name):
    if isinstance(value, bool) or not isinstance(value, Real):
        raise ParameterError(f"{name} must be a real number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ParameterError(f"{name} must be finite, got {value!r}")
    return value


def check_non_negative_int(value, name):
    if isinstance(value, bool):
        raise ParameterError(f"{name} must be an integer, got {value!r}")
    if not isinstance(value, Integral):
        if isinstance(value, Real) and float(value).is_integer():
            value = int(value)
        else:
            raise ParameterError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if value < 0:
        raise ParameterError(f"{name} must be non-negative, got {value}")
    return value
