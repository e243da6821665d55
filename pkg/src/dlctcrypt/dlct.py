"""Discrete linear chirp transform (DLCT) in one and two dimensions.

The 1D kernel over a length-``N`` axis with chirp rate ``beta`` is::

    K(n, k) = exp(-2j*pi/N * (k*n + beta*n**2))

so the forward transform is a DFT of the input pre-multiplied by the
quadratic-phase sequence ``exp(-2j*pi*beta*n**2/N)``. The 2D transform is the
tensor product of two such kernels, ``beta_x`` along axis 0 (size N) and
``beta_y`` along axis 1 (size M).

The forward transform is unnormalized; the inverse carries the full
``1/(N*M)`` factor (see ``FFT_NORM``) so that ``inverse(forward(x)) == x``.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.fft

from ._validation import check_complex_matrix, check_finite_real
from .exceptions import ParameterError, SizeLimitError

#: Normalization convention handed to the FFT: forward unscaled, inverse 1/n.
FFT_NORM = "backward"

#: Default element cap for the brute-force O(N^2 M^2) transform.
DIRECT_MAX_ELEMENTS = 4096


@dataclass(frozen=True)
class ChirpRates:
    beta_x: float
    beta_y: float

    def __post_init__(self):
        object.__setattr__(self, "beta_x", check_finite_real(self.beta_x, "beta_x"))
        object.__setattr__(self, "beta_y", check_finite_real(self.beta_y, "beta_y"))


def _as_rates(rates):
    if isinstance(rates, ChirpRates):
        return rates
    beta_x, beta_y = rates
    return ChirpRates(beta_x, beta_y)


def kernel_value(n, k, size, beta):
    if size < 1:
        raise ParameterError(f"size must be positive, got {size}")
    if not (0 <= n < size and 0 <= k < size):
        raise ParameterError(f"indices (n={n}, k={k}) out of range for size {size}")
    beta = check_finite_real(beta, "beta")
    return complex(np.exp(-2j * np.pi / size * (k * n + beta * n * n)))


@lru_cache(maxsize=64)
def _chirp_table(size, beta):
    n = np.arange(size, dtype=np.float64)
    table = np.exp(-2j * np.pi * beta * n * n / size)
    table.flags.writeable = False
    return table


def chirp(size, beta):
    """Quadratic-phase factor ``exp(-2j*pi*beta*n**2/size)`` for n in [0, size)."""
    return _chirp_table(int(size), float(beta))


def _along(table, ndim, axis):
    shape = [1] * ndim
    shape[axis] = table.size
    return table.reshape(shape)


def dlct1_forward(v, beta, axis=-1, workers=None):
    """1D DLCT along ``axis`` of ``v`` (every other axis is batched)."""
    v = np.asarray(v, dtype=np.complex128)
    beta = check_finite_real(beta, "beta")
    axis = axis % v.ndim
    c = _along(chirp(v.shape[axis], beta), v.ndim, axis)
    return scipy.fft.fft(v * c, axis=axis, norm=FFT_NORM, workers=workers)


def dlct1_inverse(X, beta, axis=-1, workers=None):
    X = np.asarray(X, dtype=np.complex128)
    beta = check_finite_real(beta, "beta")
    axis = axis % X.ndim
    c = _along(chirp(X.shape[axis], beta), X.ndim, axis)
    return scipy.fft.ifft(X, axis=axis, norm=FFT_NORM, workers=workers) * np.conj(c)


def dlct2_forward(img, rates, workers=None):
    """Separable fast 2D DLCT: rows with ``beta_y``, then columns with ``beta_x``."""
    x = check_complex_matrix(img)
    rates = _as_rates(rates)
    rows_done = dlct1_forward(x, rates.beta_y, axis=1, workers=workers)
    return dlct1_forward(rows_done, rates.beta_x, axis=0, workers=workers)


def dlct2_inverse(X, rates, workers=None):
    X = check_complex_matrix(X)
    rates = _as_rates(rates)
    cols_done = dlct1_inverse(X, rates.beta_x, axis=0, workers=workers)
    return dlct1_inverse(cols_done, rates.beta_y, axis=1, workers=workers)


def _direct_kernel(size, beta):
    n = np.arange(size, dtype=np.float64)[:, None]
    k = np.arange(size, dtype=np.float64)[None, :]
    return np.exp(-2j * np.pi / size * (k * n + beta * n * n))


def dlct2_forward_direct(img, rates, max_elements=DIRECT_MAX_ELEMENTS):
    """Literal quadruple sum over the full 2D kernel. Test oracle only.

    Costs O(N^2 M^2); refuses inputs with more than ``max_elements`` entries.
    """
    x = check_complex_matrix(img)
    rates = _as_rates(rates)
    N, M = x.shape
    if N * M > max_elements:
        raise SizeLimitError(
            f"direct transform limited to {max_elements} elements, got {N}x{M}={N * M}"
        )
    kx = _direct_kernel(N, rates.beta_x)
    ky = _direct_kernel(M, rates.beta_y)
    out = np.empty((N, M), dtype=np.complex128)
    for k in range(N):
        for ell in range(M):
            out[k, ell] = np.sum(x * np.outer(kx[:, k], ky[:, ell]))
    return out
