"""Reference computations kept independent of the package internals."""

import numpy as np


def dft_matrix(n):
    """Unnormalized DFT matrix built from exact integer phase indices."""
    k = np.arange(n)
    idx = np.outer(k, k) % n
    angle = 2 * np.pi * idx / n
    return np.cos(angle) - 1j * np.sin(angle)


def dft2(x):
    x = np.asarray(x, dtype=complex)
    return dft_matrix(x.shape[0]) @ x @ dft_matrix(x.shape[1]).T


def chi_square_distance(h1, h2):
    h1 = np.asarray(h1, dtype=float)
    h2 = np.asarray(h2, dtype=float)
    denom = h1 + h2
    mask = denom > 0
    return float(np.sum((h1[mask] - h2[mask]) ** 2 / denom[mask]))
