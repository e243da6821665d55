"""Logistic-map sequences and the scrambling permutations derived from them."""

from dataclasses import dataclass

import numpy as np

from ._validation import check_finite_real, check_non_negative_int
from .exceptions import DegenerateOrbitError, ParameterError, ShapeError

#: Lower edge of the chaotic regime of the logistic map.
MU_MIN = 3.5699456
MU_MAX = 4.0


@dataclass(frozen=True)
class LogisticParams:
    """Initial value, bifurcation parameter and discard count of one orbit."""

    x0: float
    mu: float
    discard: int = 0

    def __post_init__(self):
        x0 = check_finite_real(self.x0, "x0")
        mu = check_finite_real(self.mu, "mu")
        discard = check_non_negative_int(self.discard, "discard")
        if not 0.0 < x0 < 1.0:
            raise ParameterError(f"x0 must lie in the open interval (0, 1), got {x0!r}")
        if not MU_MIN <= mu <= MU_MAX:
            raise ParameterError(
                f"mu must lie in the chaotic regime [{MU_MIN}, {MU_MAX}], got {mu!r}"
            )
        object.__setattr__(self, "x0", x0)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "discard", discard)


def logistic_sequence(params, count):
    """Iterate ``x <- mu * x * (1 - x)`` from ``params.x0``.

    The first ``params.discard`` iterates are dropped and the next ``count``
    are returned, so element ``i`` is iterate number ``discard + i + 1``.

    Raises
    ------
    DegenerateOrbitError
        If the orbit lands exactly on 0 or 1, after which it is stuck at 0.
    """
    if not isinstance(params, LogisticParams):
        raise ParameterError("params must be a LogisticParams instance")
    count = check_non_negative_int(count, "count")
    if count < 1:
        raise ParameterError("count must be at least 1")

    mu = params.mu
    x = params.x0
    # Plain float loop: each step depends on the previous one, and the
    # evaluation order (mu * x) * (1 - x) is part of the cipher's contract.
    for _ in range(params.discard):
        x = mu * x * (1.0 - x)
    out = [0.0] * count
    for i in range(count):
        x = mu * x * (1.0 - x)
        out[i] = x
    seq = np.array(out, dtype=np.float64)
    if not (seq.min() > 0.0 and seq.max() < 1.0):
        raise DegenerateOrbitError(
            f"logistic orbit from x0={params.x0!r}, mu={params.mu!r} left (0, 1)"
        )
    return seq


def permutation_from_sequence(seq):
    """Stable ascending argsort: ``index[j]`` is the position of the j-th smallest value."""
    seq = np.asarray(seq, dtype=np.float64)
    if seq.ndim != 1:
        raise ShapeError("sequence must be one-dimensional")
    if seq.size == 0:
        raise ParameterError("cannot build a permutation from an empty sequence")
    return np.argsort(seq, kind="stable").astype(np.int64)


def check_permutation(p):
    p = np.asarray(p)
    if p.ndim != 1 or p.dtype.kind not in "iu":
        raise ParameterError("permutation must be a 1D integer array")
    if not np.array_equal(np.sort(p), np.arange(p.size)):
        raise ParameterError("index array is not a permutation of 0..n-1")
    return p.astype(np.int64, copy=False)


def invert_permutation(p):
    p = check_permutation(p)
    q = np.empty_like(p)
    q[p] = np.arange(p.size, dtype=np.int64)
    return q


def apply_permutation(v, p):
    """Gather: ``out[j] = v[p[j]]``. Works for any element dtype."""
    v = np.asarray(v)
    p = np.asarray(p)
    if v.ndim != 1 or p.ndim != 1 or v.shape[0] != p.shape[0]:
        raise ShapeError(
            f"vector of shape {v.shape} does not match permutation of shape {p.shape}"
        )
    return v[p]


def scrambling_permutation(params, size):
    """The permutation a key produces for a vector of ``size`` elements."""
    return permutation_from_sequence(logistic_sequence(params, size))
