"""Security metrics and attack simulations for the cipher."""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ._validation import check_complex_matrix, check_gray_image, check_same_shape
from .cipher import PARAM_NAMES, P1_MODULUS, P2_MODULUS, decrypt, encrypt
from .chaos import MU_MAX, MU_MIN
from .exceptions import DegenerateDataError, ParameterError, ShapeError

DEFAULT_PAIRS = 6000
DEFAULT_CORRELATION_SEED = 42
DEFAULT_NOISE_SEED = 7
PEAK = 255.0

#: (row, col) offset of the neighbour for each direction.
DIRECTIONS = {
    "horizontal": (0, 1),
    "vertical": (1, 0),
    "diagonal": (1, 1),
}

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator; same seed gives the same stream on every platform."""

    def __init__(self, seed):
        self.state = int(seed) & _MASK64

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound):
        """Integer in [0, bound) by the multiply-high reduction."""
        return (self.next_u64() * bound) >> 64

    def sample(self, population, k):
        """``k`` distinct integers from ``range(population)`` (partial Fisher-Yates)."""
        if not 0 <= k <= population:
            raise ParameterError(f"cannot draw {k} distinct values from {population}")
        swapped = {}
        out = []
        for i in range(k):
            j = i + self.below(population - i)
            out.append(swapped.get(j, j))
            swapped[j] = swapped.get(i, i)
        return out


def mse(a, b):
    a = check_gray_image(a, name="a").astype(np.float64)
    b = check_gray_image(b, name="b").astype(np.float64)
    check_same_shape(a, b)
    return float(np.mean((a - b) ** 2))


def psnr(a, b):
    """Peak signal-to-noise ratio in dB; ``math.inf`` for identical images."""
    err = mse(a, b)
    if err == 0.0:
        return math.inf
    return 10.0 * math.log10(PEAK**2 / err)


def correlation_coefficient(x, y):
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise ShapeError("x and y must be 1D sequences of equal length")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(np.dot(dx, dx))
    syy = float(np.dot(dy, dy))
    if sxx == 0.0 or syy == 0.0:
        raise DegenerateDataError("zero variance in sampled pixels; correlation undefined")
    r = float(np.dot(dx, dy)) / math.sqrt(sxx * syy)
    return min(1.0, max(-1.0, r))


@dataclass
class CorrelationResult:
    direction: str
    r: float
    x: np.ndarray
    y: np.ndarray

    @property
    def pairs(self):
        return np.column_stack([self.x, self.y])


def adjacent_correlation(img, direction, pairs=DEFAULT_PAIRS, seed=DEFAULT_CORRELATION_SEED):
    """Correlation of randomly sampled neighbouring pixel pairs.

    ``pairs`` distinct anchor positions are drawn with :class:`SplitMix64`;
    each anchor is paired with its neighbour in ``direction``.
    """
    img = check_gray_image(img)
    if direction not in DIRECTIONS:
        raise ParameterError(f"direction must be one of {sorted(DIRECTIONS)}, got {direction!r}")
    if pairs < 2:
        raise ParameterError("need at least 2 pairs")
    dr, dc = DIRECTIONS[direction]
    rows, cols = img.shape[0] - dr, img.shape[1] - dc
    available = max(rows, 0) * max(cols, 0)
    if available < pairs:
        raise ShapeError(
            f"image {img.shape} offers {available} {direction} pairs, {pairs} requested"
        )
    flat = np.array(SplitMix64(seed).sample(available, pairs), dtype=np.int64)
    r0, c0 = np.divmod(flat, cols)
    x = img[r0, c0].astype(np.float64)
    y = img[r0 + dr, c0 + dc].astype(np.float64)
    return CorrelationResult(direction, correlation_coefficient(x, y), x, y)


def histogram256(img):
    img = check_gray_image(img)
    return np.bincount(img.reshape(-1), minlength=256).astype(np.int64)


def quantize_complex(c):
    """Display form of a ciphertext: min-max map of the real part onto 0..255."""
    re = check_complex_matrix(c).real
    lo, hi = float(re.min()), float(re.max())
    if not hi > lo:
        raise DegenerateDataError("real part is constant; cannot quantize")
    return np.floor((re - lo) / (hi - lo) * 255.0 + 0.5).astype(np.uint8)


def key_space_log2(per_key_ranges, precision):
    """log2 of the product of ``range / precision`` over all keys.

    ``precision`` is either one value for every key or a sequence with one
    entry per key (use range=modulus, precision=1 for the discard counts).
    """
    ranges = np.asarray(per_key_ranges, dtype=np.float64).reshape(-1)
    prec = np.broadcast_to(np.asarray(precision, dtype=np.float64), ranges.shape)
    if ranges.size == 0:
        raise ParameterError("need at least one key range")
    if not (np.all(np.isfinite(ranges)) and np.all(ranges > 0)):
        raise ParameterError("key ranges must be positive and finite")
    if not (np.all(np.isfinite(prec)) and np.all(prec > 0)):
        raise ParameterError("precision must be positive and finite")
    return float(np.sum(np.log2(ranges) - np.log2(prec)))


@dataclass(frozen=True)
class KeySpaceConfig:
    """Per-key (range, precision) pairs in ``PARAM_NAMES`` order."""

    name: str
    ranges: tuple
    precisions: tuple
    note: str = ""

    def bits(self):
        return key_space_log2(self.ranges, self.precisions)


DOUBLE_PRECISION = 1e-14

# Six continuous keys with 10**11 distinguishable values each (a span of 1e-3
# at 1e-14 resolution) plus the two discrete discard counts give 10**74
# (about 2**245), the published total. The published per-key spans are not
# available; see natural_key_space() for the spans the domains actually allow.
PAPER_KEY_SPACE = KeySpaceConfig(
    name="paper",
    ranges=(1e-3, 1e-3, P1_MODULUS, 1e-3, 1e-3, 1e-3, 1e-3, P2_MODULUS),
    precisions=(DOUBLE_PRECISION, DOUBLE_PRECISION, 1, DOUBLE_PRECISION,
                DOUBLE_PRECISION, DOUBLE_PRECISION, DOUBLE_PRECISION, 1),
    note=(
        "Reconstructs the published total of about 1e74 (~2^245). Per-key spans "
        "are not published; continuous keys are assigned 1e11 states each so the "
        "product matches. The domains themselves allow more: see 'natural'."
    ),
)


def natural_key_space(rows, cols, precision=DOUBLE_PRECISION):
    """Key space from the parameter domains for an image of ``rows`` x ``cols``.

    Initial values span (0, 1), mu spans the chaotic regime, and a chirp rate
    along an axis of length n is only distinct modulo n.
    """
    mu_span = MU_MAX - MU_MIN
    return KeySpaceConfig(
        name="natural",
        ranges=(1.0, mu_span, P1_MODULUS, float(rows), float(cols), 1.0, mu_span, P2_MODULUS),
        precisions=(precision, precision, 1, precision, precision, precision, precision, 1),
        note="Domain-derived spans at the given resolution.",
    )


SUPPORTED_OCCLUSIONS = (0.25, 0.5, 0.75)


def occlude_rect(c, row0, col0, rows, cols):
    """Zero a rectangle (clipped to the matrix) of a ciphertext copy."""
    out = check_complex_matrix(c).copy()
    if min(row0, col0, rows, cols) < 0:
        raise ParameterError("rectangle coordinates must be non-negative")
    out[row0:row0 + rows, col0:col0 + cols] = 0
    return out


def occlude(c, fraction):
    """Zero a fixed share of the ciphertext.

    0.25 clears the top-left quadrant, 0.5 the top half, and 0.75 everything
    but the bottom-right quadrant. Quadrant boundaries sit at ``ceil(N/2)``
    and ``ceil(M/2)``.
    """
    c = check_complex_matrix(c)
    N, M = c.shape
    h, w = -(-N // 2), -(-M // 2)
    if math.isclose(fraction, 0.25):
        return occlude_rect(c, 0, 0, h, w)
    if math.isclose(fraction, 0.5):
        return occlude_rect(c, 0, 0, h, M)
    if math.isclose(fraction, 0.75):
        out = occlude_rect(c, 0, 0, h, M)
        out[h:, :w] = 0
        return out
    raise ParameterError(
        f"unsupported occlusion fraction {fraction!r}; use one of {SUPPORTED_OCCLUSIONS} "
        "or occlude_rect()"
    )


def add_gaussian_noise(c, sigma, seed=DEFAULT_NOISE_SEED):
    """Add zero-mean Gaussian noise scaled by each part's dynamic range.

    The real part receives noise with standard deviation ``sigma * ptp(real)``
    and the imaginary part ``sigma * ptp(imag)``.
    """
    c = check_complex_matrix(c)
    if not (math.isfinite(sigma) and sigma >= 0):
        raise ParameterError(f"sigma must be a non-negative number, got {sigma!r}")
    if sigma == 0:
        return c.copy()
    rng = np.random.Generator(np.random.PCG64(seed))
    noise = rng.standard_normal((2,) + c.shape)
    scale_re = sigma * float(np.ptp(c.real))
    scale_im = sigma * float(np.ptp(c.imag))
    return (c.real + scale_re * noise[0]) + 1j * (c.imag + scale_im * noise[1])


@dataclass
class SensitivityCurve:
    parameter: str
    deviations: list = field(default_factory=list)
    mse_values: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    def to_dict(self):
        return {
            "parameter": self.parameter,
            "deviations": list(self.deviations),
            "mse_values": list(self.mse_values),
            "skipped": list(self.skipped),
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d["parameter"], list(d["deviations"]), list(d["mse_values"]),
                   list(d.get("skipped", [])))


def sensitivity_sweep(img, keys, parameter, deviations, threads=1, ciphertext=None):
    """MSE between ``img`` and its decryption with one key scalar shifted.

    Deviations that push the parameter out of its domain (or give a
    non-integer discard count) are recorded in ``skipped``. Results keep the
    input order whatever the thread count.
    """
    if parameter not in PARAM_NAMES:
        raise ParameterError(f"parameter must be one of {PARAM_NAMES}, got {parameter!r}")
    img = check_gray_image(img)
    c = encrypt(img, keys) if ciphertext is None else ciphertext
    base = keys.as_dict()[parameter]

    def point(delta):
        try:
            wrong = keys.replace(**{parameter: base + delta})
        except ParameterError:
            return None
        return mse(img, decrypt(c, wrong))

    deviations = [float(d) for d in deviations]
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(point, deviations))
    else:
        results = [point(d) for d in deviations]

    curve = SensitivityCurve(parameter)
    for delta, value in zip(deviations, results):
        if value is None:
            curve.skipped.append(delta)
        else:
            curve.deviations.append(delta)
            curve.mse_values.append(value)
    return curve


def signed_log_grid(log_min, log_max, points):
    """``points`` log-spaced magnitudes in [log_min, log_max], both signs, plus 0."""
    if not (0 < log_min <= log_max) or points < 1:
        raise ParameterError("need 0 < log_min <= log_max and points >= 1")
    mags = np.logspace(math.log10(log_min), math.log10(log_max), points)
    return [float(-m) for m in mags[::-1]] + [0.0] + [float(m) for m in mags]


@dataclass
class AnalysisReport:
    mse: float
    psnr_db: float
    correlations: dict
    histogram: list
    key_space_bits: float

    def to_dict(self):
        # JSON has no infinity; identical images serialize psnr_db as null.
        return {
            "mse": self.mse,
            "psnr_db": None if math.isinf(self.psnr_db) else self.psnr_db,
            "correlations": dict(self.correlations),
            "histogram": [int(v) for v in self.histogram],
            "key_space_bits": self.key_space_bits,
        }

    @classmethod
    def from_dict(cls, d):
        psnr_db = math.inf if d["psnr_db"] is None else float(d["psnr_db"])
        return cls(float(d["mse"]), psnr_db, dict(d["correlations"]),
                   [int(v) for v in d["histogram"]], float(d["key_space_bits"]))


def analyze_image(img, reference=None, pairs=DEFAULT_PAIRS, seed=DEFAULT_CORRELATION_SEED,
                  key_space=PAPER_KEY_SPACE):
    """Collect every metric for ``img``; MSE/PSNR are taken against ``reference``.

    Without a reference the image is compared with itself (MSE 0, PSNR inf).
    Also returns the correlation samples keyed by direction.
    """
    img = check_gray_image(img)
    reference = img if reference is None else check_gray_image(reference)
    samples = {d: adjacent_correlation(img, d, pairs, seed) for d in DIRECTIONS}
    report = AnalysisReport(
        mse=mse(reference, img),
        psnr_db=psnr(reference, img),
        correlations={d: s.r for d, s in samples.items()},
        histogram=histogram256(img).tolist(),
        key_space_bits=key_space.bits(),
    )
    return report, samples
