"""Scramble -> 2D DLCT -> scramble image cipher and its inverse."""

from dataclasses import dataclass

import numpy as np

from ._validation import check_complex_matrix, check_gray_image
from .chaos import LogisticParams, apply_permutation, invert_permutation, scrambling_permutation
from .dlct import ChirpRates, dlct2_forward, dlct2_inverse
from .exceptions import ParameterError

P1_MODULUS = 9999
P2_MODULUS = 9990

#: Order of the eight scalars in key files, reports and sweeps.
PARAM_NAMES = ("x0", "mu1", "p1", "beta_x", "beta_y", "y0", "mu2", "p2")

#: Default simulation constants; p1/p2 come from the plain image.
REFERENCE_PARAMS = {
    "x0": 0.31,
    "mu1": 3.8,
    "beta_x": 1.5,
    "beta_y": -3.5,
    "y0": 0.25,
    "mu2": 3.7,
}

MIN_IMAGE_SIZE = 2


@dataclass(frozen=True)
class KeyBundle:
    """The three secret keys: spatial scramble, chirp rates, spectral scramble."""

    key1: LogisticParams
    key2: ChirpRates
    key3: LogisticParams

    @classmethod
    def from_values(cls, x0, mu1, p1, beta_x, beta_y, y0, mu2, p2):
        return cls(
            LogisticParams(x0, mu1, p1),
            ChirpRates(beta_x, beta_y),
            LogisticParams(y0, mu2, p2),
        )

    @classmethod
    def from_dict(cls, values):
        missing = [name for name in PARAM_NAMES if name not in values]
        if missing:
            raise ParameterError(f"missing key parameter(s): {', '.join(missing)}")
        return cls.from_values(**{name: values[name] for name in PARAM_NAMES})

    def as_dict(self):
        return {
            "x0": self.key1.x0,
            "mu1": self.key1.mu,
            "p1": self.key1.discard,
            "beta_x": self.key2.beta_x,
            "beta_y": self.key2.beta_y,
            "y0": self.key3.x0,
            "mu2": self.key3.mu,
            "p2": self.key3.discard,
        }

    def replace(self, **changes):
        """Copy with some of the eight scalars changed (validated again)."""
        unknown = set(changes) - set(PARAM_NAMES)
        if unknown:
            raise ParameterError(f"unknown key parameter(s): {', '.join(sorted(unknown))}")
        values = self.as_dict()
        values.update(changes)
        return self.from_dict(values)


def derive_discards(img):
    """Plaintext-dependent discard counts ``(sum % 9999, sum % 9990)``."""
    img = check_gray_image(img)
    total = int(img.sum(dtype=np.uint64))
    return total % P1_MODULUS, total % P2_MODULUS


def reference_keys(img=None, p1=None, p2=None):
    """Default key bundle; discard counts derived from ``img`` unless given."""
    if img is not None:
        d1, d2 = derive_discards(img)
        p1 = d1 if p1 is None else p1
        p2 = d2 if p2 is None else p2
    if p1 is None or p2 is None:
        raise ParameterError("p1 and p2 are required when no image is given")
    return KeyBundle.from_values(p1=p1, p2=p2, **REFERENCE_PARAMS)


def _permutations(keys, size):
    return scrambling_permutation(keys.key1, size), scrambling_permutation(keys.key3, size)


def encrypt(img, keys, workers=None):
    """Encrypt an 8-bit grayscale image into an N x M complex matrix.

    The image is flattened row-major, scrambled by the key1 permutation,
    transformed with the key2 chirp rates and scrambled again (complex
    entries moved whole) by the key3 permutation.
    """
    img = check_gray_image(img, min_size=MIN_IMAGE_SIZE)
    N, M = img.shape
    p_spatial, p_spectral = _permutations(keys, N * M)
    scrambled = apply_permutation(img.reshape(-1), p_spatial).reshape(N, M)
    spectrum = dlct2_forward(scrambled, keys.key2, workers=workers)
    return apply_permutation(spectrum.reshape(-1), p_spectral).reshape(N, M)


def decrypt_complex(c, keys, workers=None):
    """Undo every encryption step but stop before quantization."""
    c = check_complex_matrix(c, min_size=MIN_IMAGE_SIZE, name="ciphertext")
    N, M = c.shape
    p_spatial, p_spectral = _permutations(keys, N * M)
    spectrum = apply_permutation(c.reshape(-1), invert_permutation(p_spectral))
    scrambled = dlct2_inverse(spectrum.reshape(N, M), keys.key2, workers=workers)
    return apply_permutation(scrambled.reshape(-1), invert_permutation(p_spatial)).reshape(N, M)


def quantize_decrypted(z):
    """Round the real part and clamp to [0, 255]; the imaginary part is dropped."""
    return np.clip(np.round(np.real(z)), 0, 255).astype(np.uint8)


def decrypt(c, keys, workers=None):
    return quantize_decrypted(decrypt_complex(c, keys, workers=workers))
