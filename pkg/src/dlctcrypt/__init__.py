"""Image encryption with chaotic logistic-map scrambling and the 2D discrete linear chirp transform."""

__version__ = "0.1.0"

from .chaos import (
    LogisticParams,
    apply_permutation,
    invert_permutation,
    logistic_sequence,
    permutation_from_sequence,
)
from .cipher import KeyBundle, decrypt, derive_discards, encrypt, reference_keys
from .dlct import ChirpRates, dlct2_forward, dlct2_forward_direct, dlct2_inverse
from .estimators import DLCT2D, ImageCipher
from .exceptions import (
    DegenerateDataError,
    DegenerateOrbitError,
    DLCTError,
    FormatError,
    ParameterError,
    ShapeError,
    SizeLimitError,
)

__all__ = [
    "ChirpRates",
    "DLCT2D",
    "DLCTError",
    "DegenerateDataError",
    "DegenerateOrbitError",
    "FormatError",
    "ImageCipher",
    "KeyBundle",
    "LogisticParams",
    "ParameterError",
    "ShapeError",
    "SizeLimitError",
    "apply_permutation",
    "decrypt",
    "derive_discards",
    "dlct2_forward",
    "dlct2_forward_direct",
    "dlct2_inverse",
    "encrypt",
    "invert_permutation",
    "logistic_sequence",
    "permutation_from_sequence",
    "reference_keys",
]
