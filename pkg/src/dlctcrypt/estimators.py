"""scikit-learn compatible wrappers around the transform and the cipher.

Both estimators take a single 2D image (or matrix) as ``X``. They work with
``clone``, ``get_params``/``set_params`` and pipelines, and all key material
is held as constructor parameters.
"""

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_complex_matrix, check_gray_image
from .cipher import MIN_IMAGE_SIZE, KeyBundle, decrypt, derive_discards, encrypt
from .dlct import ChirpRates, dlct2_forward, dlct2_inverse
from .exceptions import ShapeError


class DLCT2D(TransformerMixin, BaseEstimator):
    """Forward/inverse 2D discrete linear chirp transform as a transformer.

    Parameters
    ----------
    beta_x : float
        Chirp rate along axis 0.
    beta_y : float
        Chirp rate along axis 1.
    workers : int or None
        Threads handed to the FFT.
    """

    def __init__(self, beta_x=1.5, beta_y=-3.5, workers=None):
        self.beta_x = beta_x
        self.beta_y = beta_y
        self.workers = workers

    def fit(self, X, y=None):
        X = check_complex_matrix(X)
        self.rates_ = ChirpRates(self.beta_x, self.beta_y)
        self.shape_ = X.shape
        return self

    def transform(self, X):
        check_is_fitted(self, "rates_")
        return dlct2_forward(X, self.rates_, workers=self.workers)

    def inverse_transform(self, X):
        check_is_fitted(self, "rates_")
        return dlct2_inverse(X, self.rates_, workers=self.workers)


class ImageCipher(TransformerMixin, BaseEstimator):
    """Encrypt with ``transform``, decrypt with ``inverse_transform``.

    ``fit`` validates the keys and, when ``p1``/``p2`` are left as ``None``,
    derives them from the pixel sum of the image it is fitted on. The
    resolved bundle is stored in ``keys_``.
    """

    def __init__(self, x0=0.31, mu1=3.8, p1=None, beta_x=1.5, beta_y=-3.5,
                 y0=0.25, mu2=3.7, p2=None, workers=None):
        self.x0 = x0
        self.mu1 = mu1
        self.p1 = p1
        self.beta_x = beta_x
        self.beta_y = beta_y
        self.y0 = y0
        self.mu2 = mu2
        self.p2 = p2
        self.workers = workers

    def fit(self, X, y=None):
        img = check_gray_image(X, min_size=MIN_IMAGE_SIZE)
        p1, p2 = self.p1, self.p2
        if p1 is None or p2 is None:
            d1, d2 = derive_discards(img)
            p1 = d1 if p1 is None else p1
            p2 = d2 if p2 is None else p2
        self.keys_ = KeyBundle.from_values(self.x0, self.mu1, p1, self.beta_x,
                                           self.beta_y, self.y0, self.mu2, p2)
        self.shape_ = img.shape
        return self

    def transform(self, X):
        check_is_fitted(self, "keys_")
        return encrypt(X, self.keys_, workers=self.workers)

    def inverse_transform(self, X):
        check_is_fitted(self, "keys_")
        X = check_complex_matrix(X, min_size=MIN_IMAGE_SIZE, name="ciphertext")
        if X.shape != self.shape_:
            raise ShapeError(f"ciphertext shape {X.shape} differs from fitted image {self.shape_}")
        return decrypt(X, self.keys_, workers=self.workers)
