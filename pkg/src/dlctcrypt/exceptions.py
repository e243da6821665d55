"""Exception hierarchy shared by every module."""


class DLCTError(Exception):
    """Base class for all errors raised by dlctcrypt."""


class ParameterError(DLCTError, ValueError):
    """A key, rate or other scalar argument lies outside its valid domain."""


class DegenerateOrbitError(ParameterError):
    """The logistic orbit collapsed onto 0 or 1 (e.g. x0=0.5 with mu=4)."""


class ShapeError(DLCTError, ValueError):
    """Array dimensions do not match what the operation expects."""


class SizeLimitError(DLCTError, ValueError):
    """Input too large for the brute-force transform."""


class DegenerateDataError(DLCTError, ValueError):
    """Statistic undefined for the given data (constant range, zero variance)."""


class FormatError(DLCTError, ValueError):
    """Malformed PGM, cipher or key file."""
