"""Binary PGM images, the ``DLC1`` ciphertext container and text key files.

Cipher file layout (all little-endian)::

    offset  size  field
    0       4     magic b"DLC1"
    4       2     version (uint16, = 1)
    6       4     rows N (uint32)
    10      4     cols M (uint32)
    14      16*NM (real, imag) float64 pairs, row-major
"""

import math
import struct
from pathlib import Path

import numpy as np

from ._validation import check_complex_matrix, check_gray_image
from .cipher import PARAM_NAMES, KeyBundle
from .exceptions import FormatError, ParameterError

CIPHER_MAGIC = b"DLC1"
CIPHER_VERSION = 1
_HEADER = struct.Struct("<4sHII")
CIPHER_HEADER_SIZE = _HEADER.size

_PGM_WHITESPACE = b" \t\n\r\v\f"
_INT_PARAMS = ("p1", "p2")


def _pgm_tokens(data, count):
    """Read ``count`` header tokens after the magic; return them and the data offset."""
    pos = 2
    tokens = []
    n = len(data)
    while len(tokens) < count:
        if pos >= n:
            raise FormatError("truncated PGM header")
        ch = data[pos:pos + 1]
        if ch in _PGM_WHITESPACE:
            pos += 1
        elif ch == b"#":
            while pos < n and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
        else:
            start = pos
            while pos < n and data[pos:pos + 1] not in _PGM_WHITESPACE and data[pos:pos + 1] != b"#":
                pos += 1
            token = data[start:pos]
            if not token.isdigit():
                raise FormatError(f"bad PGM header token {token!r}")
            tokens.append(int(token))
    # exactly one whitespace byte separates maxval from the raster
    if pos >= n or data[pos:pos + 1] not in _PGM_WHITESPACE:
        raise FormatError("missing whitespace after PGM maxval")
    return tokens, pos + 1


def load_pgm(data):
    """Parse a binary (P5) 8-bit PGM into an N x M uint8 array."""
    data = bytes(data)
    magic = data[:2]
    if magic != b"P5":
        raise FormatError(f"unsupported image format {magic!r}; only binary PGM (P5) is read")
    (width, height, maxval), offset = _pgm_tokens(data, 3)
    if maxval != 255:
        raise FormatError(f"PGM maxval must be 255, got {maxval}")
    if width < 1 or height < 1:
        raise FormatError(f"bad PGM dimensions {width}x{height}")
    expected = width * height
    raster = data[offset:offset + expected]
    if len(raster) != expected:
        raise FormatError(f"truncated PGM raster: expected {expected} bytes, got {len(raster)}")
    return np.frombuffer(raster, dtype=np.uint8).reshape(height, width).copy()


def save_pgm(img):
    img = check_gray_image(img)
    N, M = img.shape
    return b"P5\n%d %d\n255\n" % (M, N) + img.tobytes()


def write_cipher_file(c):
    c = check_complex_matrix(c, name="ciphertext")
    N, M = c.shape
    return _HEADER.pack(CIPHER_MAGIC, CIPHER_VERSION, N, M) + c.astype("<c16").tobytes()


def read_cipher_file(data):
    data = bytes(data)
    if len(data) < CIPHER_HEADER_SIZE:
        raise FormatError(
            f"cipher file too short for header: expected {CIPHER_HEADER_SIZE} bytes, got {len(data)}"
        )
    magic, version, N, M = _HEADER.unpack_from(data)
    if magic != CIPHER_MAGIC:
        raise FormatError(f"bad cipher magic {magic!r}, expected {CIPHER_MAGIC!r}")
    if version != CIPHER_VERSION:
        raise FormatError(f"unsupported cipher file version {version}")
    expected = CIPHER_HEADER_SIZE + 16 * N * M
    if len(data) != expected:
        raise FormatError(
            f"cipher payload length mismatch: expected {expected} bytes, got {len(data)}"
        )
    if N < 1 or M < 1:
        raise FormatError(f"bad cipher dimensions {N}x{M}")
    arr = np.frombuffer(data, dtype="<c16", offset=CIPHER_HEADER_SIZE).reshape(N, M)
    if not np.all(np.isfinite(arr)):
        raise FormatError("cipher payload contains NaN or Inf")
    return arr.astype(np.complex128)


def is_cipher_file(data):
    return bytes(data[:4]) == CIPHER_MAGIC


def write_key_file(keys):
    """One ``name=value`` line per scalar; floats use shortest round-trip repr."""
    lines = []
    for name, value in keys.as_dict().items():
        text = str(int(value)) if name in _INT_PARAMS else repr(float(value))
        lines.append(f"{name}={text}")
    return "\n".join(lines) + "\n"


def read_key_file(text):
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, value = line.partition("=")
        name, value = name.strip(), value.strip()
        if not sep:
            raise FormatError(f"line {lineno}: expected name=value, got {raw!r}")
        if name not in PARAM_NAMES:
            raise FormatError(f"line {lineno}: unknown key field {name!r}")
        if name in values:
            raise FormatError(f"line {lineno}: duplicate key field {name!r}")
        try:
            values[name] = int(value) if name in _INT_PARAMS else float(value)
        except ValueError:
            raise FormatError(f"line {lineno}: bad value for {name}: {value!r}") from None
        if name not in _INT_PARAMS and not math.isfinite(values[name]):
            raise ParameterError(f"{name} must be finite, got {value!r}")
    missing = [name for name in PARAM_NAMES if name not in values]
    if missing:
        raise FormatError(f"key file missing field(s): {', '.join(missing)}")
    return KeyBundle.from_dict(values)


def read_pgm(path):
    return load_pgm(Path(path).read_bytes())


def write_pgm(path, img):
    Path(path).write_bytes(save_pgm(img))


def read_cipher(path):
    return read_cipher_file(Path(path).read_bytes())


def write_cipher(path, c):
    Path(path).write_bytes(write_cipher_file(c))


def read_keys(path):
    return read_key_file(Path(path).read_text(encoding="utf-8"))


def write_keys(path, keys):
    Path(path).write_text(write_key_file(keys), encoding="utf-8")


def sample_image_path(name="cameraman"):
    path = Path(__file__).parent / "data" / f"{name}256.pgm"
    if not path.exists():
        raise FileNotFoundError(f"no bundled sample image {name!r}")
    return path


def load_sample_image(name="cameraman"):
    """Bundled 256x256 natural test image (the public-domain cameraman photo)."""
    return read_pgm(sample_image_path(name))
