import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dlctcrypt.imageio import load_sample_image  # noqa: E402

DATA = Path(__file__).parent / "data"

# acceptance criterion id -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE_RESULTS = {}


def downsample(img, factor):
    n, m = img.shape
    blocks = img[: n - n % factor, : m - m % factor].reshape(n // factor, factor, m // factor, factor)
    return np.floor(blocks.mean(axis=(1, 3)) + 0.5).astype(np.uint8)


@pytest.fixture(scope="session")
def cameraman():
    return load_sample_image()


@pytest.fixture(scope="session")
def cameraman64(cameraman):
    return downsample(cameraman, 4)


@pytest.fixture(scope="session")
def golden_dir():
    return DATA / "golden"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: (int(k.split(".")[0]), k)):
        passed, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {key}: {detail}")
