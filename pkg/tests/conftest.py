import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

DATA_DIR = Path(__file__).parent.parent / "data"


@pytest.fixture
def rng():
    return np.random.default_rng(0xC0FFEE)


@pytest.fixture(scope="session")
def photo_path():
    return DATA_DIR / "photo512.pgm"


@pytest.fixture(scope="session")
def color_path():
    return DATA_DIR / "astro64.ppm"


@pytest.fixture(scope="session")
def photo():
    from zipr import load_image

    return load_image(DATA_DIR / "photo512.pgm")


def assert_close(actual, expected, rtol=1e-9):
    """Max-norm comparison with tolerance relative to the expected scale."""
    actual = np.asarray(actual)
    expected = np.asarray(expected)
    scale = max(1.0, float(np.max(np.abs(expected))) if expected.size else 0.0)
    err = float(np.max(np.abs(actual - expected))) if expected.size else 0.0
    assert err <= rtol * scale, f"max abs error {err:.3e} > {rtol:.0e} * {scale:.3e}"
