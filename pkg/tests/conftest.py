import numpy as np
import pytest

from fractex import GrayImage, save_pgm


def random_gray(rng, height, width, max_value=255) -> GrayImage:
    return GrayImage(rng.integers(0, max_value + 1, (height, width)).astype(np.uint8))


def synthetic_texture_arrays(height=120, width=50, seed=99):
    """Four trivially separable texture classes: flat, ramp, sinusoid, noise."""
    i, _ = np.indices((height, width))
    rng = np.random.default_rng(seed)
    return {
        "const": np.full((height, width), 100),
        "noise": rng.integers(0, 256, (height, width)),
        "ramp": (i * 255) // (height - 1),
        "sine": (127.5 + 127.5 * np.sin(2 * np.pi * i / 40.0)).astype(int),
    }


@pytest.fixture
def texture_tree(tmp_path):
    """Dataset root with one 120x50 source image per class.

    A 5x2 window grid turns each source into the 10 samples per class used
    by the hold-out protocol.
    """
    root = tmp_path / "textures"
    for name, arr in synthetic_texture_arrays().items():
        (root / name).mkdir(parents=True)
        save_pgm(GrayImage(arr.astype(np.uint8)), root / name / "img_0.pgm")
    return root
