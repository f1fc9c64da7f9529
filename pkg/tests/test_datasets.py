import numpy as np
import pytest

from fractex import GrayImage, expand_windows, ingest_dataset, save_pgm
from fractex.errors import EmptyDatasetError, InvalidLayoutError, RaggedDatasetError


def make_tree(root, plan):
    """plan: {class_name: n_images}; image pixels encode identity for order checks."""
    for cls, count in plan.items():
        (root / cls).mkdir(parents=True)
        for k in range(count):
            value = (hash((cls, k)) & 0x7F) + k
            img = GrayImage(np.full((6, 6), value % 256, dtype=np.uint8))
            save_pgm(img, root / cls / f"s{k}.pgm")


def test_class_subdirectories(tmp_path):
    make_tree(tmp_path, {"a": 2, "b": 2})
    ds = ingest_dataset(tmp_path)
    assert ds.class_count == 2
    assert ds.samples_per_class == 2
    assert ds.class_names == ["a", "b"]
    assert [(s.class_id, s.sample_index) for s in ds.samples] == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_ragged_reports_counts(tmp_path):
    make_tree(tmp_path, {"a": 2, "b": 3})
    with pytest.raises(RaggedDatasetError) as err:
        ingest_dataset(tmp_path)
    assert "a: 2" in str(err.value) and "b: 3" in str(err.value)


def test_empty_root(tmp_path):
    with pytest.raises(EmptyDatasetError):
        ingest_dataset(tmp_path)


def test_missing_root(tmp_path):
    with pytest.raises(FileNotFoundError):
        ingest_dataset(tmp_path / "nope")


def test_filename_prefix(tmp_path):
    for name in ("wood_0.pgm", "wood_1.pgm", "bark_0.pgm", "bark_1.pgm"):
        save_pgm(GrayImage(np.zeros((4, 4), dtype=np.uint8)), tmp_path / name)
    ds = ingest_dataset(tmp_path, "filename-prefix")
    assert ds.class_names == ["bark", "wood"]
    assert ds.samples_per_class == 2


def test_filename_prefix_unparsable(tmp_path):
    save_pgm(GrayImage(np.zeros((4, 4), dtype=np.uint8)), tmp_path / "noindex.pgm")
    with pytest.raises(InvalidLayoutError):
        ingest_dataset(tmp_path, "filename-prefix")


def test_unknown_layout(tmp_path):
    with pytest.raises(InvalidLayoutError):
        ingest_dataset(tmp_path, "by-magic")


def test_ingest_deterministic(tmp_path):
    make_tree(tmp_path, {"q": 3, "p": 3, "z": 3})
    first = ingest_dataset(tmp_path)
    second = ingest_dataset(tmp_path)
    assert first.class_names == second.class_names
    for s1, s2 in zip(first.samples, second.samples):
        assert (s1.class_id, s1.sample_index) == (s2.class_id, s2.sample_index)
        assert np.array_equal(s1.image.pixels, s2.image.pixels)


def test_expand_windows(tmp_path):
    make_tree(tmp_path, {"a": 2, "b": 2})
    ds = expand_windows(ingest_dataset(tmp_path), 2, 2)
    assert ds.class_count == 2
    assert ds.samples_per_class == 8
    a_indices = [s.sample_index for s in ds.samples if s.class_id == 0]
    assert a_indices == list(range(8))
    assert all(s.image.pixels.shape == (3, 3) for s in ds.samples)
