"""Labeled texture dataset ingestion from a directory tree.

Two layouts are supported:

* ``class-subdirectories``: ``root/<class-name>/<sample>.pgm``
* ``filename-prefix``: flat files ``root/<class-name>_<index>.pgm``

Class ids are assigned by sorted class-name order and samples are ordered
lexicographically within each class, so two runs over the same tree always
produce the same dataset.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import EmptyDatasetError, InvalidLayoutError, RaggedDatasetError
from .image_io import GrayImage, _is_image_file, load_gray_image, partition_windows

LAYOUTS = ("class-subdirectories", "filename-prefix")


@dataclass(frozen=True, eq=False)
class LabeledSample:
    image: GrayImage
    class_id: int
    sample_index: int


@dataclass(frozen=True, eq=False)
class TextureDataset:
    samples: list[LabeledSample]
    class_names: list[str]

    @property
    def class_count(self) -> int:
        return len(self.class_names)

    @property
    def samples_per_class(self) -> int:
        return len(self.samples) // max(len(self.class_names), 1)


def ingest_dataset(root, layout: str = "class-subdirectories") -> TextureDataset:
    """Load every image under ``root`` into a balanced labeled dataset.

    Raises EmptyDataset when no images are found and RaggedDataset (with
    per-class counts in the message) when classes are unequal in size.
    """
    if layout not in LAYOUTS:
        raise InvalidLayoutError(f"unknown layout {layout!r}, expected one of {LAYOUTS}")
    if not os.path.isdir(root):
        raise FileNotFoundError(f"dataset root {root} is not a directory")

    by_class: dict[str, list[str]] = {}
    if layout == "class-subdirectories":
        for entry in sorted(os.listdir(root)):
            subdir = os.path.join(root, entry)
            if not os.path.isdir(subdir):
                continue
            files = sorted(f for f in os.listdir(subdir) if _is_image_file(f))
            if files:
                by_class[entry] = [os.path.join(subdir, f) for f in files]
    else:
        for fname in sorted(os.listdir(root)):
            if not _is_image_file(fname):
                continue
            stem = os.path.splitext(fname)[0]
            if "_" not in stem:
                raise InvalidLayoutError(
                    f"{fname}: expected '<class-name>_<index>' file name"
                )
            cls = stem.rsplit("_", 1)[0]
            by_class.setdefault(cls, []).append(os.path.join(root, fname))

    if not by_class:
        raise EmptyDatasetError(f"no images found under {root}")
    counts = {cls: len(paths) for cls, paths in by_class.items()}
    if len(set(counts.values())) != 1:
        detail = ", ".join(f"{cls}: {n}" for cls, n in sorted(counts.items()))
        raise RaggedDatasetError(f"unequal samples per class ({detail})")

    class_names = sorted(by_class)
    samples = []
    for class_id, cls in enumerate(class_names):
        for idx, path in enumerate(sorted(by_class[cls])):
            samples.append(LabeledSample(load_gray_image(path), class_id, idx))
    return TextureDataset(samples, class_names)


def expand_windows(dataset: TextureDataset, rows: int, cols: int) -> TextureDataset:
    """Partition every sample image into a rows x cols window grid.

    Each window becomes its own sample; window indices run left-to-right,
    top-to-bottom, and sample indices keep counting within each class.
    """
    per_image = rows * cols
    samples = []
    for s in dataset.samples:
        for w, win in enumerate(partition_windows(s.image, rows, cols)):
            samples.append(LabeledSample(win, s.class_id, s.sample_index * per_image + w))
    return TextureDataset(samples, list(dataset.class_names))
