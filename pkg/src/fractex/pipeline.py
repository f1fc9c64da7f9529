"""End-to-end orchestration: windows -> descriptors -> features -> report.

These helpers back the command line front end but are equally usable from
scripts. All file outputs are written atomically (temp file + rename) so a
failing run never leaves a partial artifact behind.
"""

from __future__ import annotations

import math
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .classify import ClassificationReport, FeatureMatrix, evaluate, holdout_split, lda_fit, lda_predict
from .config import PipelineConfig
from .datasets import TextureDataset, expand_windows, ingest_dataset
from .descriptors import DescriptorVector, DimensionEstimate, estimate_dimension, loglog_curve, raw_descriptors
from .errors import InvalidFeatureError
from .image_io import GrayImage
from .minkowski import build_surface, exact_edt_volumes
from .multiscale import ScaleSpaceParams, multiscale_descriptors


def scale_params(cfg: PipelineConfig) -> ScaleSpaceParams:
    radius = max(1, math.ceil(cfg.kernel_radius_factor * cfg.scale_a))
    return ScaleSpaceParams(cfg.scale_a, cfg.threshold_index, radius)


def image_descriptors(image: GrayImage, cfg: PipelineConfig) -> tuple[DescriptorVector, DimensionEstimate]:
    """Full single-image path: surface, dilation volumes, log-log curve, descriptors."""
    _, curve = exact_edt_volumes(build_surface(image), cfg.r_max)
    u = loglog_curve(curve)
    if cfg.descriptor_mode == "raw-minkowski":
        vector = raw_descriptors(u)
    else:
        vector = multiscale_descriptors(u, scale_params(cfg))
    return vector, estimate_dimension(u)


def _window_values(image: GrayImage, cfg: PipelineConfig) -> np.ndarray:
    return image_descriptors(image, cfg)[0].values


def dataset_features(
    dataset: TextureDataset,
    cfg: PipelineConfig,
    jobs: int = 1,
    progress=None,
) -> FeatureMatrix:
    """Extract one descriptor vector per window of every sample.

    Windows of one class are processed in dataset order; ``jobs`` > 1
    distributes windows over worker processes while keeping the output
    order deterministic. When windows produce curves of unequal length
    (possible for very small windows), all vectors are truncated to the
    common prefix so the feature matrix stays rectangular.
    """
    windowed = expand_windows(dataset, cfg.window_rows, cfg.window_cols)
    images = [s.image for s in windowed.samples]

    def collect(value_iter):
        vectors = []
        prev_class, in_class = None, 0
        for sample, values in zip(windowed.samples, value_iter):
            if prev_class is not None and sample.class_id != prev_class and progress:
                progress(windowed.class_names[prev_class], in_class)
                in_class = 0
            prev_class = sample.class_id
            in_class += 1
            vectors.append(values)
        if prev_class is not None and progress:
            progress(windowed.class_names[prev_class], in_class)
        return vectors

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            vectors = collect(pool.map(_window_values, images, [cfg] * len(images), chunksize=4))
    else:
        vectors = collect(_window_values(img, cfg) for img in images)

    length = min(len(v) for v in vectors)
    features = np.vstack([v[:length] for v in vectors])
    class_ids = np.array([s.class_id for s in windowed.samples])
    sample_indices = np.array([s.sample_index for s in windowed.samples])
    return FeatureMatrix(class_ids, sample_indices, features)


def classify_features(features: FeatureMatrix, cfg: PipelineConfig) -> ClassificationReport:
    """Hold-out split, LDA fit/predict, and scoring, all seeded from the config."""
    train, test = holdout_split(features, cfg.holdout_fraction, cfg.seed)
    model = lda_fit(train, cfg.ridge_factor)
    predicted = lda_predict(model, test)
    class_count = int(features.class_ids.max()) + 1
    return evaluate(test.class_ids, predicted, class_count, features.dimension)


def run_pipeline(root, layout: str, cfg: PipelineConfig, jobs: int = 1, progress=None):
    """ingest -> describe all windows -> split -> fit -> predict -> report."""
    dataset = ingest_dataset(root, layout)
    features = dataset_features(dataset, cfg, jobs=jobs, progress=progress)
    # Round-trip through the CSV encoding so a chained dataset+classify run
    # and this one-shot path see bit-identical feature values.
    features = _parse_features_csv(features_csv_text(features).splitlines())
    return classify_features(features, cfg)


# ---------------------------------------------------------------------------
# Serialization. Floats use repr(), which round-trips float64 exactly.


def features_csv_text(features: FeatureMatrix) -> str:
    header = "class_id,sample_index," + ",".join(
        f"d_{k}" for k in range(1, features.dimension + 1)
    )
    lines = [header]
    for cls, idx, row in zip(features.class_ids, features.sample_indices, features.features):
        lines.append(f"{cls},{idx}," + ",".join(repr(float(x)) for x in row))
    return "\n".join(lines) + "\n"


def descriptor_csv_text(vector: DescriptorVector, class_id: int = 0, sample_index: int = 0) -> str:
    header = "class_id,sample_index," + ",".join(f"d_{k}" for k in range(1, len(vector) + 1))
    row = f"{class_id},{sample_index}," + ",".join(repr(float(x)) for x in vector.values)
    return header + "\n" + row + "\n"


def read_features_csv(path) -> FeatureMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    return _parse_features_csv(lines)


def _parse_features_csv(lines) -> FeatureMatrix:
    rows = [line for line in lines if line.strip()]
    if len(rows) < 2 or not rows[0].startswith("class_id,sample_index"):
        raise InvalidFeatureError("feature CSV must have a header and at least one row")
    class_ids, sample_indices, vectors = [], [], []
    width = None
    for line in rows[1:]:
        parts = line.split(",")
        if width is None:
            width = len(parts)
        elif len(parts) != width:
            raise InvalidFeatureError("feature CSV rows have unequal column counts")
        try:
            class_ids.append(int(parts[0]))
            sample_indices.append(int(parts[1]))
            vectors.append([float(x) for x in parts[2:]])
        except ValueError as exc:
            raise InvalidFeatureError(f"feature CSV has a malformed value ({exc})") from exc
    return FeatureMatrix(np.array(class_ids), np.array(sample_indices), np.array(vectors))


def write_text_atomic(path, text: str) -> None:
    """Write via a temp file in the target directory, then rename into place."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_report_files(report: ClassificationReport, out_dir) -> tuple[str, str]:
    json_path = os.path.join(out_dir, "report.json")
    csv_path = os.path.join(out_dir, "confusion.csv")
    write_text_atomic(json_path, report.to_json())
    write_text_atomic(csv_path, report.confusion_csv())
    return json_path, csv_path


def report_row(label: str, report: ClassificationReport) -> str:
    """One summary line: method label, correctness %, kappa, descriptor count."""
    return (
        f"{label}\t{100.0 * report.correctness_rate:.4f}\t"
        f"{report.kappa:.4f}\t{report.descriptor_count}"
    )
