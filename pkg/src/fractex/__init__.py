"""Multiscale Bouligand-Minkowski fractal descriptors for texture analysis.

A gray-level texture is lifted to a 3-D intensity surface whose dilation
volume, tracked exactly over growing sphere radii, yields a log-log
fractality curve. Filtering that curve with a first-derivative-of-Gaussian
kernel at a fixed scale and truncating the noisy tail produces compact
descriptors that feed a linear discriminant classifier.
"""

from .classify import (
    ClassificationReport,
    FeatureMatrix,
    LdaModel,
    evaluate,
    holdout_split,
    lda_fit,
    lda_predict,
)
from .config import PipelineConfig, load_config
from .datasets import LabeledSample, TextureDataset, expand_windows, ingest_dataset
from .descriptors import (
    DescriptorVector,
    DimensionEstimate,
    LogLogCurve,
    estimate_dimension,
    loglog_curve,
    raw_descriptors,
)
from .image_io import GrayImage, load_gray_image, partition_windows, save_pgm
from .minkowski import (
    DistanceSet,
    ShellCounts,
    SurfacePointSet,
    VolumeCurve,
    brute_force_volumes,
    build_surface,
    exact_edt_volumes,
    representable_distances,
)
from .multiscale import (
    ScaleSpaceParams,
    gaussian_derivative_kernel,
    multiscale_descriptors,
    scale_transform,
)
from .pipeline import (
    classify_features,
    dataset_features,
    image_descriptors,
    run_pipeline,
)

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport",
    "DescriptorVector",
    "DimensionEstimate",
    "DistanceSet",
    "FeatureMatrix",
    "GrayImage",
    "LabeledSample",
    "LdaModel",
    "LogLogCurve",
    "PipelineConfig",
    "ScaleSpaceParams",
    "ShellCounts",
    "SurfacePointSet",
    "TextureDataset",
    "VolumeCurve",
    "brute_force_volumes",
    "build_surface",
    "classify_features",
    "dataset_features",
    "estimate_dimension",
    "evaluate",
    "exact_edt_volumes",
    "expand_windows",
    "gaussian_derivative_kernel",
    "holdout_split",
    "image_descriptors",
    "ingest_dataset",
    "lda_fit",
    "lda_predict",
    "load_config",
    "load_gray_image",
    "loglog_curve",
    "multiscale_descriptors",
    "partition_windows",
    "raw_descriptors",
    "representable_distances",
    "run_pipeline",
    "save_pgm",
    "scale_transform",
]
