"""Linear discriminant classification and hold-out evaluation.

The classifier uses per-class means with a pooled within-class covariance,
ridge-regularized because descriptor vectors are strongly correlated and
training sets are small (five samples per class in the half/half protocol),
which leaves the pooled covariance near-singular.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from .errors import (
    ClassTooSmallError,
    DimensionMismatchError,
    InvalidFeatureError,
    LengthMismatchError,
    SingularCovarianceError,
)


@dataclass(frozen=True, eq=False)
class FeatureMatrix:
    """Rows of (class_id, sample_index, feature vector), one per sample."""

    class_ids: np.ndarray
    sample_indices: np.ndarray
    features: np.ndarray

    def __post_init__(self):
        feats = np.asarray(self.features, dtype=np.float64)
        if feats.ndim != 2 or feats.shape[1] < 1:
            raise InvalidFeatureError("features must be a 2-D matrix with >= 1 column")
        if not np.all(np.isfinite(feats)):
            raise InvalidFeatureError("features contain non-finite values")
        ids = np.asarray(self.class_ids, dtype=np.int64)
        idx = np.asarray(self.sample_indices, dtype=np.int64)
        if ids.shape != (feats.shape[0],) or idx.shape != (feats.shape[0],):
            raise LengthMismatchError("class_ids/sample_indices must match feature rows")
        object.__setattr__(self, "class_ids", ids)
        object.__setattr__(self, "sample_indices", idx)
        object.__setattr__(self, "features", feats)

    @property
    def dimension(self) -> int:
        return self.features.shape[1]

    def __len__(self) -> int:
        return self.features.shape[0]

    def select(self, rows) -> "FeatureMatrix":
        return FeatureMatrix(self.class_ids[rows], self.sample_indices[rows], self.features[rows])


@dataclass(frozen=True, eq=False)
class LdaModel:
    class_ids: np.ndarray          # sorted ascending
    class_means: np.ndarray        # (C, d)
    pooled_covariance: np.ndarray  # (d, d), ridge applied
    priors: np.ndarray             # (C,)
    ridge: float


@dataclass(frozen=True, eq=False)
class ClassificationReport:
    """Confusion matrix (rows = actual, columns = predicted) plus summary scores."""

    confusion: np.ndarray
    correctness_rate: float
    kappa: float
    descriptor_count: int

    def to_json(self) -> str:
        payload = {
            "correctness_rate": self.correctness_rate,
            "kappa": self.kappa,
            "descriptor_count": self.descriptor_count,
            "confusion": self.confusion.tolist(),
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def confusion_csv(self) -> str:
        return "\n".join(",".join(str(v) for v in row) for row in self.confusion) + "\n"


def holdout_split(features: FeatureMatrix, fraction: float, seed: int):
    """Stratified train/test split by deterministic per-class shuffle.

    floor(fraction * n_c) samples of every class go to training, the rest to
    test. The same seed always produces the same split.
    """
    if not 0.0 < fraction < 1.0:
        raise ValueError(f"fraction must be in (0, 1), got {fraction}")
    rng = np.random.default_rng(seed)
    train_rows, test_rows = [], []
    for cls in np.unique(features.class_ids):
        rows = np.flatnonzero(features.class_ids == cls)
        if len(rows) < 2:
            raise ClassTooSmallError(f"class {cls} has {len(rows)} sample(s), need >= 2")
        order = rng.permutation(len(rows))
        n_train = int(fraction * len(rows))
        train_rows.append(rows[order[:n_train]])
        test_rows.append(rows[order[n_train:]])
    return features.select(np.concatenate(train_rows)), features.select(np.concatenate(test_rows))


def lda_fit(train: FeatureMatrix, ridge_factor: float = 1e-6) -> LdaModel:
    """Fit class means, empirical priors, and the pooled within-class covariance.

    The covariance is regularized as S + ridge_factor * (trace(S)/d) * I and
    must be positive definite at working precision afterwards.
    """
    classes = np.unique(train.class_ids)
    if len(classes) < 2:
        raise ClassTooSmallError(f"need >= 2 classes to fit, got {len(classes)}")
    n, d = train.features.shape
    means = np.empty((len(classes), d))
    scatter = np.zeros((d, d))
    priors = np.empty(len(classes))
    for c, cls in enumerate(classes):
        block = train.features[train.class_ids == cls]
        means[c] = block.mean(axis=0)
        centered = block - means[c]
        scatter += centered.T @ centered
        priors[c] = len(block) / n
    covariance = scatter / (n - len(classes))
    covariance += ridge_factor * (np.trace(covariance) / d) * np.eye(d)

    eigvals = linalg.eigvalsh(covariance)
    if eigvals[0] <= d * np.finfo(np.float64).eps * max(eigvals[-1], 0.0):
        raise SingularCovarianceError(
            f"pooled covariance is singular at working precision "
            f"(min/max eigenvalue {eigvals[0]:.3e}/{eigvals[-1]:.3e}); "
            f"increase ridge_factor"
        )
    return LdaModel(classes, means, covariance, priors, ridge_factor)


def lda_predict(model: LdaModel, features: FeatureMatrix | np.ndarray) -> np.ndarray:
    """Predict class ids by the largest linear discriminant score.

    Score of class c at x is x^T S^-1 mu_c - mu_c^T S^-1 mu_c / 2 + log prior_c;
    ties go to the lowest class id.
    """
    x = features.features if isinstance(features, FeatureMatrix) else np.asarray(features)
    if x.ndim != 2 or x.shape[1] != model.class_means.shape[1]:
        raise DimensionMismatchError(
            f"features have dimension {x.shape[1] if x.ndim == 2 else 'N/A'}, "
            f"model expects {model.class_means.shape[1]}"
        )
    cho = linalg.cho_factor(model.pooled_covariance)
    weights = linalg.cho_solve(cho, model.class_means.T)  # (d, C)
    scores = x @ weights
    scores -= 0.5 * np.einsum("ck,kc->c", model.class_means, weights)
    scores += np.log(model.priors)
    return model.class_ids[np.argmax(scores, axis=1)]


def evaluate(actual, predicted, class_count: int, descriptor_count: int) -> ClassificationReport:
    """Confusion matrix, correctness rate, and Cohen's kappa for a prediction run.

    kappa = (p_o - p_e) / (1 - p_e), with observed agreement p_o on the
    diagonal and chance agreement p_e from the row/column margins.
    """
    actual = np.asarray(actual, dtype=np.int64)
    predicted = np.asarray(predicted, dtype=np.int64)
    if actual.shape != predicted.shape or actual.ndim != 1:
        raise LengthMismatchError(
            f"actual and predicted must be equally long 1-D lists "
            f"({actual.shape} vs {predicted.shape})"
        )
    if actual.size == 0:
        raise LengthMismatchError("cannot evaluate zero predictions")
    for name, ids in (("actual", actual), ("predicted", predicted)):
        if ids.min() < 0 or ids.max() >= class_count:
            raise InvalidFeatureError(f"{name} class ids fall outside [0, {class_count})")

    confusion = np.zeros((class_count, class_count), dtype=np.int64)
    np.add.at(confusion, (actual, predicted), 1)
    total = confusion.sum()
    p_observed = np.trace(confusion) / total
    p_expected = float(confusion.sum(axis=1) @ confusion.sum(axis=0)) / (total * total)
    if p_expected == 1.0:
        kappa = 1.0 if p_observed == 1.0 else 0.0
    else:
        kappa = (p_observed - p_expected) / (1.0 - p_expected)
    return ClassificationReport(confusion, float(p_observed), float(kappa), descriptor_count)
