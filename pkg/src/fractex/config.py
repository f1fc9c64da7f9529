"""Pipeline configuration: defaults, flat key=value files, validation.

Precedence is defaults < config file < command-line flags. Unknown keys are
rejected so a typo cannot silently fall back to a default.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace

from .errors import InvalidConfigError

DESCRIPTOR_MODES = ("raw-minkowski", "multiscale")


@dataclass(frozen=True)
class PipelineConfig:
    r_max: float = 10.0
    scale_a: float = 0.7
    threshold_index: int = 51
    kernel_radius_factor: float = 4.0
    descriptor_mode: str = "multiscale"
    holdout_fraction: float = 0.5
    seed: int = 0
    ridge_factor: float = 1e-6
    window_rows: int = 1
    window_cols: int = 1

    def __post_init__(self):
        if self.r_max < 1:
            raise InvalidConfigError(f"r_max must be >= 1, got {self.r_max}")
        if self.scale_a <= 0:
            raise InvalidConfigError(f"scale_a must be positive, got {self.scale_a}")
        if self.threshold_index < 1:
            raise InvalidConfigError(f"threshold_index must be >= 1, got {self.threshold_index}")
        if self.kernel_radius_factor <= 0:
            raise InvalidConfigError(
                f"kernel_radius_factor must be positive, got {self.kernel_radius_factor}"
            )
        if self.descriptor_mode not in DESCRIPTOR_MODES:
            raise InvalidConfigError(
                f"descriptor_mode must be one of {DESCRIPTOR_MODES}, got {self.descriptor_mode!r}"
            )
        if not 0.0 < self.holdout_fraction < 1.0:
            raise InvalidConfigError(
                f"holdout_fraction must be in (0, 1), got {self.holdout_fraction}"
            )
        if self.ridge_factor < 0:
            raise InvalidConfigError(f"ridge_factor must be >= 0, got {self.ridge_factor}")
        if self.window_rows < 1 or self.window_cols < 1:
            raise InvalidConfigError("window grid must be at least 1x1")


_FIELD_TYPES = {f.name: f.type for f in fields(PipelineConfig)}


def load_config(path, base: PipelineConfig | None = None) -> PipelineConfig:
    """Read a flat ``key=value`` config file on top of ``base`` (or defaults)."""
    cfg = base if base is not None else PipelineConfig()
    overrides = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise InvalidConfigError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            overrides[key] = _parse_value(key, value, f"{path}:{lineno}")
    return replace(cfg, **overrides)


def _parse_value(key: str, value: str, where: str):
    if key not in _FIELD_TYPES:
        raise InvalidConfigError(f"{where}: unknown config key {key!r}")
    kind = _FIELD_TYPES[key]
    try:
        if kind == "int":
            return int(value)
        if kind == "float":
            return float(value)
        return value
    except ValueError as exc:
        raise InvalidConfigError(f"{where}: bad value for {key}: {exc}") from exc
