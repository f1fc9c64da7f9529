"""Command line front end.

Subcommands: ``describe`` (one image to a descriptor CSV), ``dataset``
(directory tree to a feature CSV), ``classify`` (feature CSV to a report),
and ``pipeline`` (tree straight to a report). Flags override the config
file, which overrides the built-in defaults. Known failures exit with
status 2 and a single ``<code>: <message>`` line on stderr.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace

from . import pipeline as pl
from .config import DESCRIPTOR_MODES, PipelineConfig, load_config
from .datasets import LAYOUTS, ingest_dataset
from .errors import FractexError, InvalidConfigError
from .image_io import load_gray_image

MODE_LABELS = {"raw-minkowski": "Minkowski", "multiscale": "Multiscale"}


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH", help="key=value config file")
    parser.add_argument("--out", metavar="DIR", default=".", help="output directory")
    parser.add_argument("--seed", type=int, help="override the split seed")
    parser.add_argument("--jobs", type=int, default=1, help="parallel window workers")
    parser.add_argument("--r-max", type=float, dest="r_max", help="max dilation radius")
    parser.add_argument("--scale-a", type=float, dest="scale_a", help="Gaussian scale")
    parser.add_argument(
        "--threshold-index", type=int, dest="threshold_index", help="descriptor cutoff index"
    )
    parser.add_argument(
        "--mode", choices=DESCRIPTOR_MODES, dest="descriptor_mode", help="descriptor mode"
    )
    parser.add_argument(
        "--holdout-fraction", type=float, dest="holdout_fraction", help="train fraction"
    )
    parser.add_argument(
        "--ridge-factor", type=float, dest="ridge_factor", help="covariance ridge factor"
    )
    parser.add_argument(
        "--windows",
        metavar="ROWSxCOLS",
        help="window grid applied to each image, e.g. 5x2",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fractex",
        description="Multiscale fractal texture descriptors and LDA evaluation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", help="descriptor CSV for one image")
    p.add_argument("image", help="PGM or grayscale PNG file")
    _add_common(p)

    p = sub.add_parser("dataset", help="feature CSV for a labeled dataset tree")
    p.add_argument("root", help="dataset root directory")
    p.add_argument("--layout", choices=LAYOUTS, default="class-subdirectories")
    _add_common(p)

    p = sub.add_parser("classify", help="evaluate a feature CSV")
    p.add_argument("features", help="feature CSV from the dataset command")
    _add_common(p)

    p = sub.add_parser("pipeline", help="dataset tree straight to a report")
    p.add_argument("root", help="dataset root directory")
    p.add_argument("--layout", choices=LAYOUTS, default="class-subdirectories")
    _add_common(p)
    return parser


def _resolve_config(args) -> PipelineConfig:
    cfg = PipelineConfig()
    if args.config:
        if not os.path.isfile(args.config):
            raise FileNotFoundError(f"config file {args.config} does not exist")
        cfg = load_config(args.config, cfg)
    overrides = {}
    for name in (
        "r_max",
        "scale_a",
        "threshold_index",
        "descriptor_mode",
        "holdout_fraction",
        "seed",
        "ridge_factor",
    ):
        value = getattr(args, name, None)
        if value is not None:
            overrides[name] = value
    if getattr(args, "windows", None):
        try:
            rows, cols = (int(part) for part in args.windows.lower().split("x"))
        except ValueError as exc:
            raise InvalidConfigError(
                f"--windows expects ROWSxCOLS, got {args.windows!r}"
            ) from exc
        overrides["window_rows"] = rows
        overrides["window_cols"] = cols
    return replace(cfg, **overrides)


def _progress(class_name: str, windows: int) -> None:
    print(f"class {class_name}: {windows} windows", file=sys.stderr)


def _cmd_describe(args, cfg: PipelineConfig) -> int:
    if not os.path.isfile(args.image):
        raise FileNotFoundError(f"image file {args.image} does not exist")
    image = load_gray_image(args.image)
    vector, dim = pl.image_descriptors(image, cfg)
    out = os.path.join(args.out, "descriptors.csv")
    pl.write_text_atomic(out, pl.descriptor_csv_text(vector))
    print(f"descriptors={len(vector)} dimension={dim.dimension:.6f}")
    print(f"wrote {out}")
    return 0


def _cmd_dataset(args, cfg: PipelineConfig) -> int:
    dataset = ingest_dataset(args.root, args.layout)
    features = pl.dataset_features(dataset, cfg, jobs=args.jobs, progress=_progress)
    out = os.path.join(args.out, "features.csv")
    pl.write_text_atomic(out, pl.features_csv_text(features))
    print(f"samples={len(features)} descriptors={features.dimension}")
    print(f"wrote {out}")
    return 0


def _cmd_classify(args, cfg: PipelineConfig) -> int:
    if not os.path.isfile(args.features):
        raise FileNotFoundError(f"feature file {args.features} does not exist")
    features = pl.read_features_csv(args.features)
    report = pl.classify_features(features, cfg)
    json_path, csv_path = pl.write_report_files(report, args.out)
    print(pl.report_row(MODE_LABELS[cfg.descriptor_mode], report))
    print(f"wrote {json_path} and {csv_path}")
    return 0


def _cmd_pipeline(args, cfg: PipelineConfig) -> int:
    report = pl.run_pipeline(args.root, args.layout, cfg, jobs=args.jobs, progress=_progress)
    json_path, csv_path = pl.write_report_files(report, args.out)
    print(pl.report_row(MODE_LABELS[cfg.descriptor_mode], report))
    print(f"wrote {json_path} and {csv_path}")
    return 0


_COMMANDS = {
    "describe": _cmd_describe,
    "dataset": _cmd_dataset,
    "classify": _cmd_classify,
    "pipeline": _cmd_pipeline,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _resolve_config(args)
        return _COMMANDS[args.command](args, cfg)
    except FractexError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"FileNotFound: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
