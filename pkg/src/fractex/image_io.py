"""Gray-level image container, PGM/PNG loading, and window partitioning.

Images are 8-bit single-channel rasters. PGM (both the ASCII ``P2`` and
binary ``P5`` flavours) is the native format; grayscale PNG is read through
Pillow. Color inputs are rejected rather than converted, so descriptors are
never computed on an implicit luminance transform.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import CorruptImageError, InvalidGridError, UnsupportedFormatError

_PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


@dataclass(frozen=True, eq=False)
class GrayImage:
    """A 2-D grid of integer intensities in [0, 255].

    ``pixels`` is a (height, width) uint8 array in row-major order.
    """

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.pixels)
        if arr.ndim != 2 or arr.size == 0:
            raise CorruptImageError("image must be a non-empty 2-D intensity grid")
        if not np.issubdtype(arr.dtype, np.integer):
            raise CorruptImageError(f"intensities must be integers, got {arr.dtype}")
        if arr.min() < 0 or arr.max() > 255:
            raise CorruptImageError("intensities must lie in [0, 255]")
        object.__setattr__(self, "pixels", arr.astype(np.uint8))

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def max_intensity(self) -> int:
        return int(self.pixels.max())


def load_gray_image(path) -> GrayImage:
    """Load a grayscale image from a PGM (P2/P5) or grayscale PNG file.

    The format is detected from the file's magic bytes, not its extension.
    """
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:2] in (b"P2", b"P5"):
        return GrayImage(_decode_pgm(data))
    if data[:8] == _PNG_MAGIC:
        return GrayImage(_decode_png(path))
    raise UnsupportedFormatError(f"{path}: not a PGM (P2/P5) or PNG file")


def save_pgm(image: GrayImage, path, binary: bool = True) -> None:
    """Write ``image`` as an 8-bit maxval-255 PGM file (P5, or P2 if ``binary`` is false)."""
    header = f"{'P5' if binary else 'P2'}\n{image.width} {image.height}\n255\n"
    with open(path, "wb") as fh:
        fh.write(header.encode("ascii"))
        if binary:
            fh.write(image.pixels.tobytes())
        else:
            for row in image.pixels:
                fh.write((" ".join(str(v) for v in row) + "\n").encode("ascii"))


def partition_windows(image: GrayImage, rows: int, cols: int) -> list[GrayImage]:
    """Tile ``image`` into a rows x cols grid of equal windows.

    Windows are floor(height/rows) x floor(width/cols) pixels, taken
    left-to-right then top-to-bottom from the top-left corner. Remainder
    rows/columns that do not fill a window are discarded.
    """
    if rows < 1 or cols < 1 or rows > image.height or cols > image.width:
        raise InvalidGridError(
            f"grid {rows}x{cols} does not fit a {image.height}x{image.width} image"
        )
    wh = image.height // rows
    ww = image.width // cols
    out = []
    for r in range(rows):
        for c in range(cols):
            block = image.pixels[r * wh : (r + 1) * wh, c * ww : (c + 1) * ww]
            out.append(GrayImage(block.copy()))
    return out


def _decode_png(path) -> np.ndarray:
    try:
        with Image.open(path) as img:
            if img.mode != "L":
                raise UnsupportedFormatError(
                    f"{path}: PNG mode {img.mode!r} is not 8-bit grayscale; "
                    "color inputs are rejected, not converted"
                )
            return np.asarray(img, dtype=np.uint8)
    except UnidentifiedImageError as exc:
        raise CorruptImageError(f"{path}: unreadable PNG ({exc})") from exc


def _decode_pgm(data: bytes) -> np.ndarray:
    magic = data[:2].decode("ascii")
    pos = 2
    fields = []
    # Header: width, height, maxval as ASCII tokens; '#' comments run to EOL.
    while len(fields) < 3:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos >= len(data):
            raise CorruptImageError("PGM header ended prematurely")
        if data[pos : pos + 1] == b"#":
            while pos < len(data) and data[pos] not in (0x0A, 0x0D):
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        token = data[start:pos]
        if not token.isdigit():
            raise CorruptImageError(f"PGM header token {token!r} is not a number")
        fields.append(int(token))
    width, height, maxval = fields
    if width < 1 or height < 1:
        raise CorruptImageError(f"PGM dimensions {width}x{height} are invalid")
    if not 1 <= maxval <= 255:
        raise UnsupportedFormatError(f"PGM maxval {maxval} unsupported (8-bit only)")

    if magic == "P5":
        pos += 1  # single whitespace byte after maxval
        payload = data[pos : pos + width * height]
        if len(payload) != width * height:
            raise CorruptImageError(
                f"PGM payload has {len(payload)} bytes, expected {width * height}"
            )
        if data[pos + width * height :].strip():
            raise CorruptImageError("PGM has trailing bytes after pixel data")
        arr = np.frombuffer(payload, dtype=np.uint8).reshape(height, width)
    else:
        tokens = []
        for raw_line in data[pos:].split(b"\n"):
            line = raw_line.split(b"#", 1)[0]
            tokens.extend(line.split())
        if len(tokens) != width * height:
            raise CorruptImageError(
                f"PGM has {len(tokens)} pixel values, expected {width * height}"
            )
        try:
            arr = np.array([int(t) for t in tokens], dtype=np.int64)
        except ValueError as exc:
            raise CorruptImageError(f"PGM pixel token is not a number ({exc})") from exc
        arr = arr.reshape(height, width)
    if arr.max(initial=0) > maxval:
        raise CorruptImageError(f"PGM pixel exceeds declared maxval {maxval}")
    return arr.astype(np.uint8)


def _is_image_file(name: str) -> bool:
    return os.path.splitext(name)[1].lower() in (".pgm", ".png")
