"""Image file codecs: binary PGM (canonical) and optional PNG through Pillow."""

from __future__ import annotations

import io as _io
import os
from pathlib import Path
from typing import Union

import numpy as np

from .core_types import GrayImage

PathLike = Union[str, os.PathLike]


class MalformedImageError(ValueError):
    """Raised when image bytes cannot be decoded."""


def _header_tokens(data: bytes, count: int) -> tuple[list[bytes], int]:
    """Read ``count`` whitespace separated tokens, skipping ``#`` comments.

    Returns the tokens and the offset of the single whitespace byte that ends the header.
    """
    tokens: list[bytes] = []
    i, n = 0, len(data)
    while len(tokens) < count:
        while i < n and data[i : i + 1].isspace():
            i += 1
        if i >= n:
            raise MalformedImageError("truncated PGM header")
        if data[i : i + 1] == b"#":
            while i < n and data[i : i + 1] not in (b"\n", b"\r"):
                i += 1
            continue
        j = i
        while j < n and not data[j : j + 1].isspace() and data[j : j + 1] != b"#":
            j += 1
        tokens.append(data[i:j])
        i = j
    if i >= n or not data[i : i + 1].isspace():
        raise MalformedImageError("PGM header must end with a single whitespace byte")
    return tokens, i


def read_pgm(data: bytes) -> GrayImage:
    if data[:2] != b"P5":
        if data[:2] in (b"P1", b"P2", b"P3", b"P4", b"P6", b"P7"):
            raise MalformedImageError(f"unsupported netpbm variant {data[:2].decode()}; only P5 is read")
        raise MalformedImageError("not a PGM file (missing P5 magic)")
    tokens, end = _header_tokens(data, 4)
    try:
        cols, rows, maxval = (int(t) for t in tokens[1:])
    except ValueError as exc:
        raise MalformedImageError(f"bad PGM header: {exc}") from None
    if cols < 1 or rows < 1:
        raise MalformedImageError(f"bad PGM dimensions {cols}x{rows}")
    if not 0 < maxval <= 255:
        raise MalformedImageError(f"maxval {maxval} unsupported (8-bit only)")
    payload = data[end + 1 : end + 1 + rows * cols]
    if len(payload) < rows * cols:
        raise MalformedImageError(f"truncated payload: expected {rows * cols} bytes, got {len(payload)}")
    pixels = np.frombuffer(payload, dtype=np.uint8)
    if pixels.max(initial=0) > maxval:
        raise MalformedImageError("pixel value exceeds maxval")
    return GrayImage(rows, cols, pixels)


def write_pgm(img: GrayImage) -> bytes:
    return f"P5\n{img.cols} {img.rows}\n255\n".encode("ascii") + img.pixels.tobytes()


def luma(rgb: np.ndarray) -> np.ndarray:
    """round(0.299 R + 0.587 G + 0.114 B) per pixel."""
    rgb = np.asarray(rgb, dtype=np.float64)
    y = 0.299 * rgb[..., 0] + 0.587 * rgb[..., 1] + 0.114 * rgb[..., 2]
    return np.clip(np.floor(y + 0.5), 0, 255).astype(np.uint8)


def _pil():
    try:
        from PIL import Image
    except ImportError as exc:  # pragma: no cover - depends on environment
        raise RuntimeError("PNG support needs Pillow (pip install scanedge[png])") from exc
    return Image


def read_png(data: bytes) -> GrayImage:
    Image = _pil()
    # IHDR bit depth sits at a fixed offset after the signature
    if len(data) > 24 and data[12:16] == b"IHDR" and data[24] > 8:
        raise MalformedImageError(f"unsupported bit depth {data[24]}; 8-bit only")
    try:
        im = Image.open(_io.BytesIO(data))
        im.load()
    except Exception as exc:
        raise MalformedImageError(f"cannot decode PNG: {exc}") from None
    if im.mode in ("I", "I;16", "I;16B", "I;16L", "F"):
        raise MalformedImageError(f"unsupported bit depth (mode {im.mode}); 8-bit only")
    if im.mode == "P":
        im = im.convert("RGBA" if "transparency" in im.info else "RGB")
    if im.mode in ("L", "1"):
        arr = np.asarray(im.convert("L"))
    elif im.mode == "LA":
        arr = np.asarray(im)[..., 0]
    elif im.mode in ("RGB", "RGBA"):
        arr = luma(np.asarray(im)[..., :3])
    else:
        raise MalformedImageError(f"unsupported PNG mode {im.mode}")
    return GrayImage.from_array(arr)


def write_png(img: GrayImage) -> bytes:
    Image = _pil()
    buf = _io.BytesIO()
    Image.fromarray(np.array(img.pixels)).save(buf, format="PNG")
    return buf.getvalue()


def load_image(path: PathLike) -> GrayImage:
    data = Path(path).read_bytes()
    if data[:8] == b"\x89PNG\r\n\x1a\n":
        return read_png(data)
    return read_pgm(data)


def save_image(img: GrayImage, path: PathLike) -> None:
    path = Path(path)
    blob = write_png(img) if path.suffix.lower() == ".png" else write_pgm(img)
    path.write_bytes(blob)
