"""Shared data model: grayscale images, edge maps, parameters and statistics records."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

EDGE = 255

PixelsLike = Union[Sequence[int], np.ndarray]


def _as_grid(rows: int, cols: int, pixels: PixelsLike, what: str) -> np.ndarray:
    if rows < 1 or cols < 1:
        raise ValueError(f"{what} must have at least one row and one column, got {rows}x{cols}")
    arr = np.asarray(pixels)
    if arr.size != rows * cols:
        raise ValueError(
            f"dimension mismatch: {rows}x{cols} {what} needs {rows * cols} values, got {arr.size}"
        )
    if arr.size and arr.dtype.kind not in "iub":
        if arr.dtype.kind == "f" and np.all(arr == np.round(arr)):
            arr = arr.astype(np.int64)
        else:
            raise ValueError(f"{what} values must be integers, got dtype {arr.dtype}")
    return arr.reshape(rows, cols)


def _freeze(arr: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(arr, dtype=np.uint8).copy()
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class GrayImage:
    """8-bit grayscale image stored row-major as an immutable ``(rows, cols)`` uint8 array."""

    rows: int
    cols: int
    pixels: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        grid = _as_grid(self.rows, self.cols, self.pixels, "image")
        if grid.size and (grid.min() < 0 or grid.max() > 255):
            raise ValueError(
                f"intensity out of range [0, 255]: min={int(grid.min())}, max={int(grid.max())}"
            )
        object.__setattr__(self, "pixels", _freeze(grid))

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "GrayImage":
        arr = np.asarray(arr)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-D array, got shape {arr.shape}")
        return cls(arr.shape[0], arr.shape[1], arr)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def pixel(self, r: int, c: int) -> int:
        return int(self.pixels[r, c])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.pixels, other.pixels))

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class EdgeMap:
    """Binary edge map; every value is 0 or 255."""

    rows: int
    cols: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        grid = _as_grid(self.rows, self.cols, self.values, "edge map")
        bad = (grid != 0) & (grid != EDGE)
        if bad.any():
            r, c = np.argwhere(bad)[0]
            raise ValueError(f"edge map values must be 0 or 255, got {int(grid[r, c])} at ({r}, {c})")
        object.__setattr__(self, "values", _freeze(grid))

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> "EdgeMap":
        mask = np.asarray(mask, dtype=bool)
        return cls(mask.shape[0], mask.shape[1], np.where(mask, EDGE, 0))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def mask(self) -> np.ndarray:
        return self.values == EDGE

    @property
    def edge_count(self) -> int:
        return int(np.count_nonzero(self.values))

    def to_image(self) -> GrayImage:
        return GrayImage(self.rows, self.cols, self.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeMap):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.values, other.values))

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class DetectorParams:
    """Tuning knobs of the scan-line detector.

    thres scales the per-line standard deviation, thres2 is the floor on the
    per-line mean (quiet lines never produce edges) and thres3 the floor on the
    local window mean. ``advance_on_edge`` is how far the window start jumps
    after a detection. ``blur_kernel=1`` disables smoothing.
    """

    thres: float = 0.8
    thres2: float = 1.0
    thres3: float = 6.0
    advance_on_edge: int = 4
    eliminate_isolated: bool = True
    blur_kernel: int = 7
    blur_sigma: Union[float, str] = "auto"

    def __post_init__(self) -> None:
        for name in ("thres", "thres2", "thres3"):
            v = getattr(self, name)
            if not np.isfinite(v) or v < 0:
                raise ValueError(f"{name} must be a nonnegative real, got {v}")
        if self.advance_on_edge not in (1, 4):
            raise ValueError(f"advance_on_edge must be 1 or 4, got {self.advance_on_edge}")
        if self.blur_kernel < 1 or self.blur_kernel % 2 == 0:
            raise ValueError(f"blur_kernel must be an odd positive integer, got {self.blur_kernel}")
        if isinstance(self.blur_sigma, str):
            if self.blur_sigma != "auto":
                raise ValueError(f"blur_sigma must be positive or 'auto', got {self.blur_sigma!r}")
        elif not self.blur_sigma > 0:
            raise ValueError(f"blur_sigma must be positive or 'auto', got {self.blur_sigma}")


@dataclass(frozen=True)
class GlobalStats:
    mgsmd: float
    dpg: float


@dataclass(frozen=True)
class LocalWindowStats:
    mlsmd: float
    dpl: float


@dataclass(frozen=True, eq=False)
class ScanBuffer:
    """Differences and sums of absolute differences of one scanned line."""

    diffs: np.ndarray
    smds: np.ndarray

    @classmethod
    def from_line(cls, line: PixelsLike) -> "ScanBuffer":
        a = np.asarray(line, dtype=np.int64)
        if a.ndim != 1 or a.size < 3:
            raise ValueError(f"line must be 1-D with at least 3 pixels, got shape {a.shape}")
        diffs = np.diff(a)
        ad = np.abs(diffs)
        return cls(diffs, ad[:-1] + ad[1:])


def image_new(rows: int, cols: int, pixels: PixelsLike) -> GrayImage:
    return GrayImage(rows, cols, pixels)
