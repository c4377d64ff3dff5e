"""Self-contained Canny detector used as the comparison baseline.

No smoothing happens here; blur the image first if wanted.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np
from scipy import ndimage

from .core_types import EdgeMap, GrayImage


@dataclass(frozen=True)
class CannyParams:
    low_threshold: float = 50.0
    high_threshold: float = 150.0
    aperture: int = 3

    def __post_init__(self) -> None:
        if self.low_threshold < 0 or self.high_threshold < 0:
            raise ValueError("Canny thresholds must be nonnegative")
        if self.low_threshold > self.high_threshold:
            raise ValueError(
                f"low threshold {self.low_threshold} exceeds high threshold {self.high_threshold}"
            )
        if self.aperture not in (3, 5, 7):
            raise ValueError(f"aperture must be 3, 5 or 7, got {self.aperture}")


def sobel_kernels(aperture: int) -> tuple[np.ndarray, np.ndarray]:
    """(smoothing, derivative) 1-D Sobel factors, e.g. [1,2,1] and [-1,0,1] for aperture 3."""
    smooth = np.array([comb(aperture - 1, i) for i in range(aperture)], dtype=np.float64)
    base = np.array([comb(aperture - 3, i) for i in range(aperture - 2)], dtype=np.float64)
    deriv = np.convolve(base, [1.0, 0.0, -1.0])[::-1]
    return smooth, deriv


def _correlate_1d(a: np.ndarray, k: np.ndarray, axis: int) -> np.ndarray:
    return ndimage.correlate1d(a, k, axis=axis, mode="nearest")


def sobel(data: np.ndarray, aperture: int = 3) -> tuple[np.ndarray, np.ndarray]:
    """Horizontal and vertical derivatives with replicated borders."""
    a = np.asarray(data, dtype=np.float64)
    smooth, deriv = sobel_kernels(aperture)
    gx = _correlate_1d(_correlate_1d(a, deriv, axis=1), smooth, axis=0)
    gy = _correlate_1d(_correlate_1d(a, smooth, axis=1), deriv, axis=0)
    return gx, gy


def quantize_direction(gx: np.ndarray, gy: np.ndarray) -> np.ndarray:
    """Nearest of the four sectors 0, 45, 90, 135 degrees (y axis pointing down)."""
    angle = np.degrees(np.arctan2(gy, gx)) % 180.0
    return (np.floor((angle + 22.5) / 45.0).astype(int) % 4) * 45


def non_max_suppression(mag: np.ndarray, sector: np.ndarray) -> np.ndarray:
    """Mask of pixels that are local maxima across the edge.

    Ties follow the usual asymmetric rule: strictly greater than the left/upper
    neighbor, greater or equal to the right/lower one, and strict on both sides
    along diagonals. This keeps a plateau of two equal maxima one pixel wide.
    """
    rows, cols = mag.shape
    p = np.pad(mag, 1)

    def at(dr: int, dc: int) -> np.ndarray:
        return p[1 + dr : 1 + dr + rows, 1 + dc : 1 + dc + cols]

    keep = np.zeros(mag.shape, dtype=bool)
    s0 = sector == 0
    keep |= s0 & (mag > at(0, -1)) & (mag >= at(0, 1))
    s90 = sector == 90
    keep |= s90 & (mag > at(-1, 0)) & (mag >= at(1, 0))
    s45 = sector == 45
    keep |= s45 & (mag > at(-1, -1)) & (mag > at(1, 1))
    s135 = sector == 135
    keep |= s135 & (mag > at(-1, 1)) & (mag > at(1, -1))
    return keep


_EIGHT = np.ones((3, 3), dtype=bool)


def hysteresis(strong: np.ndarray, weak: np.ndarray) -> np.ndarray:
    """Keep strong pixels plus weak pixels 8-connected to a strong one."""
    candidates = strong | weak
    labels, n = ndimage.label(candidates, structure=_EIGHT)
    if n == 0:
        return np.zeros(strong.shape, dtype=bool)
    seeded = np.zeros(n + 1, dtype=bool)
    seeded[np.unique(labels[strong])] = True
    seeded[0] = False
    return seeded[labels]


def canny(img: GrayImage, p: CannyParams = CannyParams()) -> EdgeMap:
    gx, gy = sobel(img.pixels, p.aperture)
    mag = np.abs(gx) + np.abs(gy)
    thin = non_max_suppression(mag, quantize_direction(gx, gy))
    strong = thin & (mag > p.high_threshold)
    weak = thin & (mag > p.low_threshold) & ~strong
    return EdgeMap.from_mask(hysteresis(strong, weak))
