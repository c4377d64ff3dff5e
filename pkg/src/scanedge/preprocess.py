"""Gaussian smoothing applied before detection."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .core_types import GrayImage


def auto_sigma(size: int) -> float:
    # default used by common imaging libraries when sigma <= 0 is requested
    return 0.3 * ((size - 1) * 0.5 - 1) + 0.8


@dataclass(frozen=True, eq=False)
class GaussianKernel:
    size: int
    sigma: float
    weights: np.ndarray = field(repr=False)


def make_kernel(size: int, sigma: Union[float, str, None] = "auto") -> GaussianKernel:
    """Normalized 1-D Gaussian of odd length ``size``.

    ``sigma="auto"`` (or None) picks ``0.3*((size-1)/2 - 1) + 0.8``, i.e. 1.4 for size 7.
    """
    if size < 1 or size % 2 == 0:
        raise ValueError(f"kernel size must be odd and >= 1, got {size}")
    if sigma is None or sigma == "auto":
        sigma = auto_sigma(size)
    elif isinstance(sigma, str) or not sigma > 0:
        raise ValueError(f"sigma must be positive or 'auto', got {sigma!r}")
    sigma = float(sigma)
    if size == 1:
        w = np.ones(1)
    else:
        x = np.arange(size, dtype=np.float64) - (size - 1) / 2
        w = np.exp(-(x * x) / (2.0 * sigma * sigma))
        w /= w.sum()
        # exact mirror symmetry regardless of summation order
        w = 0.5 * (w + w[::-1])
    w.setflags(write=False)
    return GaussianKernel(size, sigma, w)


def _reflect101(a: np.ndarray, pad: int, axis: int) -> np.ndarray:
    # numpy "reflect" mirrors without repeating the edge (index -1 -> 1) and
    # keeps reflecting when pad exceeds the axis length
    width = [(0, 0)] * a.ndim
    width[axis] = (pad, pad)
    return np.pad(a, width, mode="reflect")


def convolve_separable(data: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """Float separable convolution, rows first then columns, mirror-101 borders."""
    data = np.asarray(data, dtype=np.float64)
    k = weights.size
    r = k // 2
    if k == 1:
        return data * weights[0]
    rows, cols = data.shape

    padded = _reflect101(data, r, axis=1)
    tmp = np.zeros((rows, cols))
    for i in range(k):
        tmp += weights[i] * padded[:, i : i + cols]

    padded = _reflect101(tmp, r, axis=0)
    out = np.zeros((rows, cols))
    for i in range(k):
        out += weights[i] * padded[i : i + rows, :]
    return out


def round_half_away(x: np.ndarray) -> np.ndarray:
    return np.sign(x) * np.floor(np.abs(x) + 0.5)


def gaussian_blur(img: GrayImage, kernel: GaussianKernel) -> GrayImage:
    if kernel.size == 1:
        return img
    out = convolve_separable(img.pixels, kernel.weights)
    out = np.clip(round_half_away(out), 0, 255)
    return GrayImage(img.rows, img.cols, out.astype(np.uint8))
