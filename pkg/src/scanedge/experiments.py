"""Run helpers behind the CLI and the scripts: metrics, sweeps, comparisons, fixtures."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, replace
from importlib import resources
from typing import Iterable, Optional

import numpy as np

from .canny import CannyParams, canny
from .core_types import DetectorParams, EdgeMap, GrayImage
from .detector import detect_timed
from .io import read_pgm
from .preprocess import gaussian_blur, make_kernel


@dataclass(frozen=True)
class RunMetrics:
    edge_pixel_count: int
    edge_density: float
    isolated_removed: int
    wall_time_ms_blur: float
    wall_time_ms_hscan: float
    wall_time_ms_vscan: float
    wall_time_ms_elim: float

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class RunOutput:
    edges: EdgeMap
    metrics: RunMetrics


def run_detect(img: GrayImage, params: DetectorParams) -> RunOutput:
    res = detect_timed(img, params)
    count = res.edges.edge_count
    t = res.timings_ms
    metrics = RunMetrics(
        edge_pixel_count=count,
        edge_density=count / (img.rows * img.cols),
        isolated_removed=res.isolated_removed,
        wall_time_ms_blur=t["blur"],
        wall_time_ms_hscan=t["hscan"],
        wall_time_ms_vscan=t["vscan"],
        wall_time_ms_elim=t["elim"],
    )
    return RunOutput(res.edges, metrics)


def run_canny(img: GrayImage, cp: CannyParams, blur_kernel: int = 7, blur_sigma="auto") -> tuple[EdgeMap, dict]:
    """Canny with the same pre-blur the scan-line detector uses."""
    t0 = time.perf_counter()
    if blur_kernel > 1:
        img = gaussian_blur(img, make_kernel(blur_kernel, blur_sigma))
    t1 = time.perf_counter()
    edges = canny(img, cp)
    t2 = time.perf_counter()
    count = edges.edge_count
    return edges, {
        "edge_pixel_count": count,
        "edge_density": count / (img.rows * img.cols),
        "wall_time_ms_blur": (t1 - t0) * 1e3,
        "wall_time_ms_canny": (t2 - t1) * 1e3,
    }


def sweep(img: GrayImage, thres_values: Iterable[float], base: DetectorParams = DetectorParams()):
    """One detection per thres value with everything else fixed; yields (thres, RunOutput)."""
    values = list(thres_values)
    if not values:
        raise ValueError("sweep needs at least one thres value")
    return [(v, run_detect(img, replace(base, thres=v))) for v in values]


# fixtures


def bundled_image(name: str = "cameraman") -> GrayImage:
    """Small natural test image shipped with the package (256x256 cameraman)."""
    data = resources.files("scanedge").joinpath("data", f"{name}.pgm").read_bytes()
    return read_pgm(data)


def hard_step(size: int = 16, low: int = 0, high: int = 255, at: Optional[int] = None) -> GrayImage:
    at = size // 2 if at is None else at
    arr = np.full((size, size), low, dtype=np.uint8)
    arr[:, at:] = high
    return GrayImage.from_array(arr)


def soft_ramps(
    rows: int = 64,
    cols: int = 128,
    levels: tuple[int, ...] = (40, 200, 60, 220, 30),
    ramp: int = 5,
    noise: float = 0.0,
    seed: int = 0,
) -> GrayImage:
    """Flat bands joined by linear ``ramp``-pixel transitions along each row."""
    n_bands = len(levels)
    flat = (cols - ramp * (n_bands - 1)) // n_bands
    profile: list[float] = []
    for i, lv in enumerate(levels):
        profile += [lv] * flat
        if i + 1 < n_bands:
            nxt = levels[i + 1]
            profile += [lv + (nxt - lv) * (j + 1) / (ramp + 1) for j in range(ramp)]
    profile += [levels[-1]] * (cols - len(profile))
    arr = np.tile(np.asarray(profile), (rows, 1))
    if noise:
        arr = arr + np.random.default_rng(seed).normal(0, noise, arr.shape)
    return GrayImage.from_array(np.clip(np.rint(arr), 0, 255).astype(np.uint8))


def mean_horizontal_run(edges: EdgeMap) -> float:
    """Mean length of maximal horizontal runs of edge pixels (0 when there are none)."""
    m = edges.mask.astype(np.int8)
    padded = np.pad(m, ((0, 0), (1, 1)))
    d = np.diff(padded, axis=1)
    starts = np.argwhere(d == 1)
    ends = np.argwhere(d == -1)
    if len(starts) == 0:
        return 0.0
    return float(np.mean(ends[:, 1] - starts[:, 1]))
